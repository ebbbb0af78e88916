"""Command-line surface: formats, exit codes, round-trips, stability."""

import json

from wsgaps.cli import run

Y231 = ["--family", "Y", "--q", "2", "--n", "3", "--s", "1"]
X21131 = ["--family", "X", "--p", "2", "--a", "1", "--b", "1", "--n", "3", "--s", "1"]


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_params_y231(capsys):
    assert run(["params", *Y231]) == 0
    rec = _json(capsys)
    assert rec["schema_version"] == "1"
    assert rec["derived"]["genus"] == 10
    assert rec["derived"]["gens"] == [6, 8, 9]


def test_params_invalid_exit_2(capsys):
    assert run(["params", "--family", "X", "--p", "2", "--a", "1", "--b", "1",
                "--n", "3", "--s", "3"]) == 2
    assert "GenusNotPositive" in capsys.readouterr().err

    assert run(["params", "--family", "Y", "--q", "2", "--n", "3", "--s", "2"]) == 2
    assert "SNotDividing" in capsys.readouterr().err


def test_params_missing_flags_exit_2(capsys):
    assert run(["params", "--family", "Y", "--n", "3", "--s", "1"]) == 2
    assert "missing" in capsys.readouterr().err


def test_gamma_count(capsys):
    assert run(["gamma", *Y231, "--m", "1"]) == 0
    rec = _json(capsys)
    assert rec["payload"]["count"] == 9
    assert [0, 0] in rec["payload"]["vectors"]


def test_gaps_tsv_rows(capsys):
    assert run(["gaps", *X21131, "--m", "1", "--format", "tsv"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert len(rows) == 13
    assert all(len(r.split("\t")) == 2 for r in rows)


def test_member_false(capsys):
    assert run(["member", *Y231, "--m", "1", "--vector", "1,1"]) == 0
    payload = _json(capsys)["payload"]
    assert payload["member"] is False
    assert payload["failing_coordinate"] == 1


def test_member_bad_vector_exit_2(capsys):
    assert run(["member", *Y231, "--m", "1", "--vector", "1,1,1"]) == 2
    capsys.readouterr()


def test_counts(capsys):
    assert run(["counts", *Y231, "--m", "1"]) == 0
    payload = _json(capsys)["payload"]
    assert payload["lambda_count"] == 11
    assert payload["gap_count_upper_bound"] == 150
    assert payload["two_point_gap_count"] == 115


def test_verify_exit_0(capsys):
    assert run(["verify", *Y231, "--m", "1"]) == 0
    payload = _json(capsys)["payload"]
    assert payload["pass"] is True


def test_bad_m_exit_2(capsys):
    assert run(["gamma", *Y231, "--m", "5"]) == 2
    assert "BadM" in capsys.readouterr().err


def test_output_stability(capsys):
    run(["gaps", *Y231, "--m", "1"])
    first = capsys.readouterr().out
    run(["gaps", *Y231, "--m", "1"])
    assert capsys.readouterr().out == first


def test_round_trip_gaps_are_nonmembers(capsys):
    run(["gaps", *X21131, "--m", "1"])
    vectors = _json(capsys)["payload"]["vectors"]
    for v in vectors:
        run(["member", *X21131, "--m", "1", "--vector", ",".join(map(str, v))])
        assert _json(capsys)["payload"]["classical_member"] is False


def test_round_trip_gamma_are_members(capsys):
    run(["gamma", *Y231, "--m", "1", "--classical"])
    vectors = _json(capsys)["payload"]["vectors"]
    for v in vectors:
        run(["member", *Y231, "--m", "1", "--vector", ",".join(map(str, v))])
        assert _json(capsys)["payload"]["member"] is True
