"""Closed-form maximal-element families and the counting formula."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wsgaps.curves import curve
from wsgaps.errors import BadIndexPair, LengthMismatch
from wsgaps.maximal import (
    DeltaFamily,
    GammaFamily,
    LambdaZeroFamily,
    ThetaFamily,
    alpha_element,
    count_Lambda,
    enumerate_classical_Gamma,
    enumerate_classical_Lambda,
    gamma_hat_in_C,
    index_pairs,
    lambda_hat_in_C,
    pair_from_residue,
    realize,
    tau,
)

Y231_GAMMA_HAT = {
    (0, 0), (19, 1), (11, 2), (3, 3), (13, 4), (5, 5), (-3, 6), (7, 7), (-1, 8),
}
X21131_GAMMA_HAT = {
    (0, 0), (5, 1), (1, 2), (-3, 3), (2, 4), (-2, 5), (-6, 6), (-1, 7), (-5, 8),
}


def test_alpha_element(y231, x21131):
    assert alpha_element(y231, 1, (0, 1)) == (19, 1)
    assert alpha_element(x21131, 1, (0, 1)) == (5, 1)
    assert alpha_element(y231, 2, (0, 1)) == (10, 1, 1)


def test_alpha_element_m_shift(sweep):
    for dc in sweep:
        for m in range(2, dc.max_m + 1):
            for pair in index_pairs(dc):
                assert (
                    alpha_element(dc, m, pair)[0]
                    == alpha_element(dc, m - 1, pair)[0] - dc.e
                )


def test_gamma_hat_in_C_y231(y231):
    assert gamma_hat_in_C(y231, 1) == Y231_GAMMA_HAT


def test_gamma_hat_in_C_x21131(x21131):
    assert gamma_hat_in_C(x21131, 1) == X21131_GAMMA_HAT


def test_gamma_hat_in_C_cardinality(sweep):
    for dc in sweep:
        for m in range(1, dc.max_m + 1):
            assert len(gamma_hat_in_C(dc, m)) == dc.e


def test_gamma_hat_in_C_no_dominated_coordinate_ties(sweep):
    """No absolute maximal may dominate another while agreeing with it in
    some coordinate: the smaller one would witness a nonempty nabla set of
    the larger.  (Strict domination in every coordinate can and does occur.)"""
    for dc in sweep:
        if dc.e > 120:
            continue
        vecs = sorted(gamma_hat_in_C(dc, min(2, dc.max_m)))
        for u in vecs:
            for v in vecs:
                if u != v and all(x <= y for x, y in zip(u, v)):
                    assert all(x < y for x, y in zip(u, v)), (u, v)


def test_lambda_hat_in_C(y231):
    assert lambda_hat_in_C(y231, 1) == Y231_GAMMA_HAT  # formulas coincide at m=1
    assert (9, 0, 0) in lambda_hat_in_C(y231, 2)
    assert len(lambda_hat_in_C(y231, 2)) == y231.e


def test_realize_examples(y231):
    assert realize(y231, 1, GammaFamily((0, 1), (1,))) == (10, 10)
    assert realize(y231, 1, ThetaFamily((0,))) == (0, 0)
    assert realize(y231, 2, ThetaFamily((0, 0))) == (0, 0, 0)
    assert realize(y231, 1, DeltaFamily((0, 1), (2,))) == (1, 19)
    assert realize(y231, 2, LambdaZeroFamily((1, 0))) == (0, 9, 0)
    assert realize(y231, 2, LambdaZeroFamily((0, 0))) == (9, 0, 0)


def test_realize_rejects_bad_inputs(y231):
    with pytest.raises(LengthMismatch):
        realize(y231, 1, GammaFamily((0, 1), (1, 2)))
    with pytest.raises(BadIndexPair):
        realize(y231, 1, GammaFamily((y231.q, y231.M), (0,)))


def test_tau_examples(y231, x21131):
    assert tau(y231, (0, 1)) == 2  # (16 + 12 - 9) // 9
    assert tau(x21131, (0, 3)) == -1  # (0 + 12 - 18) floored by 18
    with pytest.raises(BadIndexPair):
        tau(y231, (y231.q, y231.M))


def test_pair_from_residue_bijection(sweep):
    for dc in sweep:
        pairs = list(index_pairs(dc))
        assert len(pairs) == dc.e - 1
        for pair in pairs:
            rho = pair[0] * dc.M + pair[1]
            assert 1 <= rho <= dc.e - 1
            assert pair_from_residue(dc, rho) == pair
        with pytest.raises(BadIndexPair):
            pair_from_residue(dc, 0)
        with pytest.raises(BadIndexPair):
            pair_from_residue(dc, dc.e)


def test_classical_gamma_y231(y231):
    got = enumerate_classical_Gamma(y231, 1)
    assert got == {
        (0, 0), (19, 1), (10, 10), (1, 19), (11, 2), (2, 11),
        (3, 3), (13, 4), (4, 13), (5, 5), (7, 7),
    }


def test_classical_gamma_x21131(x21131):
    assert enumerate_classical_Gamma(x21131, 1) == {(0, 0), (5, 1), (1, 2), (2, 4)}


def test_classical_gamma_nonnegative(sweep):
    for dc in sweep[:6]:
        for v in enumerate_classical_Gamma(dc, 1):
            assert all(x >= 0 for x in v)


def test_classical_lambda_y231(y231):
    lam = enumerate_classical_Lambda(y231, 1)
    assert lam == {
        (0, 0), (19, 1), (10, 10), (1, 19), (11, 2), (2, 11),
        (3, 3), (13, 4), (4, 13), (5, 5), (7, 7),
    }
    assert len(lam) == 11


def test_classical_lambda_x21131(x21131):
    assert enumerate_classical_Lambda(x21131, 1) == {(0, 0), (5, 1), (1, 2), (2, 4)}


def test_classical_lambda_m2_contains(y231):
    lam = enumerate_classical_Lambda(y231, 2)
    assert (0, 9, 0) in lam and (9, 0, 0) in lam


def test_count_lambda_examples(y231, x21131):
    assert count_Lambda(y231, 1) == 11
    assert count_Lambda(x21131, 1) == 4


def test_count_lambda_matches_enumeration(sweep):
    for dc in sweep:
        if dc.genus > 600:
            continue
        for m in range(1, min(2, dc.max_m) + 1):
            assert count_Lambda(dc, m) == len(enumerate_classical_Lambda(dc, m))


def test_delta_lambda_zero_injective(y231):
    """Collision scan over bounded shift parameters: distinct family
    parameters always realize distinct vectors."""
    seen = {}
    for m in (1, 2):
        seen.clear()
        for pair in index_pairs(y231):
            for ks in _all_ks(m, 3):
                elem = DeltaFamily(pair, ks)
                v = realize(y231, m, elem)
                assert seen.setdefault(v, elem) == elem
        for ks in _all_ks(m, 3):
            elem = LambdaZeroFamily(ks)
            v = realize(y231, m, elem)
            assert seen.setdefault(v, elem) == elem


def _all_ks(m, hi):
    if m == 1:
        return [(k,) for k in range(hi + 1)]
    return [(k1, k2) for k1 in range(hi + 1) for k2 in range(hi + 1)]


@settings(max_examples=150)
@given(st.integers(0, 7), st.integers(0, 5), st.integers(0, 5))
def test_gamma_family_coordinates(rho_off, k1, k2):
    """Realized GammaFamily vectors carry the index-pair residue in every
    affine coordinate and respect the shift lattice."""
    dc = curve("Y", q=2, n=3, s=1)
    rho = rho_off + 1  # in [1, e-1]
    pair = pair_from_residue(dc, rho)
    v = realize(dc, 2, GammaFamily(pair, (k1, k2)))
    assert v[1] == k1 * dc.e + rho
    assert v[2] == k2 * dc.e + rho
    base = alpha_element(dc, 2, pair)
    assert v[0] == base[0] - (k1 + k2) * dc.e
