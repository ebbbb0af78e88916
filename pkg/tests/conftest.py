"""Shared fixtures and the independent coin-problem oracle."""

import pytest

from wsgaps.curves import curve
from wsgaps.sweep import sweep_instances


@pytest.fixture(scope="session")
def y231():
    return curve("Y", q=2, n=3, s=1)


@pytest.fixture(scope="session")
def y233():
    return curve("Y", q=2, n=3, s=3)


@pytest.fixture(scope="session")
def x21131():
    return curve("X", p=2, a=1, b=1, n=3, s=1)


@pytest.fixture(scope="session")
def x22313():
    # b < a, so pb = 2 while q = 4
    return curve("X", p=2, a=2, b=1, n=3, s=13)


@pytest.fixture(scope="session")
def sweep():
    return sweep_instances()


def dp_members(gens, limit):
    """Coin-problem DP: the set of representable integers in [0, limit]."""
    reach = [False] * (limit + 1)
    reach[0] = True
    for x in range(1, limit + 1):
        reach[x] = any(x >= g and reach[x - g] for g in gens)
    return {x for x in range(limit + 1) if reach[x]}
