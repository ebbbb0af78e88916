"""Closed-form families of maximal elements of the generalized semigroup.

Four parameterized families are realized as integer vectors indexed by
(P_inf, P_1, ..., P_m):

* GammaFamily   -- absolute maximal elements (index pair + lattice shifts);
* ThetaFamily   -- the pure lattice translates of the zero vector, which are
                   absolute maximal as well (only constants have no poles);
* DeltaFamily   -- relative maximal elements carrying an index pair;
* LambdaZeroFamily -- the remaining relative maximal elements.

Index pairs (i, j) run over [0, q] x [1, M] minus (q, M); the map
(i, j) -> i*M + j is a bijection onto [1, (q+1)M - 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .curves import DerivedConstants, check_m
from .errors import BadIndexPair, LengthMismatch


@dataclass(frozen=True)
class GammaFamily:
    pair: tuple[int, int]
    ks: tuple[int, ...]


@dataclass(frozen=True)
class ThetaFamily:
    ks: tuple[int, ...]


@dataclass(frozen=True)
class DeltaFamily:
    pair: tuple[int, int]
    ks: tuple[int, ...]


@dataclass(frozen=True)
class LambdaZeroFamily:
    ks: tuple[int, ...]


MaximalElement = GammaFamily | ThetaFamily | DeltaFamily | LambdaZeroFamily


def check_pair(dc: DerivedConstants, pair: tuple[int, int]) -> None:
    i, j = pair
    if not (0 <= i <= dc.q and 1 <= j <= dc.M) or (i, j) == (dc.q, dc.M):
        raise BadIndexPair(f"(i, j) = {pair} outside [0,{dc.q}] x [1,{dc.M}] \\ ({dc.q},{dc.M})")


def index_pairs(dc: DerivedConstants):
    """All admissible (i, j), in lexicographic order."""
    for i in range(dc.q + 1):
        for j in range(1, dc.M + 1):
            if (i, j) != (dc.q, dc.M):
                yield (i, j)


def pair_from_residue(dc: DerivedConstants, rho: int) -> tuple[int, int]:
    """Inverse of (i, j) -> i*M + j for rho in [1, e - 1]."""
    if not 1 <= rho <= dc.e - 1:
        raise BadIndexPair(f"residue {rho} outside [1, {dc.e - 1}]")
    i = (rho - 1) // dc.M
    return (i, rho - i * dc.M)


def alpha_coord0(dc: DerivedConstants, m: int, pair: tuple[int, int]) -> int:
    i, j = pair
    return ((dc.q**2 - m * dc.pb) * dc.e - i * dc.q * dc.M - j * dc.q**3) // dc.pb


def alpha_element(dc: DerivedConstants, m: int, pair: tuple[int, int]) -> tuple[int, ...]:
    """The absolute maximal element in the fundamental region for (i, j)."""
    check_m(dc, m)
    check_pair(dc, pair)
    i, j = pair
    return (alpha_coord0(dc, m, pair),) + (i * dc.M + j,) * m


def gamma_hat_in_C(dc: DerivedConstants, m: int) -> set[tuple[int, ...]]:
    """Absolute maximals inside the fundamental region: e vectors incl. 0."""
    check_m(dc, m)
    out = {(0,) * (m + 1)}
    for pair in index_pairs(dc):
        out.add(alpha_element(dc, m, pair))
    return out


def lambda_hat_in_C(dc: DerivedConstants, m: int) -> set[tuple[int, ...]]:
    """Relative maximals inside the fundamental region: e vectors."""
    check_m(dc, m)
    out = {((m - 1) * dc.e,) + (0,) * m}
    for pair in index_pairs(dc):
        i, j = pair
        c0 = ((dc.q**2 - dc.pb) * dc.e - i * dc.q * dc.M - j * dc.q**3) // dc.pb
        out.add((c0,) + (i * dc.M + j,) * m)
    return out


def realize(dc: DerivedConstants, m: int, elem: MaximalElement) -> tuple[int, ...]:
    """Evaluate a tagged family member to its point vector."""
    check_m(dc, m)
    ks = elem.ks
    if len(ks) != m:
        raise LengthMismatch(f"expected {m} shift parameters, got {len(ks)}")
    ksum = sum(ks)
    if isinstance(elem, ThetaFamily):
        return (-ksum * dc.e,) + tuple(k * dc.e for k in ks)
    if isinstance(elem, LambdaZeroFamily):
        return ((m - 1 - ksum) * dc.e,) + tuple(k * dc.e for k in ks)
    check_pair(dc, elem.pair)
    i, j = elem.pair
    rho = i * dc.M + j
    if isinstance(elem, GammaFamily):
        c0 = ((dc.q**2 - m * dc.pb - dc.pb * ksum) * dc.e - i * dc.q * dc.M - j * dc.q**3) // dc.pb
    else:  # DeltaFamily
        c0 = ((dc.q**2 - dc.pb * (1 + ksum)) * dc.e - i * dc.q * dc.M - j * dc.q**3) // dc.pb
    return (c0,) + tuple(k * dc.e + rho for k in ks)


def tau(dc: DerivedConstants, pair: tuple[int, int]) -> int:
    """Largest shift sum keeping the Delta first coordinate nonnegative.

    Floor division toward -inf, so negative numerators exclude the pair.
    """
    check_pair(dc, pair)
    i, j = pair
    return (dc.q**3 * (dc.M - j) + dc.q * dc.M * (dc.q - i) - dc.pb * dc.e) // (dc.pb * dc.e)


def _ks_with_sum_at_most(m: int, total: int):
    """All k in N_0^m with sum(k) <= total, lexicographic order."""
    if total < 0:
        return
    if m == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _ks_with_sum_at_most(m - 1, total - first):
            yield (first,) + rest


def enumerate_classical_Gamma(dc: DerivedConstants, m: int) -> set[tuple[int, ...]]:
    """GammaFamily realizations with every coordinate >= 0, plus the zero vector.

    The bound on the shift sum comes from first-coordinate nonnegativity;
    coordinates 1..m are nonnegative iff every k is.
    """
    check_m(dc, m)
    out = {(0,) * (m + 1)}
    for pair in index_pairs(dc):
        i, j = pair
        smax = ((dc.q**2 - m * dc.pb) * dc.e - i * dc.q * dc.M - j * dc.q**3) // (dc.pb * dc.e)
        for ks in _ks_with_sum_at_most(m, smax):
            out.add(realize(dc, m, GammaFamily(pair, ks)))
    return out


def enumerate_classical_Lambda(dc: DerivedConstants, m: int) -> set[tuple[int, ...]]:
    """Relative maximals with all coordinates >= 0."""
    check_m(dc, m)
    out = set()
    for pair in index_pairs(dc):
        for ks in _ks_with_sum_at_most(m, tau(dc, pair)):
            out.add(realize(dc, m, DeltaFamily(pair, ks)))
    for ks in _ks_with_sum_at_most(m, m - 1):
        out.add(realize(dc, m, LambdaZeroFamily(ks)))
    return out


def count_Lambda(dc: DerivedConstants, m: int) -> int:
    """Closed-form cardinality of the classical relative-maximal set."""
    check_m(dc, m)
    total = comb(2 * m - 1, m)
    for pair in index_pairs(dc):
        t = tau(dc, pair)
        if t >= 0:
            total += comb(t + m, m)
    return total
