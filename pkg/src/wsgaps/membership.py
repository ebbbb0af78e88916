"""Partial order, least upper bounds and semigroup membership decisions.

Membership in the generalized semigroup is decided coordinate by
coordinate: a vector belongs iff every coordinate r admits an absolute
maximal element agreeing with it at r and dominated elsewhere.  Because the
absolute maximal set is exactly GammaFamily union ThetaFamily, the witness
search reduces to forcing the family parameters from the residue of the
target coordinate mod (q+1)M; no box enumeration is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .curves import DerivedConstants, check_m
from .errors import EmptyInput, LengthMismatch
from .maximal import (
    GammaFamily,
    MaximalElement,
    ThetaFamily,
    alpha_coord0,
    index_pairs,
    pair_from_residue,
    realize,
)


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    witnesses: tuple[MaximalElement, ...] | None  # one per coordinate when member
    failing_coordinate: int | None


def lub(vectors) -> tuple[int, ...]:
    """Componentwise maximum of a nonempty collection of equal-length vectors."""
    vectors = list(vectors)
    if not vectors:
        raise EmptyInput("lub of an empty collection")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise LengthMismatch("vectors of unequal length")
    return tuple(max(v[i] for v in vectors) for i in range(n))


def _lex_min_ks(
    kmax: list[int], fixed: dict[int, int], total: int, exact: bool = True
) -> tuple[int, ...] | None:
    """Lexicographically smallest ks with ks[p] <= kmax[p] (p free),
    ks[p] = fixed[p] (p fixed) and sum(ks) == total (>= total when
    exact=False); None if infeasible."""
    free = [p for p in range(len(kmax)) if p not in fixed]
    need = total - sum(fixed.values())
    if need > sum(kmax[p] for p in free):
        return None
    if not free:
        ok = need == 0 if exact else need <= 0
        return tuple(fixed[p] for p in range(len(kmax))) if ok else None
    ks = dict(fixed)
    for idx, p in enumerate(free):
        later = sum(kmax[u] for u in free[idx + 1 :])
        ks[p] = need - later
        need = later
    return tuple(ks[p] for p in range(len(kmax)))


@lru_cache(maxsize=None)
def _pairs_by_coord0_residue(dc: DerivedConstants, m: int):
    """Index pairs grouped by first-coordinate residue mod e, lex order kept
    within each class.  Lets the r = 0 witness scan touch only the pairs
    whose first coordinate can match the target at all."""
    groups: dict[int, list] = {}
    for pair in index_pairs(dc):
        a0 = alpha_coord0(dc, m, pair)
        groups.setdefault(a0 % dc.e, []).append((pair, a0))
    return {rho: tuple(v) for rho, v in groups.items()}


def nabla_witness(
    dc: DerivedConstants,
    m: int,
    alpha: tuple[int, ...],
    r: int,
    use_theta: bool = True,
) -> MaximalElement | None:
    """An absolute maximal gamma with gamma_r = alpha_r and gamma <= alpha.

    Returns None when no such element exists.  use_theta=False drops the
    ThetaFamily witnesses; it exists only for the mutation harness and makes
    the procedure deliberately incomplete.
    """
    check_m(dc, m)
    if len(alpha) != m + 1:
        raise LengthMismatch(f"expected a vector of length {m + 1}")
    e = dc.e

    if r != 0:
        rho = alpha[r] % e
        if rho == 0:
            if not use_theta:
                return None
            kmax = [alpha[t + 1] // e for t in range(m)]
            fixed = {r - 1: alpha[r] // e}
            smin = -(alpha[0] // e)  # gamma_0 = -e*sum(ks) <= alpha_0
            ks = _lex_min_ks(kmax, fixed, smin, exact=False)
            return ThetaFamily(ks) if ks is not None else None
        pair = pair_from_residue(dc, rho)
        a0 = alpha_coord0(dc, m, pair)
        kmax = [(alpha[t + 1] - rho) // e for t in range(m)]
        fixed = {r - 1: (alpha[r] - rho) // e}
        smin = -((alpha[0] - a0) // e)  # ceil((a0 - alpha_0)/e)
        ks = _lex_min_ks(kmax, fixed, smin, exact=False)
        return GammaFamily(pair, ks) if ks is not None else None

    # r = 0: scan matching-residue index pairs in lexicographic order,
    # ThetaFamily last.
    for pair, a0 in _pairs_by_coord0_residue(dc, m).get(alpha[0] % e, ()):
        rho = pair[0] * dc.M + pair[1]
        kmax = [(alpha[t + 1] - rho) // e for t in range(m)]
        ks = _lex_min_ks(kmax, {}, (a0 - alpha[0]) // e)
        if ks is not None:
            return GammaFamily(pair, ks)
    if use_theta and alpha[0] % e == 0:
        kmax = [alpha[t + 1] // e for t in range(m)]
        ks = _lex_min_ks(kmax, {}, -alpha[0] // e)
        if ks is not None:
            return ThetaFamily(ks)
    return None


def in_generalized_H(
    dc: DerivedConstants, m: int, alpha, use_theta: bool = True
) -> MembershipVerdict:
    """Decide membership in the generalized semigroup at (P_inf, P_1..P_m)."""
    alpha = tuple(alpha)
    witnesses: dict[int, MaximalElement] = {}
    # Affine coordinates first: their witness parameters are fully forced,
    # while coordinate 0 needs a scan over all index pairs.
    for r in list(range(1, m + 1)) + [0]:
        w = nabla_witness(dc, m, alpha, r, use_theta=use_theta)
        if w is None:
            return MembershipVerdict(member=False, witnesses=None, failing_coordinate=r)
        witnesses[r] = w
    ordered = tuple(witnesses[r] for r in range(m + 1))
    assert lub(realize(dc, m, w) for w in ordered) == alpha
    return MembershipVerdict(member=True, witnesses=ordered, failing_coordinate=None)


def in_classical_H(dc: DerivedConstants, m: int, alpha, use_theta: bool = True) -> bool:
    alpha = tuple(alpha)
    return all(a >= 0 for a in alpha) and in_generalized_H(dc, m, alpha, use_theta=use_theta).member


def one_point_gaps_at_P1(dc: DerivedConstants) -> tuple[int, ...]:
    """Gap sequence of the one-point semigroup at P_1, via the witness test
    at coordinate 1 with nothing allowed at P_inf."""
    g = dc.genus
    out = tuple(
        b for b in range(2 * g + 1) if nabla_witness(dc, 1, (0, b), 1) is None
    )
    assert len(out) == g
    return out
