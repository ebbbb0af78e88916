"""Curve-family parameters, derived constants and divisor valuation tables.

Two families of maximal curves are supported, tagged "X" and "Y".  Family X
is parameterized by a prime p and integers a, b, n, s with q = p^a; family Y
is parameterized directly by a prime power q and integers n, s, and behaves
exactly like family X with p^b = 1.  Affine points are purely symbolic: only
the valuations of the three generating functions z, y and x - alpha at the
distinguished points matter, never coordinates over a finite field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadM,
    BNotDividingA,
    GenusNotPositive,
    LengthMismatch,
    NEven,
    NonPrimeP,
    ParameterError,
    SNotDividing,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_power_base(n: int) -> int | None:
    """Return p if n = p^k for a prime p, else None."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            return n if _is_prime(n) else None
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


@dataclass(frozen=True)
class CurveParams:
    """Validated parameters of one curve instance."""

    family: str  # "X" or "Y"
    q: int
    n: int
    s: int
    p: int | None = None  # family X only
    a: int | None = None
    b: int | None = None


@dataclass(frozen=True)
class DerivedConstants:
    """All exact integers derived from a CurveParams.

    gens stores the semigroup generator triple ((q/p^b)M, q^3/p^b, (q+1)M)
    verbatim, without minimization.
    """

    params: CurveParams
    q: int
    pb: int
    M: int
    e: int  # (q+1)M
    gens: tuple[int, int, int]
    genus: int
    frobenius: int
    canonical_degree: int
    max_m: int


@dataclass(frozen=True)
class MonomialExponents:
    """Exponent tuple of z^a_z * y^b_y * prod (x - alpha_l)^c_l."""

    a_z: int
    b_y: int
    c: tuple[int, ...]


def _genus_numerator(q: int, pb: int, n: int, s: int) -> int:
    return q ** (n + 2) - pb * q**n - s * q**3 + q**2 + (s - 1) * pb


def validate_params(
    family: str,
    *,
    n: int,
    s: int,
    p: int | None = None,
    a: int | None = None,
    b: int | None = None,
    q: int | None = None,
) -> CurveParams:
    """Validate raw integers, naming the first violated condition."""
    if family not in ("X", "Y"):
        raise ParameterError(f"unknown family {family!r}")
    if n % 2 == 0:
        raise NEven(f"n must be odd, got {n}")
    if n < 3:
        raise ParameterError(f"n must be >= 3, got {n}")
    if s < 1:
        raise ParameterError(f"s must be positive, got {s}")

    if family == "X":
        if p is None or a is None or b is None:
            raise ParameterError("family X requires p, a and b")
        if p < 2 or a < 1 or b < 1:
            raise ParameterError("p, a, b must be positive")
        if not _is_prime(p):
            raise NonPrimeP(f"p = {p} is not prime")
        if a % b != 0:
            raise BNotDividingA(f"b = {b} does not divide a = {a}")
        q = p**a
        pb = p**b
    else:
        if q is None:
            raise ParameterError("family Y requires q")
        if p is not None or a is not None or b is not None:
            raise ParameterError("family Y takes no p, a, b")
        if _prime_power_base(q) is None:
            raise NonPrimeP(f"q = {q} is not a prime power")
        pb = 1

    num = q**n + 1
    if num % (q + 1) != 0:
        raise SNotDividing(f"q + 1 does not divide q^n + 1 (n = {n})")
    if (num // (q + 1)) % s != 0:
        raise SNotDividing(f"s = {s} does not divide (q^n + 1)/(q + 1) = {num // (q + 1)}")

    gnum = _genus_numerator(q, pb, n, s)
    if gnum % (2 * s * pb) != 0:
        raise ParameterError("genus formula is not an exact integer")  # unreachable for valid input
    if gnum // (2 * s * pb) <= 0:
        raise GenusNotPositive(f"genus evaluates to {gnum // (2 * s * pb)}")

    if family == "X":
        return CurveParams(family="X", q=q, n=n, s=s, p=p, a=a, b=b)
    return CurveParams(family="Y", q=q, n=n, s=s)


def derive(params: CurveParams) -> DerivedConstants:
    """Compute every derived constant of a validated instance, exactly."""
    q, n, s = params.q, params.n, params.s
    pb = params.p ** params.b if params.family == "X" else 1
    M = (q**n + 1) // (s * (q + 1))
    e = (q + 1) * M
    gens = ((q // pb) * M, q**3 // pb, e)
    genus = _genus_numerator(q, pb, n, s) // (2 * s * pb)
    return DerivedConstants(
        params=params,
        q=q,
        pb=pb,
        M=M,
        e=e,
        gens=gens,
        genus=genus,
        frobenius=2 * genus - 1,
        canonical_degree=2 * genus - 2,
        max_m=q // pb,
    )


def curve(family: str, **raw) -> DerivedConstants:
    """validate_params followed by derive, in one call."""
    return derive(validate_params(family, **raw))


def check_m(dc: DerivedConstants, m: int) -> None:
    if not 1 <= m <= dc.max_m:
        raise BadM(f"m = {m} out of range [1, {dc.max_m}]")


def monomial_valuation(
    dc: DerivedConstants, m: int, exps: MonomialExponents
) -> tuple[tuple[int, ...], bool]:
    """Valuation vector of a monomial at (P_inf, P_1, ..., P_m).

    coords[0] is the pole order at P_inf (i.e. minus the valuation) and
    coords[l] = -v_{P_l}.  The regular flag is true iff the monomial has
    poles only inside {P_inf, P_1, ..., P_m}: the z exponent must be
    nonnegative, and unless every beta = 0 point is in the tuple
    (m = max_m), the valuation a_z + b_y*M at the remaining beta = 0
    points must be nonnegative too.
    """
    check_m(dc, m)
    if len(exps.c) != m:
        raise LengthMismatch(f"expected {m} x-exponents, got {len(exps.c)}")
    w = exps.a_z + exps.b_y * dc.M
    coord0 = (
        exps.a_z * (dc.q**3 // dc.pb)
        + exps.b_y * (dc.q // dc.pb) * dc.M
        + dc.e * sum(exps.c)
    )
    coords = (coord0,) + tuple(-(w + cl * dc.e) for cl in exps.c)
    regular = exps.a_z >= 0 and (m == dc.max_m or w >= 0)
    return coords, regular
