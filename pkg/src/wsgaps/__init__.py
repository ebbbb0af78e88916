"""Exact-arithmetic Weierstrass semigroups, gaps and pure gaps at m+1
distinguished points on two families of maximal curves."""

from .curves import (
    CurveParams,
    DerivedConstants,
    MonomialExponents,
    curve,
    derive,
    monomial_valuation,
    validate_params,
)
from .semigroup import NumericalSemigroup, contains, from_generators

__all__ = [
    "CurveParams",
    "DerivedConstants",
    "MonomialExponents",
    "NumericalSemigroup",
    "contains",
    "curve",
    "derive",
    "from_generators",
    "monomial_valuation",
    "validate_params",
]
