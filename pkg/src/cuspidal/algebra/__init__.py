"""Exact rational scalars, polynomials, truncated series and binary forms."""

from .bivariate import X, Y, BiPoly, BinForm, homogenize_affine, pullback
from .rational import ONE, ZERO, Rat, format_rat, parse_rat, rat
from .series import PowSeries, series_reciprocal
from .unipoly import T, UniPoly, compose_square, exact_divide, poly_arith, taylor_shift

__all__ = [
    "Rat", "rat", "parse_rat", "format_rat", "ZERO", "ONE",
    "UniPoly", "T", "poly_arith", "exact_divide", "taylor_shift", "compose_square",
    "PowSeries", "series_reciprocal",
    "BiPoly", "BinForm", "X", "Y", "homogenize_affine", "pullback",
]
