"""Exact expression kernel: Gaussian rationals, rational functions in two
variables, truncated jets, and the expression grammar."""

from .jets import ChartPoint, SeriesJet, bidegrees, jet
from .parser import parse_expr
from .poly import Poly, poly_gcd
from .rational import DEFAULT_NAMES, Expr, const, diff, is_zero, subs, var
from .scalar import I, ONE, ZERO, Scalar, as_scalar

__all__ = [
    "ChartPoint", "SeriesJet", "bidegrees", "jet", "parse_expr", "Poly", "poly_gcd",
    "DEFAULT_NAMES", "Expr", "const", "diff", "is_zero", "subs", "var",
    "I", "ONE", "ZERO", "Scalar", "as_scalar",
]
