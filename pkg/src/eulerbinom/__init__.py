"""Exact binomial transforms, Euler series transformations and binomial identity checks."""

from .exact import ALPHA, BETA, Q, X, Y, Z, MPoly, Var, gen_binomial, poly_add, poly_eval, poly_mul
from .series import Series, series_from_coeffs

__all__ = [
    "ALPHA", "BETA", "Q", "X", "Y", "Z",
    "MPoly", "Var", "Series",
    "gen_binomial", "poly_add", "poly_eval", "poly_mul", "series_from_coeffs",
]
