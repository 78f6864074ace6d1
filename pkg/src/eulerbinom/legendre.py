"""Legendre polynomials from the Rodrigues formula and three binomial-sum forms.

All results are :class:`MPoly` values in the single variable ``x``.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Dict

from .exact import ONE, X, MPoly, Var, gen_binomial, sum_polys

UniPoly = MPoly

HALF = Fraction(1, 2)


def is_univariate(p: MPoly) -> bool:
    return p.variables() <= {Var.X}


def legendre_rodrigues(n: int) -> UniPoly:
    """(1 / (2^n n!)) d^n/dx^n (x^2 - 1)^n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = ONE
    base = X * X - 1
    for _ in range(n):
        p = p * base
    for _ in range(n):
        p = p.diff(Var.X)
    return p * Fraction(1, 2 ** n * factorial(n))


def _c(n: int, k: int) -> MPoly:
    return gen_binomial(MPoly.const(n), k)


def legendre_rep20(n: int) -> UniPoly:
    u = (X - 1) * HALF
    return sum_polys(_c(n, k) * _c(n + k, k) * u ** k for k in range(n + 1))


def legendre_rep21(n: int) -> UniPoly:
    v = (X + 1) * HALF
    return sum_polys(
        _c(n, k) * _c(n + k, k) * (-1 if (n - k) % 2 else 1) * v ** k for k in range(n + 1)
    )


def legendre_rep22(n: int) -> UniPoly:
    # ((x-1)/2)^n * sum C(n,k)^2 ((x+1)/(x-1))^k with the ratio cleared
    u = (X - 1) * HALF
    v = (X + 1) * HALF
    return sum_polys(_c(n, k) ** 2 * u ** (n - k) * v ** k for k in range(n + 1))


REPRESENTATIONS: Dict[str, Callable[[int], UniPoly]] = {
    "rodrigues": legendre_rodrigues,
    "rep20": legendre_rep20,
    "rep21": legendre_rep21,
    "rep22": legendre_rep22,
}


def reflect(p: UniPoly) -> UniPoly:
    """p(-x)."""
    return p.subs({Var.X: -X})
