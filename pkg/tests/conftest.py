import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from eulerbinom.exact import NVARS, MPoly, Var
from eulerbinom.series import Series


def rand_rat(rng, span=9, den=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_poly(rng, variables=(Var.X,), max_terms=3, max_deg=2):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * NVARS
        for v in variables:
            e[v] = rng.randint(0, max_deg)
        terms[tuple(e)] = rand_rat(rng)
    return MPoly(terms)


def rand_series(rng, order, variables=()):
    if variables:
        return Series(tuple(rand_poly(rng, variables) for _ in range(order + 1)))
    return Series(tuple(MPoly.const(rand_rat(rng)) for _ in range(order + 1)))


@pytest.fixture
def rng():
    return random.Random(20091231)


rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def small_polys(draw, variables=(Var.X, Var.Y, Var.ALPHA)):
    n = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n):
        e = [0] * NVARS
        for v in variables:
            e[v] = draw(st.integers(0, 2))
        terms[tuple(e)] = draw(rats)
    return MPoly(terms)
