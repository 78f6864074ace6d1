"""Binomial transform pair and the Euler-type series transformations.

Each transformation is computed one way here (series products and the
t/(1-xt) substitution) and has a coefficient-sum counterpart so tests can
check one characterization against the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from .exact import MPoly, as_poly, gen_binomial, int_binomial
from .series import (
    PolyLike,
    Series,
    binom_power_series,
    negbinom_series,
    series_from_coeffs,
    series_mul,
    series_substitute_mobius,
)


@dataclass(frozen=True)
class SeqView:
    terms: Tuple[MPoly, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("sequence must be non-empty")

    @classmethod
    def of(cls, values: Sequence[PolyLike]) -> "SeqView":
        return cls(tuple(as_poly(v) for v in values))

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]


SeqLike = Union[SeqView, Series, Sequence[PolyLike]]


def _terms(a: SeqLike) -> Tuple[MPoly, ...]:
    if isinstance(a, SeqView):
        return a.terms
    if isinstance(a, Series):
        return a.coeffs
    return SeqView.of(a).terms


def binomial_transform(a: SeqLike) -> SeqView:
    """b_m = sum_k C(m, k) a_k."""
    a = _terms(a)
    out = []
    for m in range(len(a)):
        acc = MPoly()
        for k in range(m + 1):
            if a[k]:
                acc = acc + a[k] * int_binomial(m, k)
        out.append(acc)
    return SeqView(tuple(out))


def inverse_binomial_transform(b: SeqLike) -> SeqView:
    """a_m = sum_k C(m, k) (-1)^(m-k) b_k."""
    b = _terms(b)
    out = []
    for m in range(len(b)):
        acc = MPoly()
        for k in range(m + 1):
            if b[k]:
                sign = -1 if (m - k) % 2 else 1
                acc = acc + b[k] * (sign * int_binomial(m, k))
        out.append(acc)
    return SeqView(tuple(out))


def euler_transform(f: Series) -> Series:
    """(1/(1-t)) f(t/(1-t)), truncated at the order of ``f``.

    Coefficient m equals the binomial transform of a_0..a_m at index m.
    """
    N = f.order
    geometric = series_from_coeffs([1] * (N + 1))
    return series_mul(geometric, series_substitute_mobius(f, 1, N))


def mul_binomial_power(f: Series, z: PolyLike, exponent: PolyLike) -> Series:
    """(1 + z t)^exponent * f(t), via a series product."""
    return series_mul(binom_power_series(z, exponent, f.order), f)


def mul_binomial_power_direct(f: Series, z: PolyLike, exponent: PolyLike) -> Series:
    """Same product as :func:`mul_binomial_power`, from the double sum
    sum_k C(exponent, n-k) a_k z^(n-k)."""
    z, exponent = as_poly(z), as_poly(exponent)
    out = []
    for n in range(f.order + 1):
        acc = MPoly()
        for k in range(n + 1):
            acc = acc + gen_binomial(exponent, n - k) * f.coeffs[k] * z ** (n - k)
        out.append(acc)
    return Series(tuple(out))


def generalized_euler_transform(f: Series, x: PolyLike, exponent: PolyLike) -> Series:
    """(1 - x t)^-(exponent+1) f(t/(1 - x t)), truncated at the order of ``f``."""
    N = f.order
    prefactor = negbinom_series(x, exponent, N)
    return series_mul(prefactor, series_substitute_mobius(f, x, N))


def generalized_euler_double_sum(f: Series, x: PolyLike, exponent: PolyLike) -> Series:
    """Coefficients sum_k C(exponent+n, n-k) x^(n-k) a_k, summed directly."""
    x, alpha = as_poly(x), as_poly(exponent)
    out = []
    for n in range(f.order + 1):
        acc = MPoly()
        for k in range(n + 1):
            acc = acc + gen_binomial(alpha + n, n - k) * x ** (n - k) * f.coeffs[k]
        out.append(acc)
    return Series(tuple(out))


def parse_sequence(text: str) -> List[Fraction]:
    """Read one rational per line (``p/q``, integer or decimal); ``#`` starts a comment."""
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(Fraction(line))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: not a rational number: {line!r}") from exc
    return values


def read_sequence(path: Union[str, Path]) -> List[Fraction]:
    return parse_sequence(Path(path).read_text())
