"""Truncated formal power series in ``t`` with polynomial coefficients.

The series variable is structural: coefficient ``m`` of ``t^m`` is stored at
list index ``m`` and never appears inside an :class:`MPoly`.  Every series
carries its truncation order and binary operations return the smaller of
the two orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .exact import MPoly, Scalar, as_poly, format_poly, gen_binomial, int_binomial

PolyLike = Union[MPoly, Scalar, str]


class EmptyCoefficients(ValueError):
    pass


class InsufficientOrder(ValueError):
    pass


@dataclass(frozen=True)
class Series:
    coeffs: Tuple[MPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise EmptyCoefficients("a series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> MPoly:
        return self.coeffs[m]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, n: int) -> "Series":
        if n > self.order:
            raise InsufficientOrder(f"cannot raise order {self.order} to {n}")
        return Series(self.coeffs[: n + 1])

    def agrees_with(self, other: "Series") -> Tuple[bool, int]:
        """Compare coefficient-wise up to the common order; returns (equal, order used)."""
        n = min(self.order, other.order)
        return all(self.coeffs[m] == other.coeffs[m] for m in range(n + 1)), n

    def map(self, fn) -> "Series":
        return Series(tuple(fn(c) for c in self.coeffs))

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def __str__(self):
        return format_series(self)


def series_from_coeffs(coeffs: Sequence[PolyLike]) -> Series:
    if len(coeffs) == 0:
        raise EmptyCoefficients("a series needs at least one coefficient")
    return Series(tuple(as_poly(c) for c in coeffs))


def negbinom_series(base: PolyLike, exponent_plus_one: PolyLike, N: int) -> Series:
    """Truncation of (1 - base*t)^-(alpha+1), alpha = ``exponent_plus_one``.

    Coefficient k is C(alpha+k, k) * base^k.
    """
    base, alpha = as_poly(base), as_poly(exponent_plus_one)
    coeffs = []
    power = MPoly.const(1)
    for k in range(N + 1):
        coeffs.append(gen_binomial(alpha + k, k) * power)
        power = power * base
    return Series(tuple(coeffs))


def binom_power_series(z: PolyLike, exponent: PolyLike, N: int) -> Series:
    """Truncation of (1 + z*t)^exponent, coefficient k = C(exponent, k) z^k."""
    z, exponent = as_poly(z), as_poly(exponent)
    coeffs = []
    power = MPoly.const(1)
    for k in range(N + 1):
        coeffs.append(gen_binomial(exponent, k) * power)
        power = power * z
    return Series(tuple(coeffs))


def series_mul(f: Series, g: Series) -> Series:
    n = min(f.order, g.order)
    out = []
    for m in range(n + 1):
        acc = MPoly()
        for k in range(m + 1):
            if f.coeffs[k] and g.coeffs[m - k]:
                acc = acc + f.coeffs[k] * g.coeffs[m - k]
        out.append(acc)
    return Series(tuple(out))


def series_substitute_mobius(f: Series, x: PolyLike, N: int) -> Series:
    """Compute f(t / (1 - x t)) truncated at order ``N``.

    Each a_m t^m (1 - x t)^-m is expanded separately:
    [t^n] = sum over m of a_m * C(n-1, n-m) * x^(n-m).
    """
    if f.order < N:
        raise InsufficientOrder(f"series of order {f.order} cannot be substituted to order {N}")
    x = as_poly(x)
    xpow = [MPoly.const(1)]
    for _ in range(N):
        xpow.append(xpow[-1] * x)
    out = []
    for n in range(N + 1):
        acc = MPoly()
        for m in range(n + 1):
            a = f.coeffs[m]
            if not a:
                continue
            # coefficient of t^(n-m) in (1 - x t)^-m
            c = int_binomial(n - 1, n - m)
            if c:
                acc = acc + a * xpow[n - m] * c
        out.append(acc)
    return Series(tuple(out))


def format_series(s: Series) -> str:
    return "\n".join(f"t^{m}: {format_poly(c)}" for m, c in enumerate(s.coeffs))
