"""Euler acceleration of alternating series, exactly over the rationals.

The input is the list of positive parts ``c_k`` of ``sum_k (-1)^k c_k``.
The accelerated sum comes from the Euler transformation

    (1/(1-t)) g(t/(1-t)) = sum_m b_m t^m,   b_m = sum_k C(m,k) a_k,

applied to g(t) = sum_k a_k t^k with a_k = (-1)^k c_k.  At t = 1/2 the
inner argument t/(1-t) is 1, so

    g(1) = sum_m b_m / 2^(m+1).

Since b_m = (-1)^m sum_k C(m,k) (-1)^(m-k) c_k = (-1)^m Delta^m c_0,

    sum_k (-1)^k c_k = sum_m (-1)^m Delta^m c_0 / 2^(m+1).

Everything in this module stays a ``Fraction``; decimals are only produced
by :func:`to_decimal` for display.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import List, Optional, Sequence


class InsufficientTerms(ValueError):
    pass


def forward_differences(c: Sequence, m: int) -> List[Fraction]:
    """[Delta^0 c_0, ..., Delta^m c_0] from the difference table."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if len(c) < m + 1:
        raise InsufficientTerms(f"need {m + 1} terms, got {len(c)}")
    row = [Fraction(v) for v in c[: m + 1]]
    out = []
    for _ in range(m + 1):
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


@dataclass(frozen=True)
class AccelTable:
    c: List[Fraction]
    diffs: List[Fraction]
    plain_partials: List[Fraction]
    accel_partials: List[Fraction]
    reference: Optional[Fraction] = None

    @property
    def m(self) -> int:
        return len(self.diffs) - 1

    def plain_errors(self) -> List[Fraction]:
        return [abs(s - self.reference) for s in self.plain_partials]

    def accel_errors(self) -> List[Fraction]:
        return [abs(s - self.reference) for s in self.accel_partials]


def euler_accelerate(c: Sequence, m: int, reference=None) -> AccelTable:
    """Plain and Euler-accelerated partial sums of sum (-1)^k c_k using m differences.

    ``reference`` may be anything :class:`Fraction` accepts, including a
    decimal string; it is only stored for error reporting.
    """
    diffs = forward_differences(c, m)
    terms = [Fraction(v) for v in c[: m + 1]]
    plain, accel = [], []
    s = Fraction(0)
    for k, ck in enumerate(terms):
        s += -ck if k % 2 else ck
        plain.append(s)
    s = Fraction(0)
    for j, d in enumerate(diffs):
        step = d / 2 ** (j + 1)
        s += -step if j % 2 else step
        accel.append(s)
    ref = None if reference is None else Fraction(reference)
    return AccelTable(terms, diffs, plain, accel, ref)


def to_decimal(r: Fraction, digits: int) -> str:
    """Round ``r`` to ``digits`` places after the point, ties to even."""
    r = Fraction(r)
    scaled = r * 10 ** digits
    q, rem = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * rem
    if twice > scaled.denominator or (twice == scaled.denominator and q % 2):
        q += 1
    return str(Decimal(q).scaleb(-digits))
