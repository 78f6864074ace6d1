"""Exact rationals and sparse multivariate polynomials.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Polynomials live in the fixed ring
``Q[alpha, beta, q, x, y, z]`` and are stored as a map from 6-long exponent
tuples to nonzero ``Fraction`` coefficients.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Mapping, Tuple, Union

Rat = Fraction
Exp = Tuple[int, int, int, int, int, int]
Scalar = Union[int, Fraction]


class Var(enum.IntEnum):
    """The six polynomial variables, in canonical printing order."""

    ALPHA = 0
    BETA = 1
    Q = 2
    X = 3
    Y = 4
    Z = 5

    @property
    def symbol(self) -> str:
        return self.name.lower()


NVARS = len(Var)
ZERO_EXP: Exp = (0,) * NVARS


class MissingVariable(KeyError):
    """Raised by :func:`poly_eval` when a variable of the polynomial is unassigned."""


class MPoly:
    """Immutable sparse polynomial with rational coefficients.

    Build values with :meth:`const` and :meth:`var` and combine them with the
    usual operators; ints and Fractions are coerced on either side.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Scalar] | None = None):
        clean: Dict[Exp, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != NVARS:
                    raise ValueError(f"exponent vector must have {NVARS} entries: {e!r}")
                if c:
                    clean[tuple(e)] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exp, Fraction]) -> "MPoly":
        # caller guarantees canonical form (no zero coefficients)
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        return cls._raw({ZERO_EXP: Fraction(c)} if c else {})

    @classmethod
    def var(cls, v: Var, power: int = 1) -> "MPoly":
        e = [0] * NVARS
        e[v] = power
        return cls._raw({tuple(e): Fraction(1)})

    @property
    def terms(self) -> Dict[Exp, Fraction]:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {ZERO_EXP}

    def constant_value(self) -> Fraction:
        """Coefficient of the monomial 1."""
        return self._terms.get(ZERO_EXP, Fraction(0))

    def variables(self) -> set:
        return {Var(i) for e in self._terms for i, d in enumerate(e) if d}

    def degree(self, v: Var | None = None) -> int:
        """Total degree, or the degree in ``v``.  The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if v is None:
            return max(sum(e) for e in self._terms)
        return max(e[v] for e in self._terms)

    # ring operations

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other):
        return poly_add(_coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly()
            return MPoly._raw({e: c * other for e, c in self._terms.items()})
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # calculus and substitution

    def diff(self, v: Var) -> "MPoly":
        """Partial derivative with respect to ``v``."""
        out: Dict[Exp, Fraction] = {}
        for e, c in self._terms.items():
            d = e[v]
            if d:
                ne = list(e)
                ne[v] = d - 1
                out[tuple(ne)] = c * d
        return MPoly._raw(out)

    def subs(self, mapping: Mapping[Var, Union["MPoly", Scalar]]) -> "MPoly":
        """Simultaneously substitute polynomials for variables."""
        images = {v: _coerce(p) for v, p in mapping.items()}
        power_cache: Dict[Tuple[Var, int], MPoly] = {}

        def img_pow(v: Var, d: int) -> MPoly:
            key = (v, d)
            if key not in power_cache:
                power_cache[key] = images[v] ** d
            return power_cache[key]

        result = MPoly()
        for e, c in self._terms.items():
            kept = list(e)
            factor = MPoly.const(c)
            for v in images:
                if e[v]:
                    factor = factor * img_pow(v, e[v])
                    kept[v] = 0
            result = result + factor * MPoly._raw({tuple(kept): Fraction(1)})
        return result

    def __call__(self, **values) -> "MPoly":
        return self.subs({Var[k.upper()]: v for k, v in values.items()})

    def __repr__(self):
        return f"MPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(p) -> MPoly:
    if isinstance(p, MPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return MPoly.const(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


ALPHA = MPoly.var(Var.ALPHA)
BETA = MPoly.var(Var.BETA)
Q = MPoly.var(Var.Q)
X = MPoly.var(Var.X)
Y = MPoly.var(Var.Y)
Z = MPoly.var(Var.Z)
ONE = MPoly.const(1)
ZERO = MPoly()


def poly_add(a: MPoly, b: MPoly) -> MPoly:
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out = dict(a._terms)
    for e, c in b._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return MPoly._raw(out)


def poly_mul(a: MPoly, b: MPoly) -> MPoly:
    out: Dict[Exp, Fraction] = {}
    bt = list(b._terms.items())
    for ea, ca in a._terms.items():
        for eb, cb in bt:
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2],
                 ea[3] + eb[3], ea[4] + eb[4], ea[5] + eb[5])
            out[e] = out.get(e, 0) + ca * cb
    return MPoly._raw({e: c for e, c in out.items() if c})


def poly_eval(p: MPoly, assignment: Mapping[Var, Scalar]) -> Fraction:
    """Evaluate ``p`` exactly at a rational point.

    Every variable occurring in ``p`` must be assigned; extra entries are ignored.
    """
    missing = p.variables() - set(assignment)
    if missing:
        names = ", ".join(v.symbol for v in sorted(missing))
        raise MissingVariable(f"unassigned variable(s): {names}")
    vals = [Fraction(assignment.get(v, 0)) for v in Var]
    total = Fraction(0)
    for e, c in p._terms.items():
        term = c
        for i, d in enumerate(e):
            if d:
                term *= vals[i] ** d
        total += term
    return total


def int_binomial(m: int, k: int) -> int:
    """C(m, k) for integer ``m`` (possibly negative) via the multiplicative formula."""
    if k < 0:
        return 0
    if 0 <= m < k:
        return 0
    num = 1
    for j in range(k):
        num *= m - j
    return num // factorial(k)


@lru_cache(maxsize=4096)
def gen_binomial(p: MPoly, k: int) -> MPoly:
    """Generalized binomial coefficient p(p-1)...(p-k+1)/k! with polynomial top."""
    if k < 0:
        raise ValueError("k must be non-negative")
    p = _coerce(p)
    if p.is_constant() and p.constant_value().denominator == 1:
        return MPoly.const(int_binomial(int(p.constant_value()), k))
    prod = ONE
    for j in range(k):
        prod = prod * (p - j)
    return prod * Fraction(1, factorial(k))


# text format


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_monomial(e: Exp) -> str:
    parts = []
    for v in Var:
        d = e[v]
        if d == 1:
            parts.append(v.symbol)
        elif d > 1:
            parts.append(f"{v.symbol}^{d}")
    return "*".join(parts)


def sorted_terms(p: MPoly) -> list:
    """Terms in canonical order: descending total degree, then descending exponents."""
    return sorted(p.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)


def format_poly(p: MPoly) -> str:
    """Render ``p`` as e.g. ``6*x^2 + 6*x + 1``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(sorted_terms(p)):
        mono = _fmt_monomial(e)
        mag = abs(c)
        if not mono:
            body = _fmt_rat(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_rat(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(\*\*|[-+*/^()]))")
_NAMES = {v.symbol: v for v in Var}
_NAMES.update({"a": Var.ALPHA, "b": Var.BETA})


def parse_poly(text: str) -> MPoly:
    """Parse polynomial text such as ``3/2*x^2 - 1/2`` or ``(x+y)^2``.

    Accepts the output of :func:`format_poly` plus parentheses, implicit
    nothing (every product needs ``*``), and ``**`` as a synonym for ``^``.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            name = m.group(2).lower()
            if name not in _NAMES:
                raise ValueError(f"unknown variable {m.group(2)!r}")
            tokens.append(("var", _NAMES[name]))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr() -> MPoly:
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term() -> MPoly:
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ValueError("division only by nonzero constants")
                acc = acc / rhs.constant_value()
        return acc

    def power() -> MPoly:
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            base = base ** val
        return base

    def atom() -> MPoly:
        kind, val = take()
        if kind == "num":
            return MPoly.const(val)
        if kind == "var":
            return MPoly.var(val)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -power()
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result


def as_poly(value: Union[MPoly, Scalar, str]) -> MPoly:
    if isinstance(value, str):
        return parse_poly(value)
    return _coerce(value)


def sum_polys(polys: Iterable[MPoly]) -> MPoly:
    acc = ZERO
    for p in polys:
        acc = acc + p
    return acc
