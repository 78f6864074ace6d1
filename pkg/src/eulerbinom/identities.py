"""Both sides of the Simons / Ljunggren / Munarini binomial identities.

Every evaluator below is a direct transcription of its summation formula;
nothing is shared between them except :func:`gen_binomial`, so that the
identity checks and the transform-based derivations stay independent.

Identities that contain ``q`` are evaluated with ``q`` as the polynomial
variable ``Q`` by default.  Passing an integer evaluates them at that value.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .exact import ALPHA, BETA, ONE, Q, X, Y, Z, MPoly, Var, gen_binomial, sum_polys
from .series import Series, binom_power_series, negbinom_series
from .transforms import euler_transform, generalized_euler_transform, mul_binomial_power


class IdentityId(enum.Enum):
    SIMONS_1 = 1
    MUNARINI_7 = 7
    MUNARINI_10 = 10
    LJUNGGREN_11 = 11
    COROLLARY_13 = 13
    COROLLARY_14 = 14
    LJUNGGREN_15 = 15
    LJUNGGREN_16 = 16
    CROSS_17 = 17
    MUNARINI_30 = 30

    @property
    def eq(self) -> int:
        return self.value

    @property
    def short(self) -> str:
        return f"eq{self.value}"


Q_BOUND_IDS = frozenset({IdentityId.LJUNGGREN_11, IdentityId.LJUNGGREN_15, IdentityId.LJUNGGREN_16})
Q_IDS = Q_BOUND_IDS | {IdentityId.CROSS_17}

FREE_VARIABLES: Dict[IdentityId, Tuple[Var, ...]] = {
    IdentityId.SIMONS_1: (Var.X,),
    IdentityId.MUNARINI_7: (Var.ALPHA, Var.X),
    IdentityId.MUNARINI_10: (Var.ALPHA, Var.BETA, Var.X, Var.Y),
    IdentityId.LJUNGGREN_11: (Var.Q, Var.X, Var.Y),
    IdentityId.COROLLARY_13: (Var.X,),
    IdentityId.COROLLARY_14: (Var.X,),
    IdentityId.LJUNGGREN_15: (Var.Q, Var.X, Var.Y),
    IdentityId.LJUNGGREN_16: (Var.Q, Var.Z),
    IdentityId.CROSS_17: (Var.Q, Var.X),
    IdentityId.MUNARINI_30: (Var.ALPHA, Var.BETA, Var.X, Var.Y),
}


class QBelowN(ValueError):
    """Integer ``q`` smaller than ``n`` where the q >= n hypothesis is stated."""


class QBelowNWarning(UserWarning):
    pass


def C(top, k: int) -> MPoly:
    return gen_binomial(top if isinstance(top, MPoly) else MPoly.const(top), k)


def sgn(j: int) -> int:
    return -1 if j % 2 else 1


# --- one evaluator per identity -------------------------------------------


def _simons_1(n, q):
    lhs = sum_polys(C(n, k) * C(n + k, k) * X ** k for k in range(n + 1))
    rhs = sum_polys(C(n, k) * C(n + k, k) * sgn(n - k) * (X + 1) ** k for k in range(n + 1))
    return lhs, rhs


def _munarini_7(n, q):
    lhs = sum_polys(C(n, k) * C(ALPHA + k, k) * X ** k for k in range(n + 1))
    rhs = sum_polys(
        C(ALPHA, n - k) * C(ALPHA + k, k) * sgn(n - k) * (X + 1) ** k for k in range(n + 1)
    )
    return lhs, rhs


def _munarini_10(n, q):
    lhs = sum_polys(C(ALPHA, n - k) * C(BETA + k, k) * X ** k * Y ** (n - k) for k in range(n + 1))
    rhs = sum_polys(
        C(BETA - ALPHA + n, n - k) * C(BETA + k, k) * (-Y) ** (n - k) * (X + Y) ** k
        for k in range(n + 1)
    )
    return lhs, rhs


def _ljunggren_11(n, q):
    lhs = sum_polys(C(n, k) * C(q, k) * X ** (n - k) * Y ** k for k in range(n + 1))
    rhs = sum_polys(C(n, k) * C(q + k, k) * (X - Y) ** (n - k) * Y ** k for k in range(n + 1))
    return lhs, rhs


def _corollary_13(n, q):
    lhs = sum_polys(C(n, k) * C(n + k, k) * sgn(n - k) * (X + 1) ** k for k in range(n + 1))
    rhs = sum_polys(C(n, k) ** 2 * X ** (n - k) * (X + 1) ** k for k in range(n + 1))
    return lhs, rhs


def _corollary_14(n, q):
    lhs = sum_polys(C(n, k) * C(n + k, k) * X ** k for k in range(n + 1))
    rhs = sum_polys(C(n, k) ** 2 * X ** (n - k) * (X + 1) ** k for k in range(n + 1))
    return lhs, rhs


def _ljunggren_15(n, q):
    lhs = sum_polys(C(n, k) * C(q + k, k) * X ** k * Y ** (n - k) for k in range(n + 1))
    rhs = sum_polys(C(n, k) * C(q, k) * (X + Y) ** (n - k) * X ** k for k in range(n + 1))
    return lhs, rhs


def _ljunggren_16(n, q):
    lhs = sum_polys(C(n, k) * C(q + k, k) * Z ** k for k in range(n + 1))
    rhs = sum_polys(C(n, k) * C(q, k) * (Z + 1) ** (n - k) * Z ** k for k in range(n + 1))
    return lhs, rhs


def _cross_17(n, q):
    lhs = sum_polys(C(n, k) * C(q, k) * (X + 1) ** (n - k) * X ** k for k in range(n + 1))
    rhs = sum_polys(
        C(q, n - k) * C(q + k, k) * sgn(n - k) * (X + 1) ** k for k in range(n + 1)
    )
    return lhs, rhs


def _munarini_30(n, q):
    lhs = sum_polys(C(ALPHA, n - k) * C(BETA + k, k) * X ** k * Y ** (n - k) for k in range(n + 1))
    rhs = sum_polys(
        C(BETA - ALPHA + n, n - k) * C(ALPHA, k) * X ** (n - k) * (X + Y) ** k
        for k in range(n + 1)
    )
    return lhs, rhs


_EVALUATORS: Dict[IdentityId, Callable[[int, MPoly], Tuple[MPoly, MPoly]]] = {
    IdentityId.SIMONS_1: _simons_1,
    IdentityId.MUNARINI_7: _munarini_7,
    IdentityId.MUNARINI_10: _munarini_10,
    IdentityId.LJUNGGREN_11: _ljunggren_11,
    IdentityId.COROLLARY_13: _corollary_13,
    IdentityId.COROLLARY_14: _corollary_14,
    IdentityId.LJUNGGREN_15: _ljunggren_15,
    IdentityId.LJUNGGREN_16: _ljunggren_16,
    IdentityId.CROSS_17: _cross_17,
    IdentityId.MUNARINI_30: _munarini_30,
}


def check_q(identity: IdentityId, n: int, q: Optional[int], strict: bool = False) -> bool:
    """Return True if an integer ``q`` violates q >= n for a Ljunggren-type identity.

    With ``strict`` the violation raises :class:`QBelowN`; otherwise a
    :class:`QBelowNWarning` is issued and evaluation goes ahead.
    """
    if q is None or identity not in Q_BOUND_IDS or q >= n:
        return False
    msg = f"{identity.short}: q={q} is below n={n}; the identity is stated for q >= n"
    if strict:
        raise QBelowN(msg)
    warnings.warn(msg, QBelowNWarning, stacklevel=3)
    return True


def identity_sides(
    identity: IdentityId, n: int, q: Optional[int] = None, strict: bool = False
) -> Tuple[MPoly, MPoly]:
    """Left and right side of ``identity`` at ``n`` as exact polynomials.

    ``q=None`` keeps q symbolic; an integer substitutes it.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    check_q(identity, n, q, strict)
    qpoly = Q if q is None else MPoly.const(q)
    return _EVALUATORS[identity](n, qpoly)


@dataclass(frozen=True)
class NResult:
    n: int
    passed: bool
    lhs: MPoly
    rhs: MPoly
    diff: MPoly
    q_below_n: bool = False


@dataclass
class IdentityReport:
    identity: IdentityId
    n_range: Tuple[int, int]
    results: List[NResult] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[NResult]:
        return [r for r in self.results if not r.passed]


def verify_identity(
    identity: IdentityId, n_max: int, q: Optional[int] = None, strict: bool = False
) -> IdentityReport:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    report = IdentityReport(identity, (0, n_max))
    for n in range(n_max + 1):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", QBelowNWarning)
            below = check_q(identity, n, q, strict)
            lhs, rhs = identity_sides(identity, n, q)
        diff = lhs - rhs
        report.results.append(NResult(n, diff.is_zero(), lhs, rhs, diff, below))
    return report


# --- independent derivations -----------------------------------------------


def ljunggren_oracle(n: int, q: int) -> MPoly:
    """Coefficient of t^n in (x t + y)^n (1 + t)^q, by plain polynomial expansion.

    The product is expanded as a polynomial in t with coefficients in x, y;
    no binomial coefficient is used.
    """
    if not (isinstance(q, int) and isinstance(n, int)) or n < 0:
        raise ValueError("n and q must be non-negative integers")
    if q < n:
        raise QBelowN(f"q={q} is below n={n}")
    # polynomials in t as coefficient lists
    left = [ONE]
    for _ in range(n):
        # multiply by (y + x t)
        nxt = [MPoly()] * (len(left) + 1)
        for i, c in enumerate(left):
            nxt[i] = nxt[i] + c * Y
            nxt[i + 1] = nxt[i + 1] + c * X
        left = nxt
    right = [1]
    for _ in range(q):
        right = [a + b for a, b in zip(right + [0], [0] + right)]
    return sum_polys(left[i] * right[n - i] for i in range(len(left)) if 0 <= n - i < len(right))


def derive_simons_from_ljunggren(n: int) -> Tuple[MPoly, MPoly, MPoly]:
    """The left side of each corollary and their shared right side."""
    lhs13, rhs13 = identity_sides(IdentityId.COROLLARY_13, n)
    lhs14, rhs14 = identity_sides(IdentityId.COROLLARY_14, n)
    if rhs13 != rhs14:
        raise AssertionError("corollary right sides differ; evaluator bug")
    return lhs13, lhs14, rhs13


def munarini10_chain(N: int, alpha=ALPHA, beta=BETA, x=X, y=Y) -> Tuple[Series, Series]:
    """Both series of the generalized-Euler derivation of the first Munarini identity.

    Returns (transform side, product side): the generalized transform with
    exponent beta-alpha at -y applied to 1/(1-(x+y)t)^(beta+1), and
    (1+yt)^alpha times 1/(1-xt)^(beta+1).
    """
    f = negbinom_series(x + y, beta, N)
    transformed = generalized_euler_transform(f, -y, beta - alpha)
    product = mul_binomial_power(negbinom_series(x, beta, N), y, alpha)
    return transformed, product


def munarini30_chain(N: int, alpha=ALPHA, beta=BETA, x=X, y=Y) -> Tuple[Series, Series]:
    """As :func:`munarini10_chain` but starting from f = (1+(x+y)t)^alpha at +x."""
    f = binom_power_series(x + y, alpha, N)
    transformed = generalized_euler_transform(f, x, beta - alpha)
    product = mul_binomial_power(negbinom_series(x, beta, N), y, alpha)
    return transformed, product


def verify_munarini10_chain(N: int, **params) -> bool:
    transformed, product = munarini10_chain(N, **params)
    return transformed.agrees_with(product)[0]


def verify_munarini30_chain(N: int, **params) -> bool:
    transformed, product = munarini30_chain(N, **params)
    return transformed.agrees_with(product)[0]


def simons_euler_chain(N: int, alpha=ALPHA, x=X) -> Tuple[Series, List[MPoly]]:
    """Euler transform of 1/(1-xt)^(alpha+1) and the matching right sides of the
    alpha-generalized Simons identity, for n = 0..N."""
    transformed = euler_transform(negbinom_series(x, alpha, N))
    rhs = [
        sum_polys(C(alpha, n - k) * C(alpha + k, k) * sgn(n - k) * (x + 1) ** k for k in range(n + 1))
        for n in range(N + 1)
    ]
    return transformed, rhs


def cross17_euler_route(N: int, q=Q) -> Tuple[Series, List[MPoly], List[MPoly]]:
    """Euler-transform route to the cross identity, cleared of denominators.

    The sequence C(q,k) (x/(x+1))^k is scaled by (x+1)^N so every term is a
    polynomial.  Coefficient n of its Euler transform then equals
    (x+1)^(N-n) times either side of the identity at n.  Returns the
    transformed series plus the scaled left and right sides.
    """
    a = [C(q, k) * X ** k * (X + 1) ** (N - k) for k in range(N + 1)]
    transformed = euler_transform(Series(tuple(a)))
    lhs_scaled, rhs_scaled = [], []
    for n in range(N + 1):
        lhs, rhs = _cross_17(n, q if isinstance(q, MPoly) else MPoly.const(q))
        lhs_scaled.append(lhs * (X + 1) ** (N - n))
        rhs_scaled.append(rhs * (X + 1) ** (N - n))
    return transformed, lhs_scaled, rhs_scaled


def homogenize(p: MPoly, n: int, var: Var = Var.Z) -> MPoly:
    """Clear the substitution var = x/y: multiply by y^n and replace var^d by x^d y^(n-d)."""
    out = MPoly()
    for e, c in p.items():
        d = e[var]
        if d > n:
            raise ValueError(f"degree {d} in {var.symbol} exceeds {n}")
        rest = list(e)
        rest[var] = 0
        out = out + MPoly({tuple(rest): c}) * X ** d * Y ** (n - d)
    return out
