import warnings
from fractions import Fraction
from math import comb

import pytest

from eulerbinom.exact import ALPHA, BETA, ONE, X, Y, Z, ZERO, MPoly, Var, poly_eval
from eulerbinom.identities import (
    FREE_VARIABLES, IdentityId, QBelowN, QBelowNWarning, cross17_euler_route,
    derive_simons_from_ljunggren, homogenize, identity_sides, ljunggren_oracle,
    munarini10_chain, simons_euler_chain, verify_identity, verify_munarini10_chain,
    verify_munarini30_chain,
)

ALL = list(IdentityId)


def test_simons_examples():
    assert identity_sides(IdentityId.SIMONS_1, 0) == (ONE, ONE)
    lhs, rhs = identity_sides(IdentityId.SIMONS_1, 2)
    assert lhs == rhs == 6 * X ** 2 + 6 * X + 1


def test_ljunggren_small_example():
    lhs, rhs = identity_sides(IdentityId.LJUNGGREN_11, 1, q=2)
    assert lhs == rhs == X + 2 * Y


@pytest.mark.parametrize("ident", ALL, ids=lambda i: i.short)
def test_identity_holds_symbolically(ident):
    report = verify_identity(ident, 10)
    assert report.all_pass, [str(r.diff) for r in report.failures()]
    assert [r.n for r in report.results] == list(range(11))


@pytest.mark.parametrize("ident", ALL, ids=lambda i: i.short)
def test_free_variables(ident):
    lhs, rhs = identity_sides(ident, 4)
    assert (lhs.variables() | rhs.variables()) == set(FREE_VARIABLES[ident])


def test_report_carries_difference_on_failure():
    report = verify_identity(IdentityId.SIMONS_1, 2)
    assert all(r.diff.is_zero() and r.passed for r in report.results)
    # a deliberately broken pair shows up through the same fields
    from eulerbinom.identities import NResult, IdentityReport
    bad = IdentityReport(IdentityId.SIMONS_1, (0, 0), [NResult(0, False, ONE, X, ONE - X)])
    assert not bad.all_pass and bad.failures()[0].diff == 1 - X


def test_simons_by_brute_force_evaluation():
    # independent integer evaluation of Simons' identity at x = 3
    for n in range(8):
        lhs = sum(comb(n, k) * comb(n + k, k) * 3 ** k for k in range(n + 1))
        rhs = sum(comb(n, k) * comb(n + k, k) * (-1) ** (n - k) * 4 ** k for k in range(n + 1))
        assert lhs == rhs
        assert poly_eval(identity_sides(IdentityId.SIMONS_1, n)[0], {Var.X: 3}) == lhs


def test_q_below_n_warns_but_evaluates():
    with pytest.warns(QBelowNWarning):
        lhs, rhs = identity_sides(IdentityId.LJUNGGREN_11, 3, q=1)
    assert lhs == rhs
    with pytest.raises(QBelowN):
        identity_sides(IdentityId.LJUNGGREN_11, 3, q=1, strict=True)
    report = verify_identity(IdentityId.LJUNGGREN_11, 3, q=1)
    assert [r.q_below_n for r in report.results] == [False, False, True, True]
    assert report.all_pass


def test_q_bound_not_checked_for_cross_identity():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        identity_sides(IdentityId.CROSS_17, 5, q=2)


def test_integer_q_mode_matches_symbolic():
    for n in range(6):
        for q in range(n, 8):
            for ident in (IdentityId.LJUNGGREN_11, IdentityId.LJUNGGREN_15,
                          IdentityId.LJUNGGREN_16, IdentityId.CROSS_17):
                sym = identity_sides(ident, n)
                num = identity_sides(ident, n, q=q)
                assert sym[0].subs({Var.Q: q}) == num[0]
                assert sym[1].subs({Var.Q: q}) == num[1]


def test_oracle_examples():
    assert ljunggren_oracle(0, 5) == ONE
    assert ljunggren_oracle(1, 2) == X + 2 * Y
    assert ljunggren_oracle(2, 3) == identity_sides(IdentityId.LJUNGGREN_11, 2, q=3)[0]
    assert ljunggren_oracle(2, 3) == X ** 2 + 6 * X * Y + 3 * Y ** 2
    with pytest.raises(QBelowN):
        ljunggren_oracle(3, 2)


def test_oracle_equals_both_sides():
    for q in range(9):
        for n in range(q + 1):
            lhs, rhs = identity_sides(IdentityId.LJUNGGREN_11, n, q=q)
            assert ljunggren_oracle(n, q) == lhs == rhs


def test_derive_simons_from_ljunggren():
    assert derive_simons_from_ljunggren(0) == (ONE, ONE, ONE)
    assert derive_simons_from_ljunggren(1) == (2 * X + 1,) * 3
    a, b, c = derive_simons_from_ljunggren(3)
    assert a == b == c
    assert a == identity_sides(IdentityId.SIMONS_1, 3)[0]


def test_alpha_equal_n_gives_simons():
    for n in range(9):
        l7, r7 = identity_sides(IdentityId.MUNARINI_7, n)
        l1, r1 = identity_sides(IdentityId.SIMONS_1, n)
        assert l7.subs({Var.ALPHA: n}) == l1
        assert r7.subs({Var.ALPHA: n}) == r1


def test_ljunggren_specializes_to_corollaries():
    for n in range(9):
        l11, r11 = identity_sides(IdentityId.LJUNGGREN_11, n)
        l13, r13 = identity_sides(IdentityId.COROLLARY_13, n)
        l14, r14 = identity_sides(IdentityId.COROLLARY_14, n)
        s13 = {Var.Q: n, Var.Y: X + 1}
        assert l11.subs(s13) == r13 and r11.subs(s13) == l13
        # x plays the role of y + 1 and y the role of x, so x - y becomes 1
        s14 = {Var.Q: n, Var.X: X + 1, Var.Y: X}
        assert r11.subs(s14) == l14 and l11.subs(s14) == r14


def test_one_variable_form_clears_to_two_variable_form():
    for n in range(9):
        l15, r15 = identity_sides(IdentityId.LJUNGGREN_15, n)
        l16, r16 = identity_sides(IdentityId.LJUNGGREN_16, n)
        assert homogenize(l16, n) == l15
        assert homogenize(r16, n) == r15
        assert l15.subs({Var.Y: 1, Var.X: Z}) == l16


def test_munarini_chains():
    assert verify_munarini10_chain(0)
    assert verify_munarini10_chain(8)
    assert verify_munarini10_chain(8, alpha=BETA, y=ZERO)
    assert verify_munarini30_chain(0)
    assert verify_munarini30_chain(8)
    assert verify_munarini30_chain(8, alpha=ZERO)


def test_munarini10_chain_coefficients_are_identity_sides():
    transformed, product = munarini10_chain(6)
    for n in range(7):
        lhs, rhs = identity_sides(IdentityId.MUNARINI_10, n)
        assert product[n] == lhs
        assert transformed[n] == rhs


def test_chain_detects_a_wrong_exponent():
    from eulerbinom.identities import negbinom_series, generalized_euler_transform, mul_binomial_power
    f = negbinom_series(X + Y, BETA, 4)
    wrong = generalized_euler_transform(f, -Y, BETA - ALPHA + 1)
    product = mul_binomial_power(negbinom_series(X, BETA, 4), Y, ALPHA)
    assert not wrong.agrees_with(product)[0]


def test_simons_euler_chain():
    transformed, rhs = simons_euler_chain(10)
    assert list(transformed.coeffs) == rhs
    for n in range(11):
        assert rhs[n] == identity_sides(IdentityId.MUNARINI_7, n)[1]


def test_cross17_euler_route():
    transformed, lhs, rhs = cross17_euler_route(8)
    assert list(transformed.coeffs) == lhs == rhs


def test_cross17_integer_q_route():
    transformed, lhs, rhs = cross17_euler_route(6, q=MPoly.const(Fraction(3)))
    assert list(transformed.coeffs) == rhs
