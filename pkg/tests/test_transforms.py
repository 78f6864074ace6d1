from fractions import Fraction
from math import comb

import pytest

from conftest import rand_rat, rand_series
from eulerbinom.exact import ALPHA, BETA, ONE, X, Y, Z, ZERO, Var, gen_binomial
from eulerbinom.series import negbinom_series, series_from_coeffs
from eulerbinom.transforms import (
    SeqView, binomial_transform, euler_transform, generalized_euler_double_sum,
    generalized_euler_transform, inverse_binomial_transform, mul_binomial_power,
    mul_binomial_power_direct, parse_sequence,
)


def seq(*vals):
    return SeqView.of(list(vals))


def pascal_oracle(a):
    return [sum(comb(m, k) * a[k] for k in range(m + 1)) for m in range(len(a))]


def test_binomial_transform_examples():
    assert binomial_transform([1, 0, 0, 0]) == seq(1, 1, 1, 1)
    assert binomial_transform([1, 1, 1, 1]) == seq(1, 2, 4, 8)
    # a_k = C(1+k, k) x^k, n = 1
    assert binomial_transform([ONE, 2 * X]) == seq(1, 1 + 2 * X)


def test_binomial_transform_vs_pascal(rng):
    for _ in range(50):
        a = [rand_rat(rng) for _ in range(rng.randint(1, 16))]
        assert [t.constant_value() for t in binomial_transform(a).terms] == pascal_oracle(a)


def test_inverse_examples():
    assert inverse_binomial_transform([1, 1, 1, 1]) == seq(1, 0, 0, 0)
    assert inverse_binomial_transform([1, 2, 4, 8]) == seq(1, 1, 1, 1)


def test_round_trip_symbolic(rng):
    from conftest import rand_poly
    for _ in range(20):
        a = SeqView(tuple(rand_poly(rng, (Var.X, Var.Q)) for _ in range(rng.randint(1, 10))))
        assert inverse_binomial_transform(binomial_transform(a)) == a
        assert binomial_transform(inverse_binomial_transform(a)) == a


def test_seqview_nonempty():
    with pytest.raises(ValueError):
        SeqView(())


def test_euler_examples():
    assert euler_transform(series_from_coeffs([1, 0, 0])) == series_from_coeffs([1, 1, 1])
    assert euler_transform(series_from_coeffs([1, 1, 1, 1])) == series_from_coeffs([1, 2, 4, 8])


def test_euler_of_negbinom_gives_alpha_simons_rhs():
    N = 8
    out = euler_transform(negbinom_series(X, ALPHA, N))
    for m in range(N + 1):
        rhs = ZERO
        for k in range(m + 1):
            rhs = rhs + gen_binomial(ALPHA, m - k) * gen_binomial(ALPHA + k, k) * (-1) ** (m - k) * (X + 1) ** k
        assert out[m] == rhs


def test_euler_contract_symbolic(rng):
    for _ in range(5):
        f = rand_series(rng, 10, (Var.X, Var.Y))
        assert euler_transform(f).coeffs == binomial_transform(f).terms


def test_mul_binomial_power_examples():
    f = series_from_coeffs([X, 1, Y])
    assert mul_binomial_power(f, Z, 0) == f
    assert mul_binomial_power(series_from_coeffs([1, 0, 0]), 1, ALPHA) == series_from_coeffs(
        [1, ALPHA, (ALPHA ** 2 - ALPHA) / 2])
    assert mul_binomial_power(series_from_coeffs([1, 1, 1]), -1, 1) == series_from_coeffs([1, 0, 0])


def test_mul_binomial_power_paths_agree(rng):
    for _ in range(5):
        f = rand_series(rng, 8, (Var.X,))
        assert mul_binomial_power(f, Z, ALPHA) == mul_binomial_power_direct(f, Z, ALPHA)


def test_generalized_euler_examples(rng):
    for _ in range(5):
        f = rand_series(rng, 10)
        assert generalized_euler_transform(f, 1, 0) == euler_transform(f)
    unit = series_from_coeffs([1, 0, 0, 0, 0])
    assert generalized_euler_transform(unit, X, ALPHA) == negbinom_series(X, ALPHA, 4)


def test_generalized_euler_shifted_parameters(rng):
    # alpha -> beta - alpha, x -> -y, applied to 1/(1-(x+y)t)^(beta+1)
    N = 6
    f = negbinom_series(X + Y, BETA, N)
    out = generalized_euler_transform(f, -Y, BETA - ALPHA)
    for n in range(N + 1):
        expected = ZERO
        for k in range(n + 1):
            expected = expected + gen_binomial(BETA - ALPHA + n, n - k) * (-Y) ** (n - k) * f[k]
        assert out[n] == expected


def test_generalized_euler_double_sum_helper(rng):
    f = rand_series(rng, 8, (Var.Y,))
    assert generalized_euler_transform(f, X, ALPHA) == generalized_euler_double_sum(f, X, ALPHA)


def test_output_order_equals_input_order(rng):
    f = rand_series(rng, 5)
    for out in (euler_transform(f), generalized_euler_transform(f, X, ALPHA),
                mul_binomial_power(f, Z, ALPHA)):
        assert out.order == 5


def test_parse_sequence():
    text = "# header\n1\n-3/4  # trailing comment\n\n0.5\n"
    assert parse_sequence(text) == [1, Fraction(-3, 4), Fraction(1, 2)]
    with pytest.raises(ValueError, match="line 2"):
        parse_sequence("1\nabc\n")
