import fractions
import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from degenerate_sums.algebra import (
    LAMBDA,
    LAMBDA_RING,
    X_RING,
    Series,
    at_lambda,
    lambda_poly,
    x_poly,
)
from degenerate_sums.factorial import (
    FactorialKind,
    degenerate_exp,
    factorial_at,
    factorial_poly,
    falling,
    lambda_binomial,
    rising,
)


Fraction = fractions.Fraction

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def sympy_coefficients(expr, symbol):
    """Coefficients of expr in increasing degree, as Fractions."""

    coeffs = sympy.Poly(sympy.expand(expr), symbol).all_coeffs()
    return [Fraction(int(c.p), int(c.q)) for c in reversed(coeffs)]


def test_factorial_poly():
    assert factorial_poly(FactorialKind.FALLING_LAMBDA, 0) == X_RING.one()
    assert factorial_poly(FactorialKind.FALLING_LAMBDA, 2) == x_poly(0, -LAMBDA, 1)
    assert factorial_poly(FactorialKind.RISING_LAMBDA, 2) == x_poly(0, LAMBDA, 1)


@pytest.mark.parametrize("n", range(7))
def test_classical_factorials_match_sympy(n):
    x = sympy.Symbol("x")
    falling_poly = factorial_poly(FactorialKind.FALLING_CLASSICAL, n)
    rising_poly = factorial_poly(FactorialKind.RISING_CLASSICAL, n)
    assert list(falling_poly.coefficients) == sympy_coefficients(sympy.ff(x, n), x)
    assert list(rising_poly.coefficients) == sympy_coefficients(sympy.rf(x, n), x)


@pytest.mark.parametrize("n", range(6))
def test_classical_is_lambda_one(n):
    for lam_kind, classical_kind in (
        (FactorialKind.FALLING_LAMBDA, FactorialKind.FALLING_CLASSICAL),
        (FactorialKind.RISING_LAMBDA, FactorialKind.RISING_CLASSICAL),
    ):
        assert at_lambda(factorial_poly(lam_kind, n), 1) == at_lambda(
            factorial_poly(classical_kind, n), 0
        )


def test_factorial_at():
    assert falling(1, 3) == lambda_poly(1, -3, 2)
    assert falling(2, 2) == lambda_poly(4, -2)
    assert rising(1, 2) == lambda_poly(1, 1)
    assert factorial_at(FactorialKind.FALLING_CLASSICAL, 5, 3) == 60


def test_factorial_at_rejects_negative_n():
    with pytest.raises(ValueError):
        factorial_at(FactorialKind.FALLING_LAMBDA, 1, -1)


@given(small_rationals, st.integers(min_value=0, max_value=6))
def test_lambda_zero_gives_powers(x0, n):
    assert falling(x0, n)(0) == x0 ** n
    assert rising(x0, n)(0) == x0 ** n


@given(small_rationals, st.integers(min_value=0, max_value=6))
def test_rising_is_falling_at_minus_lambda(x0, n):
    assert rising(x0, n) == falling(x0, n).negate_variable()


@given(small_rationals, small_rationals, st.integers(min_value=0, max_value=5))
def test_vandermonde(a, b, n):
    total = LAMBDA_RING.zero()
    for l in range(n + 1):
        total += falling(a, l) * falling(b, n - l) * math.comb(n, l)
    assert falling(a + b, n) == total


def test_degenerate_exp():
    assert degenerate_exp(0, 4) == Series.one(LAMBDA_RING, 4)
    assert degenerate_exp(1, 2) == Series(
        [1, 1, lambda_poly(Fraction(1, 2), Fraction(-1, 2))], 2, LAMBDA_RING
    )
    assert degenerate_exp(2, 2) == Series([1, 2, lambda_poly(2, -1)], 2, LAMBDA_RING)


def test_degenerate_exp_is_multiplicative():
    assert degenerate_exp(2, 5) * degenerate_exp(Fraction(1, 3), 5) == degenerate_exp(
        Fraction(7, 3), 5
    )


def test_degenerate_exp_negated_lambda():
    negated = degenerate_exp(3, 4, negate_lambda=True)
    assert negated.coefficients == tuple(
        c.negate_variable() for c in degenerate_exp(3, 4).coefficients
    )


def test_lambda_binomial():
    assert lambda_binomial(7, 0) == 1
    assert lambda_binomial(3, 2) == lambda_poly(Fraction(9, 2), Fraction(-3, 2))
    assert lambda_binomial(1, 2)(1) == 0
    assert lambda_binomial(1, 2)(0) == Fraction(1, 2)
    assert lambda_binomial(5, 2)(1) == 10
