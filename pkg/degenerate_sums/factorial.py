"""
This module implements the generalized falling and rising factorials,
the degenerate exponentials built from them and the degenerate
lambda-binomial coefficients.
"""

import typing as T

import enum
import functools
import math

from .algebra import LAMBDA, LAMBDA_RING, X, X_RING, Poly, Series, as_rational


class FactorialKind(enum.Enum):
    """The four factorial families. The i-th factor of each is
    x + i * step."""

    FALLING_LAMBDA = "falling_lambda"
    RISING_LAMBDA = "rising_lambda"
    FALLING_CLASSICAL = "falling"
    RISING_CLASSICAL = "rising"

    @property
    def step(self) -> Poly:
        """The shift between two consecutive factors, a lambda polynomial."""

        return {
            FactorialKind.FALLING_LAMBDA: -LAMBDA,
            FactorialKind.RISING_LAMBDA: LAMBDA,
            FactorialKind.FALLING_CLASSICAL: LAMBDA_RING.coerce(-1),
            FactorialKind.RISING_CLASSICAL: LAMBDA_RING.one(),
        }[self]


@functools.lru_cache(maxsize=None)
def factorial_poly(kind: FactorialKind, n: int) -> Poly:
    """Returns the monic degree-n polynomial x(x + s)...(x + (n-1)s)
    in x over the lambda polynomials, s being kind.step."""

    if n < 0:
        raise ValueError("n must be >= 0, but is {!r}".format(n))
    if n == 0:
        return X_RING.one()
    return factorial_poly(kind, n - 1) * (X + kind.step * (n - 1))


@functools.lru_cache(maxsize=None)
def factorial_at(kind: FactorialKind, x0: T.Any, n: int) -> Poly:
    """Returns the factorial of the given kind at the rational x0,
    keeping lambda symbolic."""

    if n < 0:
        raise ValueError("n must be >= 0, but is {!r}".format(n))
    if n == 0:
        return LAMBDA_RING.one()
    return factorial_at(kind, x0, n - 1) * (kind.step * (n - 1) + as_rational(x0))


def falling(x0: T.Any, n: int) -> Poly:
    """Shortcut for the generalized falling factorial (x0)_{n,lambda}."""

    return factorial_at(FactorialKind.FALLING_LAMBDA, x0, n)


def rising(x0: T.Any, n: int) -> Poly:
    """Shortcut for the generalized rising factorial <x0>_{n,lambda}."""

    return factorial_at(FactorialKind.RISING_LAMBDA, x0, n)


def degenerate_exp(x0: T.Any, order: int, negate_lambda: bool = False) -> Series:
    """Returns e_lambda^x0(t) truncated at order, whose t^n coefficient
    is (x0)_{n,lambda} / n!. With negate_lambda, e_{-lambda}^x0(t) is
    returned instead, using (x0)_{n,-lambda} = <x0>_{n,lambda}."""

    kind = FactorialKind.RISING_LAMBDA if negate_lambda else FactorialKind.FALLING_LAMBDA
    return Series.from_egf(
        (factorial_at(kind, x0, n) for n in range(order + 1)), order, LAMBDA_RING
    )


def lambda_binomial(k0: T.Any, n: int) -> Poly:
    """Returns the degenerate lambda-binomial coefficient (k0)_{n,lambda} / n!."""

    return falling(k0, n) / math.factorial(n)
