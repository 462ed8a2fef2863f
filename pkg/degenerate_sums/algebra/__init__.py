"""
This package contains the exact arithmetic everything else is built on:
rationals, dense polynomials and truncated power series.
"""

from .poly import (
    LAMBDA,
    LAMBDA_RING,
    MINUS_INFINITY,
    QX_RING,
    X,
    X_RING,
    Poly,
    PolynomialRing,
    at_lambda,
    lambda_poly,
    negate_lambda,
    x_poly,
)
from .rings import RATIONALS, NotInvertible, RationalField, Ring, as_rational
from .series import NonUnitConstantTerm, Series


__all__ = [
    "LAMBDA",
    "LAMBDA_RING",
    "MINUS_INFINITY",
    "QX_RING",
    "X",
    "X_RING",
    "Poly",
    "PolynomialRing",
    "at_lambda",
    "lambda_poly",
    "negate_lambda",
    "x_poly",
    "RATIONALS",
    "NotInvertible",
    "RationalField",
    "Ring",
    "as_rational",
    "NonUnitConstantTerm",
    "Series",
    "poly_mul",
    "poly_eval",
    "series_mul",
    "series_inverse",
]


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Exact product of two polynomials over the same ring."""

    if a.ring != b.ring:
        raise TypeError("can't multiply polynomials over {} and {}".format(a.ring, b.ring))
    return a * b


def poly_eval(p: Poly, value: object) -> object:
    """Evaluates p at value by Horner's scheme."""

    return p.evaluate(value)


def series_mul(s: Series, t: Series) -> Series:
    """Truncated product, of order min(s.order, t.order)."""

    return s * t


def series_inverse(s: Series) -> Series:
    """Multiplicative inverse; raises NonUnitConstantTerm when the
    constant term is no unit."""

    return s.inverse()
