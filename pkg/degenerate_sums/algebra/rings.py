"""
This module implements the coefficient ring contract and the field of
rational numbers every other ring is built on.
"""

import typing as T

import fractions
import numbers

from .. import common


class NotInvertible(common.DegenerateSumsError, ArithmeticError):
    """Raised when a ring element without multiplicative inverse
    is inverted."""


class Ring:
    """A commutative ring with one.

    Elements are plain Python objects supporting +, -, *, == and
    bool() (False for zero only). The ring object supplies what the
    elements can't: the neutral elements, coercion of foreign values,
    the unit test and inversion."""

    name = "ring"

    def __repr__(self) -> str:
        return "<Ring {}>".format(self.name)

    def __str__(self) -> str:
        return self.name

    def zero(self) -> T.Any:
        """Returns the additive identity."""

        raise NotImplementedError()

    def one(self) -> T.Any:
        """Returns the multiplicative identity."""

        raise NotImplementedError()

    def coerce(self, value: T.Any) -> T.Any:
        """Converts value into an element of this ring. A TypeError is
        raised when that's not possible."""

        raise NotImplementedError()

    def is_unit(self, value: T.Any) -> bool:
        """Tells whether value has a multiplicative inverse."""

        raise NotImplementedError()

    def invert(self, value: T.Any) -> T.Any:
        """Returns the multiplicative inverse of value or raises
        NotInvertible."""

        raise NotImplementedError()


class RationalField(Ring):
    """The field of rational numbers, elements are fractions.Fraction."""

    name = "QQ"

    def __eq__(self, other: T.Any) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash(self.name)

    def zero(self) -> fractions.Fraction:
        return fractions.Fraction(0)

    def one(self) -> fractions.Fraction:
        return fractions.Fraction(1)

    def coerce(self, value: T.Any) -> fractions.Fraction:
        # bool is an int subclass but never a meaningful scalar here
        if isinstance(value, bool) or not isinstance(value, numbers.Rational):
            raise TypeError("can't coerce {!r} into {}".format(value, self.name))
        return fractions.Fraction(value)

    def is_unit(self, value: T.Any) -> bool:
        return self.coerce(value) != 0

    def invert(self, value: T.Any) -> fractions.Fraction:
        value = self.coerce(value)
        if not value:
            raise NotInvertible("0 has no inverse in {}".format(self.name))
        return 1 / value


RATIONALS = RationalField()


def as_rational(value: T.Any) -> fractions.Fraction:
    """Shortcut for RATIONALS.coerce()."""

    return RATIONALS.coerce(value)
