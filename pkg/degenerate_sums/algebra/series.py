"""
This module implements truncated formal power series over a
coefficient ring.
"""

import typing as T

import fractions
import math

from .poly import Poly, PolynomialRing
from .rings import NotInvertible, Ring


class NonUnitConstantTerm(NotInvertible):
    """Raised when a series whose constant term is no unit is inverted."""


class Series:
    """A formal power series known up to and including degree order.
    Arithmetic on two series yields the smaller of both orders.
    Instances are immutable."""

    def __init__(
        self, coefficients: T.Iterable[T.Any], order: int, ring: Ring, var: str = "t"
    ) -> None:
        if order < 0:
            raise ValueError("order must be >= 0, but is {!r}".format(order))
        coeffs = [ring.coerce(c) for c in coefficients][: order + 1]
        coeffs.extend([ring.zero()] * (order + 1 - len(coeffs)))
        self.ring = ring
        self.order = order
        self.var = var
        self.coefficients = tuple(coeffs)  # type: T.Tuple[T.Any, ...]

    @classmethod
    def one(cls, ring: Ring, order: int, var: str = "t") -> "Series":
        """The constant series 1."""

        return cls([ring.one()], order, ring, var)

    @classmethod
    def zero(cls, ring: Ring, order: int, var: str = "t") -> "Series":
        """The constant series 0."""

        return cls([], order, ring, var)

    @classmethod
    def variable(cls, ring: Ring, order: int, var: str = "t") -> "Series":
        """The series consisting of the variable alone."""

        return cls([ring.zero(), ring.one()], order, ring, var)

    @classmethod
    def from_poly(cls, poly: Poly, order: int, var: str = "t") -> "Series":
        """Truncates a polynomial to a series over its coefficient ring."""

        return cls(poly.coefficients, order, poly.ring.base, var)

    @classmethod
    def from_egf(
        cls, numbers: T.Iterable[T.Any], order: int, ring: Ring, var: str = "t"
    ) -> "Series":
        """Builds sum(numbers[n] * t^n / n!)."""

        return cls(
            (
                ring.coerce(c) * fractions.Fraction(1, math.factorial(n))
                for n, c in enumerate(numbers)
            ),
            order,
            ring,
            var,
        )

    def __repr__(self) -> str:
        return "<Series {} + O({}^{})>".format(self.to_poly(), self.var, self.order + 1)

    def __eq__(self, other: T.Any) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.order, self.coefficients))

    def _rebuild(self, coefficients: T.Iterable[T.Any], order: int) -> "Series":
        return Series(coefficients, order, self.ring, self.var)

    def _check_ring(self, other: "Series") -> None:
        if other.ring != self.ring:
            raise TypeError(
                "can't combine series over {} and {}".format(self.ring, other.ring)
            )

    def __add__(self, other: T.Any) -> "Series":
        if not isinstance(other, Series):
            try:
                other = Series([other], self.order, self.ring, self.var)
            except TypeError:
                return NotImplemented
        self._check_ring(other)
        order = min(self.order, other.order)
        return self._rebuild(
            (a + b for a, b in zip(self.coefficients, other.coefficients)), order
        )

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return self._rebuild((-c for c in self.coefficients), self.order)

    def __sub__(self, other: T.Any) -> "Series":
        return self + (-other)

    def __rsub__(self, other: T.Any) -> "Series":
        return (-self) + other

    def __mul__(self, other: T.Any) -> "Series":
        if not isinstance(other, Series):
            try:
                scalar = self.ring.coerce(other)
            except TypeError:
                return NotImplemented
            return self._rebuild((c * scalar for c in self.coefficients), self.order)

        self._check_ring(other)
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        coeffs = []
        for n in range(order + 1):
            acc = self.ring.zero()
            for k in range(n + 1):
                if a[k] and b[n - k]:
                    acc = acc + a[k] * b[n - k]
            coeffs.append(acc)
        return self._rebuild(coeffs, order)

    __rmul__ = __mul__

    def __truediv__(self, other: T.Any) -> "Series":
        if isinstance(other, Series):
            return self * other.inverse()
        try:
            scalar = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return self * self.ring.invert(scalar)

    def __pow__(self, exponent: int) -> "Series":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative int, not {!r}".format(exponent))
        result = Series.one(self.ring, self.order, self.var)
        for _ in range(exponent):
            result = result * self
        return result

    def coefficient(self, degree: int) -> T.Any:
        """Returns the coefficient of var^degree. Asking beyond the
        truncation order is an error."""

        if degree > self.order:
            raise IndexError(
                "degree {} is beyond the truncation order {}".format(degree, self.order)
            )
        if degree < 0:
            return self.ring.zero()
        return self.coefficients[degree]

    def inverse(self) -> "Series":
        """Returns the multiplicative inverse, computed coefficient by
        coefficient from s * q = 1."""

        head = self.coefficients[0]
        if not self.ring.is_unit(head):
            raise NonUnitConstantTerm(
                "constant term {} is not a unit in {}".format(head, self.ring)
            )
        head_inv = self.ring.invert(head)
        coeffs = [head_inv]
        for n in range(1, self.order + 1):
            acc = self.ring.zero()
            for k in range(1, n + 1):
                if self.coefficients[k]:
                    acc = acc + self.coefficients[k] * coeffs[n - k]
            coeffs.append(-(acc * head_inv))
        return self._rebuild(coeffs, self.order)

    def truncate(self, order: int) -> "Series":
        """Lowers the truncation order."""

        if order > self.order:
            raise ValueError(
                "can't raise the order from {} to {}".format(self.order, order)
            )
        return self._rebuild(self.coefficients, order)

    def shift_down(self, places: int = 1) -> "Series":
        """Divides by var^places. The dropped low coefficients must vanish.
        The order shrinks by places."""

        for deg in range(min(places, self.order + 1)):
            if self.coefficients[deg]:
                raise ValueError(
                    "can't divide by {}^{}: coefficient {} is {}".format(
                        self.var, places, deg, self.coefficients[deg]
                    )
                )
        return self._rebuild(self.coefficients[places:], self.order - places)

    def scale_argument(self, factor: T.Any) -> "Series":
        """Returns s(factor * var)."""

        factor = self.ring.coerce(factor)
        coeffs = []
        power = self.ring.one()
        for coeff in self.coefficients:
            coeffs.append(coeff * power)
            power = power * factor
        return self._rebuild(coeffs, self.order)

    def map_coefficients(
        self, func: T.Callable[[T.Any], T.Any], ring: T.Optional[Ring] = None
    ) -> "Series":
        """Applies func to every coefficient."""

        return Series(
            (func(c) for c in self.coefficients), self.order, ring or self.ring, self.var
        )

    def egf_numbers(self) -> T.List[T.Any]:
        """Returns n! times the coefficient of var^n for n = 0..order."""

        return [c * math.factorial(n) for n, c in enumerate(self.coefficients)]

    def to_poly(self, ring: T.Optional[PolynomialRing] = None) -> Poly:
        """Returns the retained coefficients as a polynomial."""

        if ring is None:
            ring = PolynomialRing(self.ring, self.var)
        return Poly(self.coefficients, ring)

