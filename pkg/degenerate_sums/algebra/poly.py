"""
This module implements dense univariate polynomials over a coefficient
ring and the polynomial rings used all around the package.
"""

import typing as T

from cached_property import cached_property

from .rings import RATIONALS, NotInvertible, Ring


class MinusInfinity:
    """The degree of the zero polynomial. It compares less than every
    integer and is never a number itself."""

    _instance = None  # type: T.Optional[MinusInfinity]

    def __new__(cls) -> "MinusInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __lt__(self, other: T.Any) -> bool:
        return other is not self

    def __le__(self, other: T.Any) -> bool:
        return True

    def __gt__(self, other: T.Any) -> bool:
        return False

    def __ge__(self, other: T.Any) -> bool:
        return other is self


MINUS_INFINITY = MinusInfinity()

DegreeType = T.Union[int, MinusInfinity]


class PolynomialRing(Ring):
    """The ring base[var] of polynomials in the indeterminate var."""

    def __init__(self, base: Ring, var: str) -> None:
        self.base = base
        self.var = var
        self.name = "{}[{}]".format(base.name, var)

    def __eq__(self, other: T.Any) -> bool:
        return (
            isinstance(other, PolynomialRing)
            and self.var == other.var
            and self.base == other.base
        )

    def __hash__(self) -> int:
        return hash((self.base, self.var))

    def zero(self) -> "Poly":
        return Poly((), self)

    def one(self) -> "Poly":
        return Poly((self.base.one(),), self)

    def variable(self) -> "Poly":
        """Returns the indeterminate as a polynomial."""

        return Poly((self.base.zero(), self.base.one()), self)

    def coerce(self, value: T.Any) -> "Poly":
        if isinstance(value, Poly) and value.ring == self:
            return value
        return Poly((self.base.coerce(value),), self)

    def is_unit(self, value: T.Any) -> bool:
        value = self.coerce(value)
        return value.degree == 0 and self.base.is_unit(value.coefficients[0])

    def invert(self, value: T.Any) -> "Poly":
        value = self.coerce(value)
        if value.degree != 0:
            raise NotInvertible("{} is not a unit in {}".format(value, self.name))
        return Poly((self.base.invert(value.coefficients[0]),), self)


class Poly:
    """A polynomial stored densely as the tuple of its coefficients,
    index = degree. Trailing zeros are stripped, so the zero polynomial
    has no coefficients at all. Instances are immutable."""

    def __init__(self, coefficients: T.Iterable[T.Any], ring: PolynomialRing) -> None:
        base = ring.base
        coeffs = [base.coerce(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.ring = ring
        self.coefficients = tuple(coeffs)  # type: T.Tuple[T.Any, ...]

    @classmethod
    def _canonical(cls, coefficients: T.List[T.Any], ring: PolynomialRing) -> "Poly":
        """Builds a polynomial from already coerced coefficients."""

        while coefficients and not coefficients[-1]:
            coefficients.pop()
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.coefficients = tuple(coefficients)
        return poly

    def __repr__(self) -> str:
        return "<Poly {} in {}>".format(self, self.ring.name)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"

        terms = []
        for deg, coeff in enumerate(self.coefficients):
            if not coeff:
                continue
            if isinstance(coeff, Poly) and coeff.degree > 0:
                coeff_str = "({})".format(coeff)
            else:
                coeff_str = str(coeff)
            if deg == 0:
                terms.append(coeff_str)
            elif deg == 1:
                terms.append("{}*{}".format(coeff_str, self.ring.var))
            else:
                terms.append("{}*{}^{}".format(coeff_str, self.ring.var, deg))
        return " + ".join(terms)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __hash__(self) -> int:
        if len(self.coefficients) <= 1:
            return hash(self.constant_term)
        return hash(self.coefficients)

    def __eq__(self, other: T.Any) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coefficients == other.coefficients

    def _coerce(self, other: T.Any) -> T.Optional["Poly"]:
        try:
            return self.ring.coerce(other)
        except TypeError:
            return None

    def _scalar(self, other: T.Any) -> T.Any:
        try:
            return self.ring.base.coerce(other)
        except TypeError:
            return None

    def _over_self(self, other: T.Any) -> bool:
        """Whether other is a polynomial with coefficients in this ring.
        Such operands are handed over to other, since Python never tries
        the reflected method of an operand of the same type."""

        return isinstance(other, Poly) and other.ring.base == self.ring

    def __add__(self, other: T.Any) -> "Poly":
        if self._over_self(other):
            return other + self
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        zero = self.ring.base.zero()
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        coeffs = [
            (a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
            for i in range(size)
        ]
        return self._canonical(coeffs, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return self._canonical([-c for c in self.coefficients], self.ring)

    def __sub__(self, other: T.Any) -> "Poly":
        if self._over_self(other):
            return -(other - self)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: T.Any) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: T.Any) -> "Poly":
        if isinstance(other, Poly) and other.ring == self.ring:
            return self._convolve(other)
        if self._over_self(other):
            return other * self
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self._canonical([c * scalar for c in self.coefficients], self.ring)

    __rmul__ = __mul__

    def _convolve(self, other: "Poly") -> "Poly":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return self.ring.zero()
        coeffs = [self.ring.base.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                coeffs[i + j] = coeffs[i + j] + x * y
        return self._canonical(coeffs, self.ring)

    def __truediv__(self, other: T.Any) -> "Poly":
        """Division by a unit of the coefficient ring."""

        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self * self.ring.base.invert(scalar)

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative int, not {!r}".format(exponent))
        result = self.ring.one()
        square = self
        while exponent:
            if exponent & 1:
                result = result * square
            exponent >>= 1
            if exponent:
                square = square * square
        return result

    def __call__(self, value: T.Any) -> T.Any:
        return self.evaluate(value)

    @cached_property
    def degree(self) -> DegreeType:
        """The degree, MINUS_INFINITY for the zero polynomial."""

        if not self.coefficients:
            return MINUS_INFINITY
        return len(self.coefficients) - 1

    @property
    def constant_term(self) -> T.Any:
        """The coefficient of degree 0."""

        return self.coefficient(0)

    def coefficient(self, degree: int) -> T.Any:
        """Returns the coefficient of the given degree, zero when it's
        out of range."""

        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return self.ring.base.zero()

    def evaluate(self, value: T.Any) -> T.Any:
        """Evaluates by Horner's scheme. value may be anything the
        coefficients can be multiplied with, including another
        polynomial, in which case this is a substitution."""

        acc = self.ring.base.zero()  # type: T.Any
        for coeff in reversed(self.coefficients):
            acc = acc * value + coeff
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Returns self(inner) as an element of inner's ring."""

        ring = inner.ring
        acc = ring.zero()
        for coeff in reversed(self.coefficients):
            acc = acc * inner + ring.coerce(coeff)
        return acc

    def map_coefficients(
        self, func: T.Callable[[T.Any], T.Any], ring: T.Optional[PolynomialRing] = None
    ) -> "Poly":
        """Applies func to every coefficient. The result lives in ring,
        which defaults to the ring of this polynomial."""

        return Poly((func(c) for c in self.coefficients), ring or self.ring)

    def negate_variable(self) -> "Poly":
        """Substitutes -var for var."""

        return self._canonical(
            [-c if deg % 2 else c for deg, c in enumerate(self.coefficients)],
            self.ring,
        )

    def truncate(self, max_degree: int) -> "Poly":
        """Drops all terms of degree greater than max_degree."""

        return self._canonical(list(self.coefficients[: max_degree + 1]), self.ring)


# the ring every degenerate number lives in
LAMBDA_RING = PolynomialRing(RATIONALS, "L")
# polynomials in x (or t) over the lambda polynomials
X_RING = PolynomialRing(LAMBDA_RING, "x")
# classical polynomials with rational coefficients
QX_RING = PolynomialRing(RATIONALS, "x")

LAMBDA = LAMBDA_RING.variable()
X = X_RING.variable()


def lambda_poly(*coefficients: T.Any) -> Poly:
    """Shortcut for building a lambda polynomial from its coefficients
    in increasing degree."""

    return Poly(coefficients, LAMBDA_RING)


def x_poly(*coefficients: T.Any) -> Poly:
    """Shortcut for building a polynomial in x over the lambda
    polynomials from its coefficients in increasing degree."""

    return Poly(coefficients, X_RING)


def at_lambda(value: T.Any, lam: T.Any) -> T.Any:
    """Specializes lambda to lam in a lambda polynomial or, coefficient
    by coefficient, in a polynomial in x. Polynomials in x come back
    over the rationals when lam is rational."""

    if isinstance(value, Poly) and value.ring == X_RING:
        if isinstance(lam, Poly):
            return value.map_coefficients(lambda c: c(lam))
        return value.map_coefficients(lambda c: c(lam), QX_RING)
    return LAMBDA_RING.coerce(value)(lam)


def negate_lambda(value: Poly) -> Poly:
    """Substitutes -lambda for lambda, exactly, by flipping the signs of
    odd powers of lambda."""

    if value.ring == X_RING:
        return value.map_coefficients(lambda c: c.negate_variable())
    return LAMBDA_RING.coerce(value).negate_variable()
