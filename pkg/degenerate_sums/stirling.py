"""
This module implements the triangles of degenerate Stirling numbers of
both kinds and of the unsigned degenerate Stirling numbers of the first
kind, together with conversion between polynomial bases.
"""

import typing as T

import enum
import functools
import math

from cached_property import cached_property

from . import common, util
from .algebra import LAMBDA, LAMBDA_RING, X, X_RING, Poly, Series
from .factorial import FactorialKind, degenerate_exp, factorial_poly, falling


class Family(enum.Enum):
    """The number families a Triangle can hold."""

    S2_LAMBDA = "s2"
    S1_LAMBDA = "s1"
    BRACKET_LAMBDA = "bracket"
    EULERIAN_LAMBDA = "eulerian"


class Triangle:
    """A lower-triangular table of lambda polynomials indexed (n, k)
    with 0 <= k <= n <= size. Entries with k < 0 or k > n read as zero,
    rows beyond size are an error. Instances are immutable."""

    def __init__(self, family: Family, rows: T.Iterable[T.Iterable[T.Any]]) -> None:
        _rows = tuple(tuple(LAMBDA_RING.coerce(v) for v in row) for row in rows)
        if not _rows:
            raise ValueError("a triangle needs at least row 0")
        for n, row in enumerate(_rows):
            if len(row) != n + 1:
                raise ValueError(
                    "row {} of a triangle needs {} entries, not {}".format(
                        n, n + 1, len(row)
                    )
                )
        self.family = family
        self.rows = _rows  # type: T.Tuple[T.Tuple[Poly, ...], ...]
        self.size = len(_rows) - 1

    def __repr__(self) -> str:
        return "<Triangle {} up to row {}>".format(self.family.value, self.size)

    def __eq__(self, other: T.Any) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.family == other.family and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.family, self.rows))

    def __getitem__(self, index: T.Tuple[int, int]) -> Poly:
        n, k = index
        if n < 0 or n > self.size:
            raise common.IndexRangeError(
                "row {} is outside of {!r}".format(n, self)
            )
        if k < 0 or k > n:
            return LAMBDA_RING.zero()
        return self.rows[n][k]

    def row(self, n: int) -> T.Tuple[Poly, ...]:
        """Returns the entries (n, 0), ..., (n, n)."""

        if n < 0 or n > self.size:
            raise common.IndexRangeError("row {} is outside of {!r}".format(n, self))
        return self.rows[n]

    def evaluate(self, lam: T.Any) -> T.List[T.List[T.Any]]:
        """Returns all rows with lambda specialized to lam."""

        return [[entry(lam) for entry in row] for row in self.rows]

    @cached_property
    def at_zero(self) -> T.List[T.List[T.Any]]:
        """The rows at lambda = 0, the classical numbers."""

        return self.evaluate(0)

    def with_entry(self, n: int, k: int, value: T.Any) -> "Triangle":
        """Returns a copy with entry (n, k) replaced by value."""

        if n < 0 or n > self.size or k < 0 or k > n:
            raise common.IndexRangeError(
                "entry ({}, {}) is outside of {!r}".format(n, k, self)
            )
        rows = [list(row) for row in self.rows]
        rows[n][k] = value
        return Triangle(self.family, rows)


def _build_triangle(
    family: Family, size: int, step: T.Callable[[T.Sequence[Poly], int], T.List[Poly]]
) -> Triangle:
    """Builds rows 0..size from row 0 = [1], step mapping row n
    (and n) to row n + 1."""

    if size < 0:
        raise ValueError("size must be >= 0, but is {!r}".format(size))
    common.log(
        "Building the {} triangle up to row {}.".format(family.value, size),
        level="DEBUG",
    )
    rows = [[LAMBDA_RING.one()]]
    for n in range(size):
        rows.append(step(rows[n], n))
    return Triangle(family, rows)


def _entry(row: T.Sequence[Poly], k: int) -> Poly:
    if 0 <= k < len(row):
        return row[k]
    return LAMBDA_RING.zero()


@functools.lru_cache(maxsize=None)
def s2_triangle(size: int) -> Triangle:
    """Degenerate Stirling numbers of the second kind by the recurrence
    S2(n+1, k) = S2(n, k-1) + (k - n lambda) S2(n, k)."""

    def step(row: T.Sequence[Poly], n: int) -> T.List[Poly]:
        return [
            _entry(row, k - 1) + (LAMBDA * (-n) + k) * _entry(row, k)
            for k in range(n + 2)
        ]

    return _build_triangle(Family.S2_LAMBDA, size, step)


@functools.lru_cache(maxsize=None)
def s1_triangle(size: int) -> Triangle:
    """Degenerate Stirling numbers of the first kind by the recurrence
    S1(n+1, k) = S1(n, k-1) + (k lambda - n) S1(n, k), which follows from
    (x)_{l,lambda} (x - n) = (x)_{l+1,lambda} + (l lambda - n) (x)_{l,lambda}."""

    def step(row: T.Sequence[Poly], n: int) -> T.List[Poly]:
        return [
            _entry(row, k - 1) + (LAMBDA * k - n) * _entry(row, k)
            for k in range(n + 2)
        ]

    return _build_triangle(Family.S1_LAMBDA, size, step)


@functools.lru_cache(maxsize=None)
def bracket_triangle(size: int) -> Triangle:
    """Unsigned degenerate Stirling numbers of the first kind,
    [n k]_lambda = (-1)^(n-k) S1(n, k)."""

    s1 = s1_triangle(size)
    return Triangle(
        Family.BRACKET_LAMBDA,
        (
            [s1[n, k] * util.sign(n - k) for k in range(n + 1)]
            for n in range(size + 1)
        ),
    )


def _check_index(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise common.IndexRangeError(
            "index ({}, {}) violates 0 <= k <= n".format(n, k)
        )


def s2_explicit(n: int, k: int) -> Poly:
    """S2(n, k) by the explicit alternating sum
    (1/k!) sum_l C(k, l) (-1)^(k-l) (l)_{n,lambda}."""

    _check_index(n, k)
    total = LAMBDA_RING.zero()
    for l in range(k + 1):
        total += falling(l, n) * (util.binomial(k, l) * util.sign(k - l))
    return total / math.factorial(k)


def s2_gf_coefficients(k: int, order: int) -> Series:
    """Returns (e_lambda(t) - 1)^k / k! truncated at order. n! times its
    t^n coefficient is S2(n, k)."""

    return (degenerate_exp(1, order) - 1) ** k / math.factorial(k)


def bracket(n: int, k: int) -> Poly:
    """The unsigned degenerate Stirling number of the first kind."""

    _check_index(n, k)
    return bracket_triangle(n)[n, k]


class BasisRemainder(common.DegenerateSumsError, ArithmeticError):
    """Raised when peeling off leading terms doesn't end at zero, which
    means a basis polynomial isn't monic."""


class PolyBasis(enum.Enum):
    """Bases of the polynomials in x, each of them monic and of exact
    degree n in its n-th element."""

    MONOMIAL = "monomial"
    FALLING_CLASSICAL = "falling"
    FALLING_LAMBDA = "falling_lambda"
    RISING_CLASSICAL = "rising"
    RISING_LAMBDA = "rising_lambda"

    def element(self, n: int) -> Poly:
        """Returns the n-th basis polynomial in the monomial basis."""

        if self is PolyBasis.MONOMIAL:
            return X ** n
        return factorial_poly(FactorialKind(self.value), n)


def _to_monomial(p: Poly, basis: PolyBasis) -> Poly:
    total = X_RING.zero()
    for n, coeff in enumerate(p.coefficients):
        if coeff:
            total += basis.element(n) * coeff
    return total


def _from_monomial(p: Poly, basis: PolyBasis) -> Poly:
    """Peels off leading terms, which works since every basis is monic."""

    remainder = p
    coeffs = [LAMBDA_RING.zero()] * len(p.coefficients)
    for deg in range(len(p.coefficients) - 1, -1, -1):
        coeff = remainder.coefficient(deg)
        if coeff:
            coeffs[deg] = coeff
            remainder -= basis.element(deg) * coeff
    if remainder:
        raise BasisRemainder(
            "conversion to {} left remainder {}".format(basis.value, remainder)
        )
    return Poly(coeffs, X_RING)


def change_basis(p: Poly, from_basis: PolyBasis, to_basis: PolyBasis) -> Poly:
    """Converts the coefficient list p, read in from_basis, into the
    coefficient list of the same polynomial in to_basis."""

    p = X_RING.coerce(p)
    if from_basis is to_basis:
        return p
    return _from_monomial(_to_monomial(p, from_basis), to_basis)


def connection_matrix(
    from_basis: PolyBasis, to_basis: PolyBasis, size: int
) -> T.List[T.List[Poly]]:
    """Row n holds the to_basis coefficients of the n-th from_basis
    polynomial, for n = 0..size. The matrix is lower unitriangular."""

    matrix = []
    for n in range(size + 1):
        unit = Poly([0] * n + [1], X_RING)
        converted = change_basis(unit, from_basis, to_basis)
        matrix.append([converted.coefficient(k) for k in range(n + 1)])
    return matrix
