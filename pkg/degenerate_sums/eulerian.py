"""
This module implements the degenerate Eulerian numbers and polynomials,
Carlitz's variant of them, the exponential generating function and the
descent statistic on permutations, which yields the classical Eulerian
polynomials by brute force.
"""

import typing as T

import functools
import itertools

from cached_property import cached_property

from . import common, util
from .algebra import LAMBDA_RING, QX_RING, X, X_RING, Poly, Series, as_rational
from .factorial import degenerate_exp, falling, rising
from .stirling import Family, Triangle


# permutations of more elements are not enumerated
DESCENT_LIMIT = 8


class TruncationTooShort(common.DegenerateSumsError, ValueError):
    """Raised when a truncated series doesn't determine a polynomial
    completely."""


class TooLarge(common.DegenerateSumsError, ValueError):
    """Raised when a brute-force enumeration would be too expensive."""


class EulerianRow:
    """The degenerate Eulerian numbers <n m>_lambda for m = 0..n."""

    def __init__(self, n: int, numbers: T.Iterable[T.Any]) -> None:
        self.n = n
        self.numbers = tuple(LAMBDA_RING.coerce(v) for v in numbers)

    def __repr__(self) -> str:
        return "<EulerianRow {}: {}>".format(
            self.n, ", ".join(str(v) for v in self.numbers)
        )

    def __getitem__(self, m: int) -> Poly:
        return self.numbers[m]

    @cached_property
    def row_sum(self) -> Poly:
        """Sum of the row, n! for every lambda."""

        return sum(self.numbers, LAMBDA_RING.zero())


class EulerianPoly:
    """The degenerate Eulerian polynomial A_{n,lambda}(t), stored as a
    polynomial in x over the lambda polynomials."""

    def __init__(self, n: int, poly: Poly) -> None:
        self.n = n
        self.poly = X_RING.coerce(poly)

    def __repr__(self) -> str:
        return "<EulerianPoly {}: {}>".format(self.n, self.poly)

    def __eq__(self, other: T.Any) -> bool:
        if not isinstance(other, EulerianPoly):
            return NotImplemented
        return self.n == other.n and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.n, self.poly))

    def __call__(self, t0: T.Any) -> Poly:
        return LAMBDA_RING.coerce(self.poly(as_rational(t0)))

    @cached_property
    def row_sum(self) -> Poly:
        """A_{n,lambda}(1)."""

        return self(1)


@functools.lru_cache(maxsize=None)
def eulerian_number(n: int, m: int) -> Poly:
    """<n m>_lambda = sum_{k=0}^{m+1} (-1)^k C(n+1, k) (m-k+1)_{n,lambda},
    with <0 0>_lambda = 1."""

    if n < 0 or m < 0 or m > n:
        raise common.IndexRangeError(
            "Eulerian index ({}, {}) violates 0 <= m <= n".format(n, m)
        )
    if n == 0:
        return LAMBDA_RING.one()
    total = LAMBDA_RING.zero()
    for k in range(m + 2):
        total += falling(m - k + 1, n) * (util.sign(k) * util.binomial(n + 1, k))
    return total


def eulerian_row(n: int) -> EulerianRow:
    """Returns the row <n 0>_lambda, ..., <n n>_lambda."""

    return EulerianRow(n, (eulerian_number(n, m) for m in range(n + 1)))


@functools.lru_cache(maxsize=None)
def eulerian_triangle(size: int) -> Triangle:
    """The degenerate Eulerian numbers as a Triangle."""

    return Triangle(
        Family.EULERIAN_LAMBDA,
        (eulerian_row(n).numbers for n in range(size + 1)),
    )


@functools.lru_cache(maxsize=None)
def eulerian_poly_explicit(n: int) -> EulerianPoly:
    """A_{n,lambda}(t) = sum_m <n m>_lambda t^m."""

    return EulerianPoly(n, Poly(eulerian_row(n).numbers, X_RING))


@functools.lru_cache(maxsize=None)
def eulerian_poly_recurrence(n: int) -> EulerianPoly:
    """A_{n,lambda}(t) by the recurrence
    A_n = sum_{k=0}^{n-1} C(n, k) A_k (t-1)^(n-k-1) <1>_{n-k,lambda}
    starting from A_0 = 1."""

    if n < 0:
        raise ValueError("n must be >= 0, but is {!r}".format(n))
    if n == 0:
        return EulerianPoly(0, X_RING.one())
    total = X_RING.zero()
    for k in range(n):
        total += (
            eulerian_poly_recurrence(k).poly
            * (X - 1) ** (n - k - 1)
            * (rising(1, n - k) * util.binomial(n, k))
        )
    return EulerianPoly(n, total)


def power_sum_poly(n: int, order: int, shift: int = 1) -> Poly:
    """Returns sum_{j=0}^{order} (j+shift)_{n,lambda} x^j."""

    return Poly((falling(j + shift, n) for j in range(order + 1)), X_RING)


def _cleared(n: int, order: int, shift: int) -> Poly:
    """(1-x)^(n+1) times the power sum, keeping the degrees <= order,
    which are exact despite the truncation."""

    return ((1 - X) ** (n + 1) * power_sum_poly(n, order, shift)).truncate(order)


def eulerian_gf_check(
    n: int, order: int, candidate: T.Optional[EulerianPoly] = None
) -> bool:
    """Checks A_{n,lambda}(x) against (1-x)^(n+1) sum_j (j+1)_{n,lambda} x^j
    on all degrees <= order - (n+1). candidate defaults to the explicit
    polynomial."""

    if order < n:
        raise ValueError("order must be >= n, but {} < {}".format(order, n))
    if candidate is None:
        candidate = eulerian_poly_explicit(n)
    limit = order - (n + 1)
    return _cleared(n, order, 1).truncate(limit) == candidate.poly.truncate(limit)


def carlitz_poly(n: int, order: T.Optional[int] = None) -> Poly:
    """Returns Carlitz's E_{n,lambda}(x), defined by
    E_{n,lambda}(x) / (1-x)^(n+1) = sum_j (j)_{n,lambda} x^j. Only the
    degrees <= order - (n+1) are reconstructed; TruncationTooShort is
    raised when the exact part of the product reaches beyond them."""

    if order is None:
        order = 2 * n + 2
    if order < n + 2:
        raise ValueError("order must be >= n + 2, but {} < {}".format(order, n + 2))
    limit = order - (n + 1)
    product = _cleared(n, order, 0)
    if product.degree > limit:
        raise TruncationTooShort(
            "order {} only determines E_{} up to degree {}, but the product "
            "has degree {}".format(order, n, limit, product.degree)
        )
    return product


def eulerian_egf_series(order: int, t0: T.Any) -> Series:
    """Returns (t0 - 1) / (t0 - e_{-lambda}((t0 - 1) x)) truncated at
    order, a series in x over the lambda polynomials."""

    t0 = as_rational(t0)
    if t0 == 1:
        raise common.DegenerateParameter(
            "t0 must differ from 1, the generating function has a pole there"
        )
    inner = degenerate_exp(1, order, negate_lambda=True).scale_argument(t0 - 1)
    return (t0 - inner).inverse() * (t0 - 1)


def eulerian_egf_check(order: int, t0: T.Any) -> bool:
    """Checks that the x^n coefficient of the exponential generating
    function at t0 is A_{n,lambda}(t0) / n! for every n <= order."""

    egf = eulerian_egf_series(order, t0)
    expected = Series.from_egf(
        (eulerian_poly_explicit(n)(t0) for n in range(order + 1)), order, LAMBDA_RING
    )
    return egf == expected


def count_descents(perm: T.Sequence[int]) -> int:
    """Number of positions i with perm[i] > perm[i+1]."""

    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


@functools.lru_cache(maxsize=None)
def descent_polynomial(n: int) -> Poly:
    """Returns sum over all permutations of 1..n of t^descents, by
    enumeration in lexicographic order."""

    if n > DESCENT_LIMIT:
        raise TooLarge(
            "won't enumerate {}! permutations, the limit is n = {}".format(
                n, DESCENT_LIMIT
            )
        )
    if n < 0:
        raise ValueError("n must be >= 0, but is {!r}".format(n))
    counts = [0] * max(n, 1)
    for perm in itertools.permutations(range(1, n + 1)):
        counts[count_descents(perm)] += 1
    return Poly(counts, QX_RING)
