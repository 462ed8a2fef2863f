"""
This module implements the degenerate Bernoulli and degenerate
Frobenius-Euler numbers and polynomials. The numbers are read off
their generating functions by exact truncated series division, the
polynomials are assembled from the numbers and falling factorials.
"""

import typing as T

import fractions
import functools

from . import common, util
from .algebra import LAMBDA_RING, X_RING, Poly, Series, as_rational
from .factorial import FactorialKind, degenerate_exp, factorial_poly


class InsufficientTable(common.DegenerateSumsError, ValueError):
    """Raised when a polynomial of higher index than a table holds is
    requested."""


class _NumberTable:
    """Immutable list of lambda polynomials indexed 0..max_n."""

    kind = "numbers"

    def __init__(self, numbers: T.Iterable[Poly]) -> None:
        self.numbers = tuple(LAMBDA_RING.coerce(v) for v in numbers)
        self.max_n = len(self.numbers) - 1

    def __getitem__(self, n: int) -> Poly:
        return self.numbers[n]

    def __len__(self) -> int:
        return len(self.numbers)

    def _require(self, n: int) -> None:
        if n > self.max_n:
            raise InsufficientTable(
                "{} holds {} only up to index {}, but {} was requested".format(
                    self, self.kind, self.max_n, n
                )
            )

    def polynomial(self, n: int) -> Poly:
        """Returns sum_k C(n, k) numbers[k] (x)_{n-k,lambda}, the
        Appell-type polynomial belonging to these numbers."""

        self._require(n)
        total = X_RING.zero()
        for k in range(n + 1):
            total += factorial_poly(FactorialKind.FALLING_LAMBDA, n - k) * (
                self.numbers[k] * util.binomial(n, k)
            )
        return total


class BernoulliTable(_NumberTable):
    """The degenerate Bernoulli numbers beta_{n,lambda} for n = 0..max_n."""

    kind = "Bernoulli numbers"

    def __repr__(self) -> str:
        return "<BernoulliTable up to {}>".format(self.max_n)


class FrobeniusTable(_NumberTable):
    """The degenerate Frobenius-Euler numbers H_{n,lambda}(u) for
    n = 0..max_n and a fixed rational u != 1."""

    kind = "Frobenius-Euler numbers"

    def __init__(self, u: fractions.Fraction, numbers: T.Iterable[Poly]) -> None:
        super().__init__(numbers)
        self.u = u

    def __repr__(self) -> str:
        return "<FrobeniusTable u={} up to {}>".format(self.u, self.max_n)


def bernoulli_series(order: int) -> Series:
    """Returns t / (e_lambda(t) - 1) truncated at order."""

    return ((degenerate_exp(1, order + 1) - 1).shift_down(1)).inverse()


@functools.lru_cache(maxsize=None)
def bernoulli_numbers(max_n: int) -> BernoulliTable:
    """Returns beta_{n,lambda} for n <= max_n, lambda symbolic."""

    common.log("Computing Bernoulli numbers up to {}.".format(max_n), level="DEBUG")
    return BernoulliTable(bernoulli_series(max_n).egf_numbers())


def bernoulli_poly(n: int, table: T.Optional[BernoulliTable] = None) -> Poly:
    """Returns beta_{n,lambda}(x) as a polynomial in x."""

    if table is None:
        table = bernoulli_numbers(n)
    return table.polynomial(n)


def frobenius_series(order: int, u: T.Any) -> Series:
    """Returns (1 - u) / (e_lambda(t) - u) truncated at order."""

    u = as_rational(u)
    if u == 1:
        raise common.DegenerateParameter(
            "u must differ from 1, the generating function has a pole there"
        )
    return (degenerate_exp(1, order) - u).inverse() * (1 - u)


@functools.lru_cache(maxsize=None)
def frobenius_numbers(max_n: int, u: T.Any) -> FrobeniusTable:
    """Returns H_{n,lambda}(u) for n <= max_n, lambda symbolic."""

    u = as_rational(u)
    common.log(
        "Computing Frobenius-Euler numbers up to {} for u = {}.".format(max_n, u),
        level="DEBUG",
    )
    return FrobeniusTable(u, frobenius_series(max_n, u).egf_numbers())


def frobenius_poly(n: int, table: FrobeniusTable) -> Poly:
    """Returns H_{n,lambda}(x|u) as a polynomial in x, u taken from table."""

    return table.polynomial(n)
