"""
The finite sum sum_{k=1}^{m} (k)_{n,lambda} x^k in terms of degenerate
Eulerian polynomials, checked as a polynomial identity in x and lambda
after clearing the denominators (1-x)^(l+1).
"""

import typing as T

if T.TYPE_CHECKING:
    # pylint: disable=cyclic-import,unused-import
    from ..config import SuiteConfig

import voluptuous as vol

from .. import util
from ..algebra import X, X_RING, Poly
from ..factorial import falling
from .base import IdentityBase, IdentityResult
from .tables import BaseTables


def _cleared_lhs(n: int, m: int) -> Poly:
    """(1-x)^(n+1) sum_{k=1}^{m} (k)_{n,lambda} x^k."""

    total = X_RING.zero()
    for k in range(1, m + 1):
        total += X ** k * falling(k, n)
    return total * (1 - X) ** (n + 1)


def _cleared_rhs(n: int, m: int, corrected: bool, tables: BaseTables) -> Poly:
    total = X * tables.eulerian_poly(n)
    for l in range(n + 1):
        power = m + 1 if corrected and l == 0 else m + 2
        total -= (
            tables.eulerian_poly(l)
            * (1 - X) ** (n - l)
            * X ** power
            * (falling(m + 1, n - l) * util.binomial(n, l))
        )
    return total


def verify_thm7(
    n: int, m: int, corrected: bool = True, tables: T.Optional[BaseTables] = None
) -> IdentityResult:
    """Compares (1-x)^(n+1) sum_{k=1}^{m} (k)_{n,lambda} x^k with
    x A_n(x) - sum_l C(n, l) (m+1)_{n-l,lambda} A_l(x) (1-x)^(n-l) x^e(l).

    With corrected, e(0) = m + 1 and e(l) = m + 2 for l >= 1. Without,
    every e(l) is m + 2; that form doesn't hold and its results are
    marked as expected to fail."""

    tables = tables or BaseTables.default()
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1, got n={}, m={}".format(n, m))
    return IdentityResult.compare(
        "thm7",
        {"n": n, "m": m, "corrected": corrected},
        _cleared_lhs(n, m),
        _cleared_rhs(n, m, corrected, tables),
        expected_fail=not corrected,
    )


class EulerianPowerSum(IdentityBase):
    """The weighted finite sum in Eulerian polynomials, in both forms."""

    name = "thm7"
    suite = "thm7"
    params_schema = {
        vol.Required("n"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.POSITIVE_VALIDATOR,
        vol.Optional("corrected", default=True): bool,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(1, config.n_max + 1):
            for m in range(1, config.m_max + 1):
                for corrected in (True, False):
                    yield {"n": n, "m": m, "corrected": corrected}

    def check(self, **params: T.Any) -> T.List[IdentityResult]:
        return [
            verify_thm7(params["n"], params["m"], params["corrected"], self.tables)
        ]
