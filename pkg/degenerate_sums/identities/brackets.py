"""
Recurrence of the unsigned degenerate Stirling numbers of the first kind
that comes out of expanding <x>_{m+1} in the rising lambda-factorials.
"""

import typing as T

if T.TYPE_CHECKING:
    # pylint: disable=cyclic-import,unused-import
    from ..config import SuiteConfig

import math

import voluptuous as vol

from .. import util
from ..algebra import LAMBDA, LAMBDA_RING, Poly
from ..factorial import rising
from .base import IdentityBase, IdentityResult
from .tables import BaseTables


def _bracket_rhs(m: int, j: int, corrected: bool, tables: BaseTables) -> Poly:
    total = LAMBDA_RING.zero()
    for k in range(j, m + 1):
        # <x>_{k+1,lambda} / x is <x+lambda>_{k,lambda}, and
        # <lambda>_{i,lambda} = lambda^i i!
        if corrected:
            shift = LAMBDA ** (k - j) * math.factorial(k - j)
        else:
            shift = rising(1, k - j)
        total += (
            tables.bracket(m, k) * rising(1, k - j)
            - LAMBDA * (k + 1) * tables.bracket(m + 1, k + 2) * shift
        ) * util.binomial(k, j)
    return total


def verify_thm11(
    m: int, corrected: bool = True, tables: T.Optional[BaseTables] = None
) -> T.List[IdentityResult]:
    """For every 0 <= j <= m, compares [m+1, j+1]_lambda with
    sum_{k=j}^{m} C(k, j) ([m k]_lambda <1>_{k-j,lambda}
    - lambda (k+1) [m+1, k+2]_lambda <s>_{k-j,lambda}).

    With corrected, s = lambda. Without, s = 1; that form only holds for
    m <= 1 and its results are marked as expected to fail."""

    tables = tables or BaseTables.default()
    if m < 0:
        raise ValueError("m must be >= 0, but is {!r}".format(m))
    return [
        IdentityResult.compare(
            "thm11",
            {"m": m, "j": j, "corrected": corrected},
            tables.bracket(m + 1, j + 1),
            _bracket_rhs(m, j, corrected, tables),
            expected_fail=not corrected,
        )
        for j in range(m + 1)
    ]


class BracketRecurrence(IdentityBase):
    """The bracket recurrence for every j of one row, in both forms."""

    name = "thm11"
    suite = "thm11"
    params_schema = {
        vol.Required("m"): util.NAT_VALIDATOR,
        vol.Optional("corrected", default=True): bool,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for m in range(config.n_max + 1):
            for corrected in (True, False):
                yield {"m": m, "corrected": corrected}

    def check(self, **params: T.Any) -> T.List[IdentityResult]:
        return verify_thm11(params["m"], params["corrected"], self.tables)
