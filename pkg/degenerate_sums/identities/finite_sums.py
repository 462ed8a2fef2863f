"""
Finite sums sum_{k=alpha}^{m} (k)_{alpha,lambda} a_k, for an arbitrary
sequence, for a_k = 1 and for a_k = x^k, against their expressions in
degenerate Stirling numbers of the second kind, degenerate Bernoulli
polynomials and degenerate Frobenius-Euler polynomials.

The left-hand sides are always summed directly from falling factorials.
"""

import typing as T

if T.TYPE_CHECKING:
    # pylint: disable=cyclic-import,unused-import
    from ..config import SuiteConfig

import math

import voluptuous as vol

from .. import appell, common, util
from ..algebra import LAMBDA, LAMBDA_RING, Poly, as_rational
from ..factorial import falling, lambda_binomial
from .base import BadLength, IdentityBase, IdentityResult
from .tables import BaseTables


def _check_range(alpha: int, m: int) -> None:
    if not 1 <= alpha <= m:
        raise ValueError("need 1 <= alpha <= m, got alpha={}, m={}".format(alpha, m))


def direct_sum(alpha: int, m: int, weight: T.Callable[[int], T.Any]) -> Poly:
    """sum_{k=alpha}^{m} (k)_{alpha,lambda} weight(k), term by term."""

    total = LAMBDA_RING.zero()
    for k in range(alpha, m + 1):
        total += falling(k, alpha) * weight(k)
    return total


def verify_thm1(
    alpha: int,
    m: int,
    a: T.Sequence[T.Any],
    tables: T.Optional[BaseTables] = None,
) -> IdentityResult:
    """Checks the finite sum for an arbitrary sequence a_1..a_m against
    sum_k S2(alpha, k) k! sum_{l=k}^{m} C(l, k) a_l minus the same
    expression cut at alpha - 1."""

    tables = tables or BaseTables.default()
    _check_range(alpha, m)
    if len(a) != m:
        raise BadLength("the sequence needs {} members, not {}".format(m, len(a)))
    seq = [as_rational(v) for v in a]

    def block(top: int) -> Poly:
        total = LAMBDA_RING.zero()
        for k in range(1, top + 1):
            inner = sum(
                (util.binomial(l, k) * seq[l - 1] for l in range(k, top + 1)),
                as_rational(0),
            )
            if inner:
                total += tables.s2(alpha, k) * (math.factorial(k) * inner)
        return total

    lhs = direct_sum(alpha, m, lambda k: seq[k - 1])
    rhs = block(m) - block(alpha - 1)
    return IdentityResult.compare(
        "thm1", {"alpha": alpha, "m": m, "a": seq}, lhs, rhs
    )


def _thm2_rhs(alpha: int, m: int, tables: BaseTables) -> Poly:
    total = LAMBDA_RING.zero()
    for k in range(1, m + 1):
        total += tables.s2(alpha, k) * (math.factorial(k) * util.binomial(m + 1, k + 1))
    for k in range(1, alpha):
        total -= tables.s2(alpha, k) * (math.factorial(k) * util.binomial(alpha, k + 1))
    return total


def _thm3_rhs(alpha: int, m: int, tables: BaseTables) -> Poly:
    def bracketed(k: int) -> Poly:
        return tables.s2(alpha + 1, k) + LAMBDA * alpha * tables.s2(alpha, k)

    total = LAMBDA_RING.zero()
    for k in range(1, m + 1):
        total += bracketed(k) * (util.binomial(m, k) * math.factorial(k - 1))
    for k in range(1, alpha):
        total -= bracketed(k) * (util.binomial(alpha - 1, k) * math.factorial(k - 1))
    return total


def _thm4_rhs(alpha: int, m: int, tables: BaseTables) -> Poly:
    beta = appell.bernoulli_poly(alpha + 1, tables.bernoulli(alpha + 1))
    return (beta(as_rational(m + 1)) - beta(as_rational(alpha))) / (alpha + 1)


def verify_sum_powers(
    alpha: int, m: int, tables: T.Optional[BaseTables] = None
) -> T.List[IdentityResult]:
    """Checks sum_{k=alpha}^{m} (k)_{alpha,lambda} against the Stirling
    forms with hockey-stick binomials and with the shifted triangle
    row, the Bernoulli form and the lambda-binomial form."""

    tables = tables or BaseTables.default()
    _check_range(alpha, m)
    params = {"alpha": alpha, "m": m}

    lhs = direct_sum(alpha, m, lambda k: 1)
    thm2 = _thm2_rhs(alpha, m, tables)
    binomial_sum = LAMBDA_RING.zero()
    for k in range(alpha, m + 1):
        binomial_sum += lambda_binomial(k, alpha)

    return [
        IdentityResult.compare("thm2", params, lhs, thm2),
        IdentityResult.compare("thm3", params, lhs, _thm3_rhs(alpha, m, tables)),
        IdentityResult.compare("thm4", params, lhs, _thm4_rhs(alpha, m, tables)),
        IdentityResult.compare(
            "eq23", params, binomial_sum, thm2 / math.factorial(alpha)
        ),
    ]


def _frobenius_form(alpha: int, m: int, x0: T.Any) -> Poly:
    table = appell.frobenius_numbers(alpha, 1 / x0)
    frob = appell.frobenius_poly(alpha, table)
    return (
        frob(as_rational(m + 1)) * x0 ** (m + 1) - frob(as_rational(alpha)) * x0 ** alpha
    ) / (x0 - 1)


def _stirling_form(alpha: int, m: int, x0: T.Any, tables: BaseTables) -> Poly:
    def block(top: int) -> Poly:
        total = LAMBDA_RING.zero()
        for k in range(1, top + 1):
            inner = sum(
                (util.binomial(l + k, k) * x0 ** l for l in range(top - k + 1)),
                as_rational(0),
            )
            total += tables.s2(alpha, k) * (math.factorial(k) * x0 ** k * inner)
        return total

    return block(m) - block(alpha - 1)


def verify_thm5(
    alpha: int, m: int, x0: T.Any, tables: T.Optional[BaseTables] = None
) -> IdentityResult:
    """Checks sum_{k=alpha}^{m} (k)_{alpha,lambda} x0^k against
    (x0^(m+1) H_alpha(m+1|1/x0) - x0^alpha H_alpha(alpha|1/x0)) / (x0 - 1)
    and against the Stirling double sum. Both must match; a failure
    reports the first form that didn't."""

    tables = tables or BaseTables.default()
    x0 = as_rational(x0)
    if x0 in util.EXCLUDED_SAMPLES:
        raise common.DegenerateParameter("x must not be 0 or 1, got {}".format(x0))
    _check_range(alpha, m)
    params = {"alpha": alpha, "m": m, "x": x0}

    lhs = direct_sum(alpha, m, lambda k: x0 ** k)
    frob = _frobenius_form(alpha, m, x0)
    if frob != lhs:
        return IdentityResult.compare("thm5", params, lhs, frob)
    return IdentityResult.compare("thm5", params, lhs, _stirling_form(alpha, m, x0, tables))


class FiniteSumWithSequence(IdentityBase):
    """The finite sum for a seeded random rational sequence."""

    name = "thm1"
    suite = "thm1"
    params_schema = {
        vol.Required("alpha"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.POSITIVE_VALIDATOR,
        vol.Required("a"): [util.RATIONAL_VALIDATOR],
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for alpha in range(1, config.alpha_max + 1):
            for m in range(alpha, config.m_max + 1):
                for sample in range(config.sample_count):
                    rng = util.derive_rng(config.seed, self.name, alpha, m, sample)
                    seq = [util.sample_rational(rng) for _ in range(m)]
                    yield {"alpha": alpha, "m": m, "a": seq}

    def check(self, **params: T.Any) -> T.List[IdentityResult]:
        return [verify_thm1(params["alpha"], params["m"], params["a"], self.tables)]


class SumOfFallingFactorials(IdentityBase):
    """The finite sum with a_k = 1 in its four closed forms."""

    name = "sum_powers"
    suite = "thm2-4"
    params_schema = {
        vol.Required("alpha"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.POSITIVE_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for alpha in range(1, config.alpha_max + 1):
            for m in range(alpha, config.m_max + 1):
                yield {"alpha": alpha, "m": m}

    def check(self, **params: T.Any) -> T.List[IdentityResult]:
        return verify_sum_powers(params["alpha"], params["m"], self.tables)


class WeightedSumOfFallingFactorials(IdentityBase):
    """The finite sum with a_k = x^k at the sampled x."""

    name = "thm5"
    suite = "thm5"
    params_schema = {
        vol.Required("alpha"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.POSITIVE_VALIDATOR,
        vol.Required("x"): util.SAMPLE_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for alpha in range(1, config.alpha_max + 1):
            for m in range(alpha, config.m_max + 1):
                for x0 in config.x_samples:
                    yield {"alpha": alpha, "m": m, "x": x0}

    def check(self, **params: T.Any) -> T.List[IdentityResult]:
        return [verify_thm5(params["alpha"], params["m"], params["x"], self.tables)]
