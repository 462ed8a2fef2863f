"""
Smaller identities the sum formulas rest on, the cross-checks between the
independent routes to the triangles and the generating-function
roundtrips. Every identity here yields exactly one result per parameter
combination, which is what verify_misc() returns.
"""

import typing as T

if T.TYPE_CHECKING:
    # pylint: disable=cyclic-import,unused-import
    from ..config import SuiteConfig

import math

import voluptuous as vol

from .. import appell, eulerian, stirling, util
from ..algebra import LAMBDA, LAMBDA_RING, X, X_RING, Series, at_lambda, negate_lambda
from ..factorial import FactorialKind, degenerate_exp, factorial_poly, falling, rising
from .base import IdentityBase, IdentityResult, UnknownIdentity
from .tables import BaseTables


# the Eulerian rows compared against the descent enumeration
DESCENT_CHECK_MAX_N = 6
# extra series order beyond n for the Eulerian power-sum roundtrip
EULERIAN_GF_EXTRA_ORDER = 12


class _MiscIdentity(IdentityBase):
    """Identity with a single result per parameter combination."""

    def compare(self, params: T.Dict[str, T.Any], lhs: T.Any, rhs: T.Any) -> IdentityResult:
        """Builds the result for this identity."""

        return IdentityResult.compare(self.name, params, lhs, rhs)

    def check(self, **params: T.Any) -> T.List[IdentityResult]:
        return [self.compare(params, *self.sides(**params))]

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        """Returns the two sides to compare."""

        raise NotImplementedError()


class HockeyStick(_MiscIdentity):
    """sum_{l=k}^{m} C(l, k) = C(m+1, k+1)"""

    name = "hockey_stick"
    params_schema = {
        vol.Required("k"): util.NAT_VALIDATOR,
        vol.Required("m"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for m in range(config.m_max + 1):
            for k in range(m + 1):
                yield {"k": k, "m": m}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        k, m = params["k"], params["m"]
        return (
            sum(util.binomial(l, k) for l in range(k, m + 1)),
            util.binomial(m + 1, k + 1),
        )


class FallingInStirling(_MiscIdentity):
    """(n)_{alpha,lambda} = sum_k S2(alpha, k) k! C(n, k)"""

    name = "eq17"
    params_schema = {
        vol.Required("alpha"): util.POSITIVE_VALIDATOR,
        vol.Required("n"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for alpha in range(1, config.alpha_max + 1):
            for n in range(alpha, config.m_max + 1):
                yield {"alpha": alpha, "n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        alpha, n = params["alpha"], params["n"]
        rhs = LAMBDA_RING.zero()
        for k in range(1, alpha + 1):
            rhs += self.tables.s2(alpha, k) * (math.factorial(k) * util.binomial(n, k))
        return falling(n, alpha), rhs


class BinomialInStirling(_MiscIdentity):
    """C(n, m) = (1/m!) sum_k S1(m, k) (n)_{k,lambda}, constant in lambda"""

    name = "eq24"
    params_schema = {
        vol.Required("n"): util.NAT_VALIDATOR,
        vol.Required("m"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            for m in range(n + 1):
                yield {"n": n, "m": m}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n, m = params["n"], params["m"]
        total = LAMBDA_RING.zero()
        for k in range(m + 1):
            total += self.tables.s1(m, k) * falling(n, k)
        return total / math.factorial(m), LAMBDA_RING.coerce(util.binomial(n, m))


class BernoulliReflection(_MiscIdentity):
    """beta_{n,lambda}(1-x) = (-1)^n beta_{n,-lambda}(x)"""

    name = "bernoulli_reflection"
    params_schema = {vol.Required("n"): util.NAT_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        beta = appell.bernoulli_poly(n, self.tables.bernoulli(n))
        return beta.compose(1 - X), negate_lambda(beta) * util.sign(n)


class ShiftedStirlingSum(_MiscIdentity):
    """sum_j C(m, j) (j-1)! (S2(alpha+1, j) + alpha lambda S2(alpha, j))
    = sum_j C(m+1, j+1) j! S2(alpha, j)"""

    name = "eq26_1"
    params_schema = {
        vol.Required("alpha"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.POSITIVE_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for alpha in range(1, config.alpha_max + 1):
            for m in range(alpha, config.m_max + 1):
                yield {"alpha": alpha, "m": m}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        alpha, m = params["alpha"], params["m"]
        s2 = self.tables.s2
        lhs = LAMBDA_RING.zero()
        rhs = LAMBDA_RING.zero()
        for j in range(1, m + 1):
            shifted = s2(alpha + 1, j) + LAMBDA * alpha * s2(alpha, j)
            lhs += shifted * (util.binomial(m, j) * math.factorial(j - 1))
            rhs += s2(alpha, j) * (util.binomial(m + 1, j + 1) * math.factorial(j))
        return lhs, rhs


class EulerianTopVanishes(_MiscIdentity):
    """<n n>_lambda = 0 for n >= 1"""

    name = "eulerian_top_vanishes"
    params_schema = {vol.Required("n"): util.POSITIVE_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(1, config.n_max + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        return self.tables.eulerian(n, n), LAMBDA_RING.zero()


class PowerSumSeries(_MiscIdentity):
    """sum_{k=alpha}^{m} e_lambda^k(t) against the Bernoulli expansion
    sum_j (beta_{j+1,lambda}(m+1) - beta_{j+1,lambda}(alpha)) / (j+1) t^j/j!"""

    name = "power_sum_gf"
    params_schema = {
        vol.Required("alpha"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.POSITIVE_VALIDATOR,
        vol.Required("order"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for alpha in range(1, config.alpha_max + 1):
            for m in range(alpha, config.m_max + 1):
                yield {"alpha": alpha, "m": m, "order": config.alpha_max}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        alpha, m, order = params["alpha"], params["m"], params["order"]
        lhs = Series.zero(LAMBDA_RING, order)
        for k in range(alpha, m + 1):
            lhs += degenerate_exp(k, order)

        table = self.tables.bernoulli(order + 1)
        numbers = []
        for j in range(order + 1):
            beta = appell.bernoulli_poly(j + 1, table)
            numbers.append((beta(m + 1) - beta(alpha)) / (j + 1))
        return lhs, Series.from_egf(numbers, order, LAMBDA_RING)


class FrobeniusPowerSumSeries(_MiscIdentity):
    """sum_{k=alpha}^{m} e_lambda^k(t) x^k against the Frobenius-Euler
    expansion (x^(m+1) H_j(m+1|1/x) - x^alpha H_j(alpha|1/x)) / (x-1)"""

    name = "frobenius_power_sum"
    params_schema = {
        vol.Required("alpha"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.POSITIVE_VALIDATOR,
        vol.Required("x"): util.SAMPLE_VALIDATOR,
        vol.Required("order"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for alpha in range(1, config.alpha_max + 1):
            for m in range(alpha, config.m_max + 1):
                for x0 in config.x_samples:
                    yield {"alpha": alpha, "m": m, "x": x0, "order": config.alpha_max}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        alpha, m, x0, order = params["alpha"], params["m"], params["x"], params["order"]
        lhs = Series.zero(LAMBDA_RING, order)
        for k in range(alpha, m + 1):
            lhs += degenerate_exp(k, order) * x0 ** k

        table = appell.frobenius_numbers(order, 1 / x0)
        numbers = []
        for j in range(order + 1):
            frob = appell.frobenius_poly(j, table)
            numbers.append(
                (frob(m + 1) * x0 ** (m + 1) - frob(alpha) * x0 ** alpha) / (x0 - 1)
            )
        return lhs, Series.from_egf(numbers, order, LAMBDA_RING)


class RisingExpansion(_MiscIdentity):
    """<x>_n = sum_l [n l]_lambda <x>_{l,lambda}"""

    name = "rising_expansion"
    params_schema = {vol.Required("n"): util.NAT_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        rhs = X_RING.zero()
        for l in range(n + 1):
            rhs += factorial_poly(FactorialKind.RISING_LAMBDA, l) * self.tables.bracket(n, l)
        return factorial_poly(FactorialKind.RISING_CLASSICAL, n), rhs


class FallingExpansion(_MiscIdentity):
    """(x)_n = sum_l S1(n, l) (x)_{l,lambda} for kind "s1",
    (x)_{n,lambda} = sum_k S2(n, k) (x)_k for kind "s2"."""

    name = "falling_expansion"
    params_schema = {
        vol.Required("n"): util.NAT_VALIDATOR,
        vol.Required("kind"): vol.In(["s1", "s2"]),
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            for kind in ("s1", "s2"):
                yield {"n": n, "kind": kind}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        if params["kind"] == "s1":
            numbers, target, source = (
                self.tables.s1,
                FactorialKind.FALLING_CLASSICAL,
                FactorialKind.FALLING_LAMBDA,
            )
        else:
            numbers, target, source = (
                self.tables.s2,
                FactorialKind.FALLING_LAMBDA,
                FactorialKind.FALLING_CLASSICAL,
            )
        rhs = X_RING.zero()
        for l in range(n + 1):
            rhs += factorial_poly(source, l) * numbers(n, l)
        return factorial_poly(target, n), rhs


class DegenerateVandermonde(_MiscIdentity):
    """(a+b)_{n,lambda} = sum_l C(n, l) (a)_{l,lambda} (b)_{n-l,lambda}"""

    name = "vandermonde"
    params_schema = {
        vol.Required("n"): util.NAT_VALIDATOR,
        vol.Required("a"): util.RATIONAL_VALIDATOR,
        vol.Required("b"): util.RATIONAL_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            rng = util.derive_rng(config.seed, self.name, n)
            for _ in range(config.sample_count):
                a, b = util.sample_rationals(rng, 2)
                yield {"n": n, "a": a, "b": b}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n, a, b = params["n"], params["a"], params["b"]
        rhs = LAMBDA_RING.zero()
        for l in range(n + 1):
            rhs += falling(a, l) * falling(b, n - l) * util.binomial(n, l)
        return falling(a + b, n), rhs


class RisingShift(_MiscIdentity):
    """<x+1>_{k,lambda} = sum_j C(k, j) <1>_{k-j,lambda} <x>_{j,lambda}"""

    name = "rising_shift"
    params_schema = {vol.Required("k"): util.NAT_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for k in range(config.n_max + 1):
            yield {"k": k}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        k = params["k"]
        lhs = factorial_poly(FactorialKind.RISING_LAMBDA, k).compose(X + 1)
        rhs = X_RING.zero()
        for j in range(k + 1):
            rhs += factorial_poly(FactorialKind.RISING_LAMBDA, j) * (
                rising(1, k - j) * util.binomial(k, j)
            )
        return lhs, rhs


class StirlingRoutes(_MiscIdentity):
    """S2(n, k) from the recurrence triangle, the explicit alternating
    sum and n! times the generating function coefficient. The triangle
    value is compared with the explicit sum first, then with the
    generating function."""

    name = "s2_routes"
    params_schema = {
        vol.Required("n"): util.NAT_VALIDATOR,
        vol.Required("k"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            for k in range(n + 1):
                yield {"n": n, "k": k}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n, k = params["n"], params["k"]
        table_value = self.tables.s2(n, k)
        explicit = stirling.s2_explicit(n, k)
        if table_value != explicit:
            return table_value, explicit
        gf = stirling.s2_gf_coefficients(k, n).coefficient(n) * math.factorial(n)
        return table_value, gf


class StirlingInverse(_MiscIdentity):
    """sum_l S1(n, l) S2(l, k) = delta_{n,k}"""

    name = "s1_inverse"
    params_schema = {
        vol.Required("n"): util.NAT_VALIDATOR,
        vol.Required("k"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            for k in range(n + 1):
                yield {"n": n, "k": k}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n, k = params["n"], params["k"]
        total = LAMBDA_RING.zero()
        for l in range(k, n + 1):
            total += self.tables.s1(n, l) * self.tables.s2(l, k)
        return total, LAMBDA_RING.coerce(int(n == k))


class EulerianRoutes(_MiscIdentity):
    """A_{n,lambda} from the Eulerian triangle against the recurrence."""

    name = "eulerian_routes"
    params_schema = {vol.Required("n"): util.NAT_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        return self.tables.eulerian_poly(n), eulerian.eulerian_poly_recurrence(n).poly


class EulerianRowSum(_MiscIdentity):
    """A_{n,lambda}(1) = n!"""

    name = "eulerian_row_sum"
    params_schema = {vol.Required("n"): util.NAT_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        return self.tables.eulerian_poly(n)(1), LAMBDA_RING.coerce(math.factorial(n))


class EulerianReflection(_MiscIdentity):
    """<n m>_lambda = <n, n-1-m>_{-lambda}"""

    name = "eulerian_reflection"
    params_schema = {
        vol.Required("n"): util.POSITIVE_VALIDATOR,
        vol.Required("m"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(1, config.n_max + 1):
            for m in range(n):
                yield {"n": n, "m": m}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n, m = params["n"], params["m"]
        return (
            self.tables.eulerian(n, m),
            negate_lambda(self.tables.eulerian(n, n - 1 - m)),
        )


class CarlitzRelation(_MiscIdentity):
    """E_{n,lambda}(x) = x A_{n,lambda}(x) for n >= 1"""

    name = "carlitz_relation"
    params_schema = {vol.Required("n"): util.POSITIVE_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(1, config.n_max + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        return eulerian.carlitz_poly(n), X * self.tables.eulerian_poly(n)


class EulerianExpRecurrence(_MiscIdentity):
    """t A_n(t) - sum_k C(n, k) A_k(t) (t-1)^(n-k) <1>_{n-k,lambda}
    = (t-1) delta_{0,n}, as polynomials in t"""

    name = "eulerian_egf_recurrence"
    params_schema = {vol.Required("n"): util.NAT_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        lhs = X * self.tables.eulerian_poly(n)
        for k in range(n + 1):
            lhs -= (
                self.tables.eulerian_poly(k)
                * (X - 1) ** (n - k)
                * (rising(1, n - k) * util.binomial(n, k))
            )
        rhs = X - 1 if n == 0 else X_RING.zero()
        return lhs, rhs


class EulerianDescents(_MiscIdentity):
    """A_{n,0}(t) equals the descent polynomial of the permutations of 1..n."""

    name = "eulerian_descents"
    params_schema = {
        vol.Required("n"): vol.All(util.NAT_VALIDATOR, vol.Range(max=eulerian.DESCENT_LIMIT))
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(min(config.n_max, DESCENT_CHECK_MAX_N) + 1):
            yield {"n": n}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n = params["n"]
        return at_lambda(self.tables.eulerian_poly(n), 0), eulerian.descent_polynomial(n)


class BernoulliSeries(_MiscIdentity):
    """(e_lambda(t) - 1) sum_n beta_{n,lambda} t^n/n! = t"""

    name = "bernoulli_gf"
    suite = "gf"
    params_schema = {vol.Required("order"): util.NAT_VALIDATOR}

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        yield {"order": config.egf_order}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        order = params["order"]
        numbers = self.tables.bernoulli(order).numbers[: order + 1]
        lhs = (degenerate_exp(1, order) - 1) * Series.from_egf(numbers, order, LAMBDA_RING)
        return lhs, Series.variable(LAMBDA_RING, order)


class FrobeniusSeries(_MiscIdentity):
    """(e_lambda(t) - u) sum_n H_{n,lambda}(u) t^n/n! = 1 - u"""

    name = "frobenius_gf"
    suite = "gf"
    params_schema = {
        vol.Required("u"): util.SAMPLE_VALIDATOR,
        vol.Required("order"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for u in config.x_samples:
            yield {"u": u, "order": config.egf_order}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        u, order = params["u"], params["order"]
        table = appell.frobenius_numbers(order, u)
        lhs = (degenerate_exp(1, order) - u) * Series.from_egf(
            table.numbers, order, LAMBDA_RING
        )
        return lhs, Series([1 - u], order, LAMBDA_RING)


class EulerianPowerSeries(_MiscIdentity):
    """A_{n,lambda}(x) = (1-x)^(n+1) sum_j (j+1)_{n,lambda} x^j, on the
    degrees the truncation determines."""

    name = "eulerian_gf"
    suite = "gf"
    params_schema = {
        vol.Required("n"): util.NAT_VALIDATOR,
        vol.Required("order"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for n in range(config.n_max + 1):
            yield {"n": n, "order": n + EULERIAN_GF_EXTRA_ORDER}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        n, order = params["n"], params["order"]
        if order < n + 1:
            raise ValueError("order must be at least n + 1, but is {}".format(order))
        limit = order - (n + 1)
        cleared = (1 - X) ** (n + 1) * eulerian.power_sum_poly(n, order)
        return self.tables.eulerian_poly(n).truncate(limit), cleared.truncate(limit)


class EulerianExpSeries(_MiscIdentity):
    """(t0 - 1) / (t0 - e_{-lambda}((t0 - 1) x)) = sum_n A_{n,lambda}(t0) x^n/n!"""

    name = "eulerian_egf"
    suite = "gf"
    params_schema = {
        vol.Required("t"): vol.All(
            util.RATIONAL_VALIDATOR, vol.NotIn([1], msg="t must differ from 1")
        ),
        vol.Required("order"): util.NAT_VALIDATOR,
    }

    def parameter_space(self, config: "SuiteConfig") -> T.Iterable[T.Dict[str, T.Any]]:
        for t0 in list(config.egf_points) + list(config.t_samples):
            yield {"t": t0, "order": config.egf_order}

    def sides(self, **params: T.Any) -> T.Tuple[T.Any, T.Any]:
        t0, order = params["t"], params["order"]
        expected = Series.from_egf(
            (self.tables.eulerian_poly(n)(t0) for n in range(order + 1)),
            order,
            LAMBDA_RING,
        )
        return eulerian.eulerian_egf_series(order, t0), expected


MISC_IDENTITY_TYPES = (
    HockeyStick,
    FallingInStirling,
    BinomialInStirling,
    BernoulliReflection,
    ShiftedStirlingSum,
    EulerianTopVanishes,
    PowerSumSeries,
    FrobeniusPowerSumSeries,
    RisingExpansion,
    FallingExpansion,
    DegenerateVandermonde,
    RisingShift,
    StirlingRoutes,
    StirlingInverse,
    EulerianRoutes,
    EulerianRowSum,
    EulerianReflection,
    CarlitzRelation,
    EulerianExpRecurrence,
    EulerianDescents,
    BernoulliSeries,
    FrobeniusSeries,
    EulerianPowerSeries,
    EulerianExpSeries,
)  # type: T.Tuple[T.Type[_MiscIdentity], ...]


def verify_misc(
    identity_id: str, params: T.Dict[str, T.Any], tables: T.Optional[BaseTables] = None
) -> IdentityResult:
    """Validates params and checks the named identity."""

    for identity_type in MISC_IDENTITY_TYPES:
        if identity_type.name == identity_id:
            return identity_type(tables).run(params)[0]
    raise UnknownIdentity("no identity named {!r}".format(identity_id))
