"""
This module implements the BaseTables, the only values identities may
share between their two sides: the Stirling, bracket and Eulerian
triangles and the Bernoulli numbers.
"""

import typing as T

from cached_property import cached_property

from .. import appell, common, eulerian, stirling
from ..algebra import X_RING, Poly


# triangles are built at least this large, so that growing requests
# don't trigger a rebuild each time
MIN_TABLE_SIZE = 16

TRIANGLE_BUILDERS = {
    stirling.Family.S2_LAMBDA: stirling.s2_triangle,
    stirling.Family.S1_LAMBDA: stirling.s1_triangle,
    stirling.Family.BRACKET_LAMBDA: stirling.bracket_triangle,
    stirling.Family.EULERIAN_LAMBDA: eulerian.eulerian_triangle,
}  # type: T.Dict[stirling.Family, T.Callable[[int], stirling.Triangle]]

OverridesType = T.Dict[T.Tuple[stirling.Family, int, int], Poly]


class BaseTables:
    """Lazily grown triangles and tables. Single entries may be
    overridden, which the identities then see instead of the computed
    values."""

    _default = None  # type: T.Optional[BaseTables]

    def __init__(self, overrides: T.Optional[OverridesType] = None) -> None:
        self.overrides = dict(overrides or {})  # type: OverridesType
        self._triangles = {}  # type: T.Dict[stirling.Family, stirling.Triangle]
        self._bernoulli = None  # type: T.Optional[appell.BernoulliTable]

    def __repr__(self) -> str:
        return "<BaseTables overrides={}>".format(len(self.overrides))

    @classmethod
    def default(cls) -> "BaseTables":
        """Returns the shared instance without overrides."""

        if cls._default is None:
            cls._default = cls()
        return cls._default

    def with_override(
        self, family: stirling.Family, n: int, k: int, value: T.Any
    ) -> "BaseTables":
        """Returns new tables with entry (n, k) of family replaced."""

        overrides = dict(self.overrides)
        overrides[(family, n, k)] = value
        return BaseTables(overrides)

    def triangle(self, family: stirling.Family, size: int) -> stirling.Triangle:
        """Returns a triangle of family holding at least rows 0..size."""

        tri = self._triangles.get(family)
        if tri is None or tri.size < size:
            tri = TRIANGLE_BUILDERS[family](max(size, MIN_TABLE_SIZE))
            for (_family, n, k), value in sorted(
                self.overrides.items(), key=lambda item: item[0][1:]
            ):
                if _family is family and n <= tri.size:
                    common.log(
                        "Overriding {}({}, {}) with {}.".format(
                            family.value, n, k, value
                        ),
                        level="DEBUG",
                    )
                    tri = tri.with_entry(n, k, value)
            self._triangles[family] = tri
        return tri

    def s2(self, n: int, k: int) -> Poly:
        """S2(n, k), zero outside of 0 <= k <= n."""

        return self.triangle(stirling.Family.S2_LAMBDA, n)[n, k]

    def s1(self, n: int, k: int) -> Poly:
        """S1(n, k), zero outside of 0 <= k <= n."""

        return self.triangle(stirling.Family.S1_LAMBDA, n)[n, k]

    def bracket(self, n: int, k: int) -> Poly:
        """[n k]_lambda, zero outside of 0 <= k <= n."""

        return self.triangle(stirling.Family.BRACKET_LAMBDA, n)[n, k]

    def eulerian(self, n: int, m: int) -> Poly:
        """<n m>_lambda, zero outside of 0 <= m <= n."""

        return self.triangle(stirling.Family.EULERIAN_LAMBDA, n)[n, m]

    def eulerian_poly(self, n: int) -> Poly:
        """A_{n,lambda}(x) assembled from the Eulerian triangle."""

        tri = self.triangle(stirling.Family.EULERIAN_LAMBDA, n)
        return Poly(tri.row(n), X_RING)

    def bernoulli(self, max_n: int) -> appell.BernoulliTable:
        """Bernoulli numbers up to at least max_n."""

        if self._bernoulli is None or self._bernoulli.max_n < max_n:
            self._bernoulli = appell.bernoulli_numbers(max(max_n, MIN_TABLE_SIZE))
        return self._bernoulli

    @cached_property
    def is_pristine(self) -> bool:
        """Whether no entry is overridden."""

        return not self.overrides
