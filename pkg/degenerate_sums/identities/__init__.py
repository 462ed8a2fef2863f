"""
This package contains the identities that can be verified, together
with the machinery for running them as suites.
"""

import typing as T

from .base import BadLength, IdentityBase, IdentityResult, UnknownIdentity
from .brackets import BracketRecurrence, verify_thm11
from .eulerian_sums import EulerianPowerSum, verify_thm7
from .finite_sums import (
    FiniteSumWithSequence,
    SumOfFallingFactorials,
    WeightedSumOfFallingFactorials,
    verify_sum_powers,
    verify_thm1,
    verify_thm5,
)
from .misc import (
    BernoulliReflection,
    BernoulliSeries,
    BinomialInStirling,
    CarlitzRelation,
    DegenerateVandermonde,
    EulerianDescents,
    EulerianExpRecurrence,
    EulerianExpSeries,
    EulerianPowerSeries,
    EulerianReflection,
    EulerianRoutes,
    EulerianRowSum,
    EulerianTopVanishes,
    FallingExpansion,
    FallingInStirling,
    FrobeniusPowerSumSeries,
    FrobeniusSeries,
    HockeyStick,
    PowerSumSeries,
    RisingExpansion,
    RisingShift,
    ShiftedStirlingSum,
    StirlingInverse,
    StirlingRoutes,
    verify_misc,
)
from .tables import BaseTables


# identity classes in canonical report order
__all__ = [
    "IdentityBase",
    "FiniteSumWithSequence",
    "SumOfFallingFactorials",
    "WeightedSumOfFallingFactorials",
    "EulerianPowerSum",
    "BracketRecurrence",
    "HockeyStick",
    "FallingInStirling",
    "BinomialInStirling",
    "BernoulliReflection",
    "ShiftedStirlingSum",
    "EulerianTopVanishes",
    "PowerSumSeries",
    "FrobeniusPowerSumSeries",
    "RisingExpansion",
    "FallingExpansion",
    "DegenerateVandermonde",
    "RisingShift",
    "StirlingRoutes",
    "StirlingInverse",
    "EulerianRoutes",
    "EulerianRowSum",
    "EulerianReflection",
    "CarlitzRelation",
    "EulerianExpRecurrence",
    "EulerianDescents",
    "BernoulliSeries",
    "FrobeniusSeries",
    "EulerianPowerSeries",
    "EulerianExpSeries",
    "BadLength",
    "BaseTables",
    "IdentityResult",
    "UnknownIdentity",
    "get_identity_types",
    "get_suite_names",
    "verify_misc",
    "verify_sum_powers",
    "verify_thm1",
    "verify_thm5",
    "verify_thm7",
    "verify_thm11",
]

# selects every suite
ALL_SUITES = "all"


def get_identity_types() -> T.Iterable[T.Type[IdentityBase]]:
    """Yields available identity classes in canonical order."""

    globs = globals()
    for identity_class_name in __all__:
        identity_type = globs.get(identity_class_name)
        if (
            identity_type is not IdentityBase
            and isinstance(identity_type, type)
            and issubclass(identity_type, IdentityBase)
            and not identity_type.__name__.startswith("_")
        ):
            yield identity_type


def get_suite_names() -> T.List[str]:
    """Returns the names accepted for selecting suites, "all" first."""

    names = [ALL_SUITES]
    for identity_type in get_identity_types():
        if identity_type.suite not in names:
            names.append(identity_type.suite)
    return names
