"""
This module implements the IdentityResult type and the IdentityBase
parent class of all registered identities.
"""

import typing as T

if T.TYPE_CHECKING:
    # pylint: disable=cyclic-import,unused-import
    from ..config import SuiteConfig

import collections

import voluptuous as vol

from .. import common, wire
from .tables import BaseTables


class UnknownIdentity(common.DegenerateSumsError, KeyError):
    """Raised when an identity id isn't registered."""


class BadLength(common.DegenerateSumsError, ValueError):
    """Raised when a sequence argument has the wrong length."""


class IdentityResult:
    """Outcome of checking one identity at one parameter combination.
    The lhs and rhs text forms are kept only when the check failed."""

    def __init__(  # pylint: disable=too-many-arguments
        self,
        identity_id: str,
        parameters: T.Dict[str, T.Any],
        passed: bool,
        lhs: T.Optional[str] = None,
        rhs: T.Optional[str] = None,
        expected_fail: bool = False,
    ) -> None:
        if passed and (lhs is not None or rhs is not None):
            raise ValueError("a passed result carries no lhs/rhs")
        if not passed and (lhs is None or rhs is None):
            raise ValueError("a failed result needs both lhs and rhs")
        self.identity_id = identity_id
        self.parameters = collections.OrderedDict(parameters)
        self.passed = passed
        self.lhs = lhs
        self.rhs = rhs
        self.expected_fail = expected_fail

    @classmethod
    def compare(
        cls,
        identity_id: str,
        parameters: T.Dict[str, T.Any],
        lhs: T.Any,
        rhs: T.Any,
        expected_fail: bool = False,
    ) -> "IdentityResult":
        """Builds the result of checking lhs == rhs exactly."""

        if lhs == rhs:
            return cls(identity_id, parameters, True, expected_fail=expected_fail)
        return cls(
            identity_id,
            parameters,
            False,
            lhs=str(wire.format_value(lhs)),
            rhs=str(wire.format_value(rhs)),
            expected_fail=expected_fail,
        )

    def __repr__(self) -> str:
        return "<IdentityResult {} {} {}>".format(
            self.identity_id,
            dict(self.parameters),
            "passed" if self.passed else "FAILED",
        )

    def __eq__(self, other: T.Any) -> bool:
        if not isinstance(other, IdentityResult):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    @property
    def unexpected_failure(self) -> bool:
        """Whether this result should make a suite run fail."""

        return not self.passed and not self.expected_fail

    def to_dict(self) -> T.Dict[str, T.Any]:
        """Returns the report record of this result, keys in report order."""

        record = collections.OrderedDict()  # type: T.Dict[str, T.Any]
        record["identity_id"] = self.identity_id
        record["parameters"] = collections.OrderedDict(
            (name, wire.format_value(value)) for name, value in self.parameters.items()
        )
        record["passed"] = self.passed
        if self.expected_fail:
            record["expected_fail"] = True
        if not self.passed:
            record["lhs"] = self.lhs
            record["rhs"] = self.rhs
        return record


class IdentityBase:
    """An identity, or a group of identities sharing their parameters,
    that can be checked exactly."""

    name = "identity"
    # the suite selecting this identity on the command line
    suite = "misc"
    params_schema = {}  # type: T.Dict[T.Any, T.Any]

    def __init__(self, tables: T.Optional[BaseTables] = None) -> None:
        self.tables = tables or BaseTables.default()

    def __repr__(self) -> str:
        return "<Identity {}>".format(self.name)

    def __str__(self) -> str:
        return "I:{}".format(self.name)

    def log(self, msg: str, level: str = "INFO", prefix: T.Optional[str] = None) -> None:
        """Prefixes the message with str(self) and logs it."""

        common.log("[{}] {}".format(self, msg), level=level, prefix=prefix)

    def validate(self, params: T.Dict[str, T.Any]) -> T.Dict[str, T.Any]:
        """Validates params against params_schema, raising vol.Invalid."""

        return vol.Schema(self.params_schema)(dict(params))

    def parameter_space(  # pylint: disable=no-self-use,unused-argument
        self, config: "SuiteConfig"
    ) -> T.Iterable[T.Dict[str, T.Any]]:
        """Yields the parameter combinations a suite run checks, in
        canonical order."""

        return []

    def check(self, **params: T.Any) -> T.List[IdentityResult]:
        """Checks the identity at validated parameters."""

        raise NotImplementedError()

    def run(self, params: T.Dict[str, T.Any]) -> T.List[IdentityResult]:
        """Validates params and checks the identity."""

        return self.check(**self.validate(params))
