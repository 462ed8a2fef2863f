"""
This module implements the SuiteRunner, which checks every registered
identity over the parameter space of a SuiteConfig.
"""

import typing as T

if T.TYPE_CHECKING:
    # pylint: disable=cyclic-import,unused-import
    from ..config import SuiteConfig

import observable

from .. import common
from . import ALL_SUITES, IdentityBase, get_identity_types, get_suite_names
from .base import IdentityResult
from .tables import BaseTables


class SuiteRunner:
    """Runs the identities of the selected suites in canonical order.

    Events:
        result(runner, result): fired for every IdentityResult
        family_done(runner, name, count): fired when an identity has
            been checked at all of its parameters
    """

    def __init__(
        self,
        config: "SuiteConfig",
        suites: T.Optional[T.Iterable[str]] = None,
        tables: T.Optional[BaseTables] = None,
    ) -> None:
        self.config = config
        self.suites = set(suites or [ALL_SUITES])
        unknown = self.suites.difference(get_suite_names())
        if unknown:
            raise ValueError("unknown suites: {}".format(", ".join(sorted(unknown))))
        self.tables = tables or BaseTables.default()
        self.events = observable.Observable()  # type: observable.Observable

    def __repr__(self) -> str:
        return "<SuiteRunner {}>".format(", ".join(sorted(self.suites)))

    def __str__(self) -> str:
        return "S:{}".format(",".join(sorted(self.suites)))

    def log(self, msg: str, level: str = "INFO", prefix: T.Optional[str] = None) -> None:
        """Prefixes the message with str(self) and logs it."""

        common.log("[{}] {}".format(self, msg), level=level, prefix=prefix)

    def identities(self) -> T.List[IdentityBase]:
        """Returns instances of the selected identities, canonical order."""

        return [
            identity_type(self.tables)
            for identity_type in get_identity_types()
            if ALL_SUITES in self.suites or identity_type.suite in self.suites
        ]

    def run(self) -> T.List[IdentityResult]:
        """Checks everything and returns the results in canonical order."""

        if not self.tables.is_pristine:
            self.log(
                "Running with {} overridden table entries.".format(
                    len(self.tables.overrides)
                ),
                level="WARNING",
            )
        results = []  # type: T.List[IdentityResult]
        for identity in self.identities():
            count = 0
            for params in identity.parameter_space(self.config):
                for result in identity.run(params):
                    results.append(result)
                    count += 1
                    self.events.trigger("result", self, result)
            identity.log("Checked {} instances.".format(count), level="DEBUG")
            self.events.trigger("family_done", self, identity.name, count)

        failed = sum(1 for result in results if result.unexpected_failure)
        expected = sum(
            1 for result in results if result.expected_fail and not result.passed
        )
        self.log(
            "{} results, {} unexpected failures, {} expected failures.".format(
                len(results), failed, expected
            ),
            prefix=common.LOG_PREFIX_ALERT if failed else common.LOG_PREFIX_STATUS,
        )
        return results


def run_suite(
    config: "SuiteConfig",
    suites: T.Optional[T.Iterable[str]] = None,
    tables: T.Optional[BaseTables] = None,
) -> T.List[IdentityResult]:
    """Shortcut for SuiteRunner(config, suites, tables).run()."""

    return SuiteRunner(config, suites, tables).run()
