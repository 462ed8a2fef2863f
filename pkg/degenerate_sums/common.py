"""
Common helpers and functionality used by all modules.
"""

import typing as T

import logging


# prefixes for log messages
LOG_PREFIX_STATUS = "---"
LOG_PREFIX_ALERT = "***"
LOG_PREFIX_WARNING = "!!!"
LOG_PREFIX_INCOMING = "-->"

LOGGER = logging.getLogger("degenerate_sums")

_DEBUG = False


class DegenerateSumsError(Exception):
    """Base class of all errors raised by this package."""


class DegenerateParameter(DegenerateSumsError, ValueError):
    """Raised when a parameter hits a pole of a generating function,
    e.g. u = 1 for the Frobenius-Euler family."""


class IndexRangeError(DegenerateSumsError, IndexError):
    """Raised when a triangle index (n, k) violates 0 <= k <= n."""


def set_debug(debug: bool) -> None:
    """Enables or disables debug mode. In debug mode, DEBUG messages
    are promoted to INFO."""

    global _DEBUG  # pylint: disable=global-statement
    _DEBUG = debug


def is_debug() -> bool:
    """Returns whether debug mode is enabled."""

    return _DEBUG


def log(msg: str, level: str = "INFO", prefix: T.Optional[str] = None) -> None:
    """Writes msg to the package logger. The log level is changed
    from DEBUG to INFO if debug mode is enabled. An appropriate
    prefix is added to the log message."""

    level = level.upper()
    if level == "DEBUG" and _DEBUG:
        level = "INFO"

    if prefix is None:
        if level in ("DEBUG", "INFO"):
            prefix = LOG_PREFIX_STATUS
        elif level in ("WARNING", "ERROR"):
            prefix = LOG_PREFIX_WARNING

    if prefix:
        msg = "{} {}".format(prefix, msg)

    LOGGER.log(logging.getLevelName(level), msg)


def setup_logging(debug: bool = False) -> None:
    """Attaches a stderr handler to the package logger. Only the first
    call adds a handler."""

    set_debug(debug)
    if not LOGGER.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
        LOGGER.addHandler(handler)
    LOGGER.setLevel(logging.INFO)
