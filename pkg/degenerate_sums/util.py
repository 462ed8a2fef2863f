"""
Utility functions that are used all around the package.
"""

import typing as T

import fractions
import math
import random

import voluptuous as vol

from . import wire


# no sampled rational may be one of these, they are poles or trivial points
EXCLUDED_SAMPLES = frozenset((fractions.Fraction(0), fractions.Fraction(1)))


def _reject_bool(value: T.Any) -> T.Any:
    if isinstance(value, bool):
        raise vol.Invalid("expected a number, got a boolean")
    return value


def _to_rational(value: T.Any) -> fractions.Fraction:
    if isinstance(value, str):
        try:
            return wire.parse_rational(value)
        except ValueError as err:
            raise vol.Invalid(str(err))
    if isinstance(value, (int, fractions.Fraction)):
        return fractions.Fraction(value)
    raise vol.Invalid("expected a rational, got {!r}".format(value))


def _not_excluded(value: fractions.Fraction) -> fractions.Fraction:
    if value in EXCLUDED_SAMPLES:
        raise vol.Invalid("{} is not allowed here, 0 and 1 are excluded".format(value))
    return value


# validators shared by the parameter and configuration schemas
NAT_VALIDATOR = vol.All(_reject_bool, int, vol.Range(min=0))
POSITIVE_VALIDATOR = vol.All(_reject_bool, int, vol.Range(min=1))
RATIONAL_VALIDATOR = vol.All(_reject_bool, _to_rational)
SAMPLE_VALIDATOR = vol.All(RATIONAL_VALIDATOR, _not_excluded)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), 0 when k < 0 or k > n >= 0."""

    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def sign(exponent: int) -> int:
    """Returns (-1)^exponent."""

    return -1 if exponent % 2 else 1


def derive_rng(seed: int, *labels: T.Any) -> random.Random:
    """Returns a random generator seeded from seed and the given labels.
    The same arguments always produce the same sequence, independent of
    what other generators were used before."""

    key = ":".join([str(seed)] + [str(label) for label in labels])
    return random.Random(key)


def sample_rational(
    rng: random.Random,
    height: int = 10,
    exclude: T.Container[fractions.Fraction] = EXCLUDED_SAMPLES,
) -> fractions.Fraction:
    """Draws a rational p/q with |p| <= height, 1 <= q <= height,
    avoiding the values in exclude."""

    while True:
        value = fractions.Fraction(rng.randint(-height, height), rng.randint(1, height))
        if value not in exclude:
            return value


def sample_rationals(
    rng: random.Random,
    count: int,
    height: int = 10,
    exclude: T.Container[fractions.Fraction] = EXCLUDED_SAMPLES,
) -> T.List[fractions.Fraction]:
    """Draws count rationals using sample_rational(). Duplicates are
    skipped so that every returned value is distinct."""

    values = []  # type: T.List[fractions.Fraction]
    while len(values) < count:
        value = sample_rational(rng, height, exclude)
        if value not in values:
            values.append(value)
    return values
