"""
Canonical text forms of rationals and polynomials and the JSON/CSV
shapes tables and reports are emitted in.

Rationals are written "p/q" with q > 0 and gcd(p, q) = 1, or "p" alone
when q = 1. Polynomials are written as their nonzero terms in strictly
increasing degree, joined by " + ":

    term := coeff | coeff "*" var | coeff "*" var "^" degree

Negative coefficients keep their sign ("1 + -1*L"). lambda is written
"L", the outer variable "x". A coefficient which is itself a
non-constant polynomial is put in parentheses. Zero is "0".
"""

import typing as T

import csv
import fractions
import re

from .algebra import Poly, PolynomialRing, Series


RATIONAL_PATTERN = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")
TERM_PATTERN = re.compile(
    r"^(?P<coeff>\(.+\)|[^*()]+)(?:\*(?P<var>[A-Za-z]+)(?:\^(?P<exp>\d+))?)?$"
)
TERM_SEPARATOR = " + "


def format_rational(value: fractions.Fraction) -> str:
    """Returns the canonical text form of a rational."""

    return str(fractions.Fraction(value))


def parse_rational(text: str) -> fractions.Fraction:
    """Parses "p/q" or "p". A ValueError is raised for anything else."""

    text = text.strip()
    if RATIONAL_PATTERN.match(text) is None:
        raise ValueError("{!r} is not a rational of the form p/q".format(text))
    return fractions.Fraction(text)


def format_poly(poly: Poly) -> str:
    """Returns the canonical text form of a polynomial."""

    return str(poly)


def _split_terms(text: str) -> T.List[str]:
    """Splits at the separators outside of parentheses."""

    terms = []
    depth = 0
    start = 0
    idx = 0
    while idx < len(text):
        char = text[idx]
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses in {!r}".format(text))
        elif depth == 0 and text.startswith(TERM_SEPARATOR, idx):
            terms.append(text[start:idx])
            idx += len(TERM_SEPARATOR)
            start = idx
            continue
        idx += 1
    if depth:
        raise ValueError("unbalanced parentheses in {!r}".format(text))
    terms.append(text[start:])
    return terms


def parse_poly(text: str, ring: PolynomialRing) -> Poly:
    """Parses the canonical text form back into a polynomial of ring."""

    text = text.strip()
    if text == "0":
        return ring.zero()

    coeffs = {}  # type: T.Dict[int, T.Any]
    for term in _split_terms(text):
        match = TERM_PATTERN.match(term)
        if match is None:
            raise ValueError("invalid polynomial term: {!r}".format(term))
        var = match.group("var")
        if var is not None and var != ring.var:
            raise ValueError(
                "unexpected variable {!r} in {!r}, expected {!r}".format(
                    var, term, ring.var
                )
            )
        degree = 0 if var is None else int(match.group("exp") or 1)
        if degree in coeffs:
            raise ValueError("degree {} appears twice in {!r}".format(degree, text))

        coeff_text = match.group("coeff")
        if coeff_text.startswith("("):
            if not isinstance(ring.base, PolynomialRing):
                raise ValueError("nested coefficient not allowed: {!r}".format(term))
            coeffs[degree] = parse_poly(coeff_text[1:-1], ring.base)
        else:
            coeffs[degree] = ring.base.coerce(parse_rational(coeff_text))

    return Poly(
        [coeffs.get(deg, ring.base.zero()) for deg in range(max(coeffs) + 1)], ring
    )


def format_value(value: T.Any) -> T.Any:
    """Converts a value into something json can serialize: polynomials
    and rationals become their text form, series are written as the
    polynomial of their retained coefficients, lists are converted item
    by item and ints stay ints."""

    if isinstance(value, (list, tuple)):
        return [format_value(item) for item in value]
    if isinstance(value, Series):
        value = value.to_poly()
    if isinstance(value, Poly):
        return format_poly(value)
    if isinstance(value, fractions.Fraction):
        return format_rational(value)
    return value


def triangle_json(family: str, rows: T.Iterable[T.Iterable[T.Any]]) -> T.Dict[str, T.Any]:
    """Returns the JSON shape of a triangle: {"family": ..., "rows": [...]}."""

    return {"family": family, "rows": [[format_value(v) for v in row] for row in rows]}


def write_csv_rows(stream: T.TextIO, rows: T.Iterable[T.Iterable[T.Any]]) -> None:
    """Writes one CSV line per row, every cell quoted."""

    writer = csv.writer(stream, quoting=csv.QUOTE_ALL, lineterminator="\n")
    for row in rows:
        writer.writerow([format_value(v) for v in row])
