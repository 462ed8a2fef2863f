import fractions
import io

import pytest

from degenerate_sums import wire
from degenerate_sums.algebra import (
    LAMBDA,
    LAMBDA_RING,
    X_RING,
    Series,
    lambda_poly,
    x_poly,
)


Fraction = fractions.Fraction


def test_format_rational():
    assert wire.format_rational(Fraction(6, 4)) == "3/2"
    assert wire.format_rational(Fraction(-2)) == "-2"
    assert wire.format_rational(Fraction(0)) == "0"


@pytest.mark.parametrize(
    "text, value",
    [("1", Fraction(1)), ("-3/4", Fraction(-3, 4)), (" 7/14 ", Fraction(1, 2))],
)
def test_parse_rational(text, value):
    assert wire.parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "1.5", "abc", "1/-2", "+1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        wire.parse_rational(text)


def test_format_poly():
    assert wire.format_poly(1 - LAMBDA) == "1 + -1*L"
    assert wire.format_poly(LAMBDA_RING.zero()) == "0"
    assert wire.format_poly(lambda_poly(0, 0, 2)) == "2*L^2"
    bernoulli_1 = x_poly(lambda_poly(Fraction(-1, 2), Fraction(1, 2)), 1)
    assert wire.format_poly(bernoulli_1) == "(-1/2 + 1/2*L) + 1*x"
    assert wire.format_poly(x_poly(1, 1)) == "1 + 1*x"


@pytest.mark.parametrize(
    "text, ring",
    [
        ("1 + -1*L", LAMBDA_RING),
        ("-1/3*L^4", LAMBDA_RING),
        ("0", LAMBDA_RING),
        ("(-1/2 + 1/2*L) + 1*x", X_RING),
        ("1*x + -3*x^3 + 2*x^4", X_RING),
        ("(1 + -1*L) + (1 + 1*L)*x + 3*x^2", X_RING),
    ],
)
def test_parse_poly_reads_canonical_text(text, ring):
    assert wire.format_poly(wire.parse_poly(text, ring)) == text


def test_parse_poly():
    assert wire.parse_poly("1 + -1*L", LAMBDA_RING) == 1 - LAMBDA
    assert wire.parse_poly("(1 + 1*L)*x", X_RING) == x_poly(0, 1 + LAMBDA)


@pytest.mark.parametrize(
    "text, ring",
    [
        ("1 + ", LAMBDA_RING),
        ("1 + 2", LAMBDA_RING),
        ("1*y", LAMBDA_RING),
        ("(1 + 1*L)*L", LAMBDA_RING),
        ("(1 + 1*L*x", X_RING),
        ("1 + 1*L)", LAMBDA_RING),
        ("x*1", X_RING),
    ],
)
def test_parse_poly_rejects(text, ring):
    with pytest.raises(ValueError):
        wire.parse_poly(text, ring)


def test_format_value():
    assert wire.format_value(3) == 3
    assert wire.format_value(Fraction(1, 2)) == "1/2"
    assert wire.format_value([Fraction(1), [LAMBDA]]) == ["1", ["1*L"]]
    assert wire.format_value(Series([1, LAMBDA], 2, LAMBDA_RING)) == "1 + (1*L)*t"


def test_triangle_json():
    rows = [[Fraction(1)], [LAMBDA_RING.zero(), LAMBDA_RING.one()]]
    assert wire.triangle_json("s2", rows) == {
        "family": "s2",
        "rows": [["1"], ["0", "1"]],
    }


def test_write_csv_rows():
    stream = io.StringIO()
    wire.write_csv_rows(stream, [[Fraction(1)], [0, 1 - LAMBDA]])
    assert stream.getvalue() == '"1"\n"0","1 + -1*L"\n'
