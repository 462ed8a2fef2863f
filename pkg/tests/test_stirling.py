import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import stirling

from degenerate_sums import common
from degenerate_sums.algebra import LAMBDA, LAMBDA_RING, X, lambda_poly, x_poly
from degenerate_sums.stirling import (
    BasisRemainder,
    Family,
    PolyBasis,
    Triangle,
    bracket,
    bracket_triangle,
    change_basis,
    connection_matrix,
    s1_triangle,
    s2_explicit,
    s2_gf_coefficients,
    s2_triangle,
)


ORACLE_ROWS = 10

bases = st.sampled_from(list(PolyBasis))
small_x_polys = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=5
).map(lambda cs: x_poly(*cs))


def test_s2_values():
    tri = s2_triangle(3)
    assert tri[2, 1] == 1 - LAMBDA
    assert tri[3, 2] == 3 - 3 * LAMBDA
    assert tri[3, 1] == (1 - LAMBDA) * (1 - 2 * LAMBDA)
    assert tri.row(0) == (LAMBDA_RING.one(),)


def test_s1_values():
    tri = s1_triangle(3)
    assert tri[2, 1] == LAMBDA - 1
    assert tri[3, 2] == 3 * (LAMBDA - 1)
    assert tri[3, 1] == (LAMBDA - 1) * (LAMBDA - 2)


def test_bracket_values():
    assert bracket(2, 1) == 1 - LAMBDA
    assert bracket(4, 4) == 1
    assert bracket(1, 0) == 0
    assert bracket_triangle(3)[3, 1] == lambda_poly(2, -3, 1)


def test_triangle_bounds():
    tri = s2_triangle(3)
    assert tri[3, 5] == 0
    assert tri[3, -1] == 0
    with pytest.raises(common.IndexRangeError):
        tri[4, 0]  # pylint: disable=pointless-statement
    with pytest.raises(IndexError):
        tri.row(-1)


def test_triangle_rows_are_checked():
    with pytest.raises(ValueError):
        Triangle(Family.S2_LAMBDA, [[1], [0]])


def test_with_entry():
    tri = s2_triangle(3)
    changed = tri.with_entry(3, 2, tri[3, 2] + 1)
    assert changed[3, 2] == 4 - 3 * LAMBDA
    assert tri[3, 2] == 3 - 3 * LAMBDA
    assert changed != tri


@pytest.mark.parametrize("n", range(ORACLE_ROWS + 1))
def test_lambda_zero_matches_sympy(n):
    s2 = s2_triangle(ORACLE_ROWS).at_zero
    s1 = s1_triangle(ORACLE_ROWS).at_zero
    brackets = bracket_triangle(ORACLE_ROWS).at_zero
    for k in range(n + 1):
        assert s2[n][k] == int(stirling(n, k))
        assert s1[n][k] == int(stirling(n, k, kind=1, signed=True))
        assert brackets[n][k] == int(stirling(n, k, kind=1))


@pytest.mark.parametrize("n", range(13))
def test_s2_routes(n):
    tri = s2_triangle(n)
    for k in range(n + 1):
        assert s2_explicit(n, k) == tri[n, k]
        gf = s2_gf_coefficients(k, n)
        assert gf.coefficient(n) * math.factorial(n) == tri[n, k]


def test_s2_explicit():
    assert s2_explicit(0, 0) == 1
    assert s2_explicit(2, 1) == 1 - LAMBDA
    assert s2_explicit(3, 3) == 1
    with pytest.raises(common.IndexRangeError):
        s2_explicit(2, 3)


def test_s2_gf_coefficients():
    assert s2_gf_coefficients(0, 3).coefficients == (1, 0, 0, 0)
    assert s2_gf_coefficients(1, 2).coefficient(2) * 2 == 1 - LAMBDA
    assert s2_gf_coefficients(2, 3).coefficient(1) == 0


@pytest.mark.parametrize("n", range(13))
def test_s1_inverts_s2(n):
    s1 = s1_triangle(n)
    s2 = s2_triangle(n)
    for k in range(n + 1):
        total = LAMBDA_RING.zero()
        for l in range(k, n + 1):
            total += s1[n, l] * s2[l, k]
        assert total == int(n == k)


def test_change_basis():
    squared = X ** 2
    assert change_basis(squared, PolyBasis.MONOMIAL, PolyBasis.FALLING_CLASSICAL) == (
        x_poly(0, 1, 1)
    )
    assert change_basis(
        x_poly(0, 0, 1), PolyBasis.FALLING_LAMBDA, PolyBasis.FALLING_CLASSICAL
    ) == x_poly(0, 1 - LAMBDA, 1)
    to_lambda = change_basis(squared, PolyBasis.MONOMIAL, PolyBasis.FALLING_LAMBDA)
    assert to_lambda == x_poly(0, LAMBDA, 1)


def test_change_basis_needs_monic_basis(monkeypatch):
    element = PolyBasis.element

    def doubled(basis, n):
        if basis is PolyBasis.MONOMIAL:
            return element(basis, n)
        return element(basis, n) * 2

    monkeypatch.setattr(PolyBasis, "element", doubled)
    with pytest.raises(BasisRemainder):
        change_basis(X ** 2, PolyBasis.MONOMIAL, PolyBasis.FALLING_CLASSICAL)


@given(small_x_polys, bases, bases)
def test_change_basis_roundtrip(p, from_basis, to_basis):
    converted = change_basis(p, from_basis, to_basis)
    assert change_basis(converted, to_basis, from_basis) == p
    if from_basis is to_basis:
        assert converted == p


def test_connection_matrices_hold_the_triangles():
    size = 6
    to_classical = connection_matrix(
        PolyBasis.FALLING_LAMBDA, PolyBasis.FALLING_CLASSICAL, size
    )
    to_lambda = connection_matrix(
        PolyBasis.FALLING_CLASSICAL, PolyBasis.FALLING_LAMBDA, size
    )
    s2 = s2_triangle(size)
    s1 = s1_triangle(size)
    for n in range(size + 1):
        assert to_classical[n] == list(s2.row(n))
        assert to_lambda[n] == list(s1.row(n))


@pytest.mark.parametrize("from_basis", list(PolyBasis))
@pytest.mark.parametrize("to_basis", list(PolyBasis))
def test_connection_matrix_is_unitriangular(from_basis, to_basis):
    matrix = connection_matrix(from_basis, to_basis, 4)
    for n, row in enumerate(matrix):
        assert len(row) == n + 1
        assert row[n] == 1
