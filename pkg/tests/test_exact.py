from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2torsion.exact import (
    GENS,
    LinearSubspace,
    Matrix,
    ParameterizedMatrixError,
    determinant,
    express_in,
    format_coeff,
    kernel_of_rows,
    linear_coefficients,
    parse_poly,
    poly_substitute,
    rank,
    rref,
    simplify,
    solve,
    substitute_cleared,
    to_fraction,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def matrices(nrows, ncols):
    return st.lists(st.lists(small, min_size=ncols, max_size=ncols), min_size=nrows, max_size=nrows)


def test_parse_and_format_roundtrip():
    p = parse_poly("1/2*(a + b)**2 - a*b")
    assert format_coeff(p) == "1/2*a**2 + 1/2*b**2"
    assert parse_poly(format_coeff(p)) == p


def test_parse_rejects_code():
    with pytest.raises(ValueError):
        parse_poly("__import__('os')")


def test_constant_polynomials_collapse():
    a = GENS["a"]
    assert simplify(a - a + 3) == 3
    assert isinstance(simplify(a - a + Fraction(1, 2)), Fraction)
    with pytest.raises(ValueError):
        to_fraction(a)


def test_substitution_is_simultaneous():
    a, b = GENS["a"], GENS["b"]
    assert poly_substitute(a - b, {"a": b, "b": a}) == b - a


def test_substitute_cleared():
    # a = 2s^2/s, b = (2 - 10 s^2)/s on 5a^2 + ab - 4
    s = GENS["s"]
    assert not substitute_cleared(parse_poly("5*a**2 + a*b - 4"), {"a": 2 * s * s, "b": 2 - 10 * s * s}, s)
    assert substitute_cleared(parse_poly("5*a**2 + a*b - 3"), {"a": 2 * s * s, "b": 2 - 10 * s * s}, s)


def test_linear_coefficients():
    lin, rest = linear_coefficients(parse_poly("2*a + 3*b*c + 5"), ("a",))
    assert lin == {"a": 2} and rest == parse_poly("3*b*c + 5")


@given(matrices(4, 5))
def test_rref_is_reduced_and_row_equivalent(rows):
    red, piv = rref(rows, 5)
    assert len(red) == len(piv) == rank(rows, 5)
    for i, p in enumerate(piv):
        assert red[i][p] == 1
        assert all(red[k][p] == 0 for k in range(len(red)) if k != i)
    assert LinearSubspace.span(rows, 5) == LinearSubspace.span(red, 5)


@given(matrices(3, 6))
def test_kernel_is_annihilated(rows):
    ker = kernel_of_rows(rows, 6)
    assert ker.dim + rank(rows, 6) == 6
    for v in ker.basis:
        assert all(sum((x * y for x, y in zip(r, v)), Fraction(0)) == 0 for r in rows)


@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve_agrees_with_determinant(rows, rhs):
    x = solve(rows, rhs)
    if determinant(Matrix(rows)) != 0:
        assert x is not None
        assert [sum((a * b for a, b in zip(r, x)), Fraction(0)) for r in rows] == rhs


def test_express_in_and_subspace_algebra():
    basis = [(1, 0, 1), (0, 1, 1)]
    assert express_in(basis, (2, 3, 5)) == (2, 3)
    with pytest.raises(ValueError):
        express_in(basis, (1, 0, 0))
    u = LinearSubspace.span(basis, 3)
    w = LinearSubspace.span([(1, 0, 0)], 3)
    assert (u + w).dim == 3 and u.intersection(w).dim == 0
    assert u.annihilator() == LinearSubspace.span([(1, 1, -1)], 3)


def test_symbolic_matrices_refused_by_rref():
    with pytest.raises(ParameterizedMatrixError):
        rref([[GENS["a"], 1]], 2)


def test_matrix_ops():
    m = Matrix([[1, 2], [3, 4]])
    assert (m @ Matrix.identity(2)) == m
    assert m.T == Matrix([[1, 3], [2, 4]])
    assert determinant(m) == -2
    assert m.commutator(m).is_zero()
