from __future__ import annotations

from fractions import Fraction

import pytest

from g2torsion.clifford import (
    E_SIGN,
    SPIN_DIM,
    clifford_action,
    clifford_relations_hold,
    eigenvalue_on,
    gamma,
    psi,
    spin_action,
    vector_from_operator,
    vector_operator,
)
from g2torsion.exact import Matrix
from g2torsion.exterior import PHI, SIGMA, parse_form, wedge
from g2torsion.report.properties import clifford_identities


@pytest.mark.parametrize("sign", [1, -1])
def test_relations_hold_for_both_signs(sign):
    assert clifford_relations_hold(sign)
    assert clifford_identities(sign) == (49, 0)


def test_gammas_are_skew():
    for i in range(1, 8):
        assert gamma(i).T == -gamma(i)


def test_volume_element_is_scalar():
    vol = Matrix.identity(SPIN_DIM)
    for i in range(1, 8):
        vol = vol @ gamma(i)
    assert vol == Matrix.identity(SPIN_DIM) or vol == -Matrix.identity(SPIN_DIM)


def test_phi_eigenvalues():
    op = clifford_action(PHI)
    assert E_SIGN == -1
    assert eigenvalue_on(op, psi(1)) == -7
    assert all(eigenvalue_on(op, psi(k)) == 1 for k in range(2, 9))


def test_sigma_eigenvalues():
    op = clifford_action(SIGMA)
    assert (eigenvalue_on(op, psi(1)), eigenvalue_on(op, psi(2))) == (-4, 4)


def test_clifford_of_wedge_of_orthogonal_vectors():
    a, b = parse_form("e1", 1), parse_form("e2", 1)
    assert clifford_action(wedge(a, b)) == gamma(1) @ gamma(2)


def test_spin_action_is_half():
    w = parse_form("e12 + e34", 2)
    assert spin_action(w) == clifford_action(w).scale(Fraction(1, 2))
    with pytest.raises(ValueError):
        spin_action(PHI)


def test_vector_roundtrip():
    v = (1, 0, Fraction(2, 3), 0, 0, -1, 5)
    assert vector_from_operator(vector_operator(v)) == tuple(Fraction(x) for x in v)
    with pytest.raises(ValueError):
        vector_from_operator(Matrix.identity(SPIN_DIM))


def test_non_eigenvector():
    assert eigenvalue_on(gamma(1), psi(1)) is None
