from __future__ import annotations

from fractions import Fraction

import pytest

from g2torsion.clifford import clifford_action, eigenvalue_on, psi
from g2torsion.exterior import PHI, parse_form
from g2torsion.geometry import (
    NEARLY_KAHLER_TORSION,
    PRINTED_RICCI,
    SASAKI_TORSION,
    compare_printed_ricci,
    derived_scalar_identities,
    ricci_data,
    scalar_from_eigen,
    spinor_field_identities,
    torsion_square,
)

ALL = ((1, 2, 3, 4, 5, 6, 7),)


def test_sasaki_quasi_killing_factors():
    ids = spinor_field_identities(SASAKI_TORSION, ((1, 2, 3, 4, 5, 6), (7,)))
    assert list(ids.values()) == [2, 6]


def test_phi_gives_einstein_metric():
    d = ricci_data(PHI, ALL)
    assert d.characteristic_values[0] is not None
    assert d.riemannian_values[0] is not None


@pytest.mark.parametrize("text", ["phi", "2*e135 - 2*e245", "e567", "e127 + e347 + 3*e567"])
def test_ricci_tensors_are_symmetric(text):
    T = parse_form(text, 3)
    d = ricci_data(T, ALL)
    assert d.ric_characteristic == d.ric_characteristic.T
    assert d.ric_riemannian == d.ric_riemannian.T


@pytest.mark.parametrize("text", ["phi", "2*e135 - 2*e245", "e127 + e347 + 3*e567"])
def test_scalar_curvature_from_eigenvalue(text):
    T = parse_form(text, 3)
    lam = eigenvalue_on(clifford_action(T), psi(1))
    assert lam is not None
    assert ricci_data(T, ALL).scal_riemannian == scalar_from_eigen(T, lam)


def test_ricci_scales_quadratically():
    T = parse_form("e127 + e347 + 3*e567", 3)
    d1 = ricci_data(T, ALL)
    d3 = ricci_data(T * 3, ALL)
    assert d3.ric_riemannian == d1.ric_riemannian.scale(9)
    assert torsion_square(T * 3) == torsion_square(T).scale(9)


def test_homothetic_five_dimensional_example():
    d = ricci_data(parse_form("2*e135 - 2*e245", 3), ((1, 2, 3, 4), (5,), (6, 7)))
    assert d.riemannian_values == (6, 4, 0)


def test_e567_is_ricci_flat_on_first_block():
    d = ricci_data(parse_form("e567", 3), ((1, 2, 3, 4), (5, 6, 7)))
    assert d.riemannian_values == (0, Fraction(1, 2))


def test_nearly_kahler_ricci_is_diagonal():
    d = ricci_data(NEARLY_KAHLER_TORSION, ((1, 2, 3, 4, 5, 6), (7,)))
    assert all(v is not None for v in d.riemannian_values)


def test_sign_of_spinor_irrelevant():
    T = parse_form("e127 + e347 + 3*e567", 3)
    minus = tuple(-x for x in psi(1))
    assert ricci_data(T, ALL).ric_characteristic == ricci_data(T, ALL, minus).ric_characteristic


@pytest.mark.parametrize("entry", PRINTED_RICCI, ids=lambda e: e.label)
def test_printed_ricci_values(entry):
    assert compare_printed_ricci(entry).ok


def test_derived_identities():
    bad = [c.label for c in derived_scalar_identities() if not c.ok]
    assert not bad


def test_inconsistent_spinor():
    with pytest.raises(ValueError):
        ricci_data(PHI, ALL, (0,) * 8)
