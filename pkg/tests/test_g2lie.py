from __future__ import annotations

from fractions import Fraction

import pytest

from g2torsion.exterior import PHI, STAR_PHI, KForm, parse_form
from g2torsion.g2lie import (
    ALGEBRA_DIM,
    CATALOG_NAMES,
    Subalgebra,
    SubalgebraError,
    apply_vector,
    bracket,
    catalog,
    form_action,
    g2_basis,
    g2_elements,
    irreducibility_certificate,
    satisfies_g2_equations,
    so3_ir_construct,
    vector_action,
)

EXPECTED_DIMS = {"su3": 8, "u2": 4, "su2": 3, "suc2": 3, "r1_suc2": 4, "su2_suc2": 6, "so3": 3, "so3_ir": 3}


def test_g2_has_dimension_14():
    assert ALGEBRA_DIM == 21
    assert g2_basis().dim == 14


def test_g2_kills_phi_and_star_phi():
    for w in g2_elements():
        assert not any(c for _, c in form_action(w, PHI).items())
        assert not any(c for _, c in form_action(w, STAR_PHI).items())


def test_generic_two_form_is_not_in_g2():
    assert not satisfies_g2_equations(parse_form("e12", 2))


def test_g2_closed_under_bracket():
    els = g2_elements()
    for x in els[:5]:
        for y in els:
            assert satisfies_g2_equations(bracket(x, y))


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_dimensions(name):
    h = catalog(name)
    assert h.dim == EXPECTED_DIMS[name]
    for g in h.generators:
        assert h.contains(g)


def test_vector_action_is_skew():
    for g in catalog("u2").generators:
        m = vector_action(g)
        assert m.T == -m


def test_apply_vector_matches_matrix():
    g = catalog("su2").generators[0]
    v = (1, 2, 0, 0, -1, 0, 3)
    assert tuple(apply_vector(g, v)) == vector_action(g).apply(tuple(Fraction(x) for x in v))


def test_rejects_non_closed_span():
    gens = catalog("su3").generators[:2]
    if bracket(*gens) == KForm.zero(2):
        gens = (catalog("su3").generators[0], catalog("su3").generators[3])
    with pytest.raises(SubalgebraError):
        Subalgebra("bad", (gens[0], gens[1]))


def test_rejects_dependent_generators():
    g = catalog("su2").generators[0]
    with pytest.raises(SubalgebraError):
        Subalgebra("dup", (g, g * 2))


def test_rejects_outside_g2():
    with pytest.raises(SubalgebraError):
        Subalgebra("e12", (parse_form("e12", 2),))


def test_irreducible_so3_construction():
    h = so3_ir_construct()
    assert h.dim == 3
    assert irreducibility_certificate(h)
    assert not irreducibility_certificate(catalog("so3"))


def test_unknown_name():
    with pytest.raises(KeyError):
        catalog("sp1")
