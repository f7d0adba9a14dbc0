from __future__ import annotations

import pytest

from g2torsion.exact import GENS
from g2torsion.exterior import PHI, parse_form
from g2torsion.g2lie import catalog
from g2torsion.torsion import (
    SU2_LINES,
    UNION_COMPONENTS,
    NotAdmissibleError,
    eigenvalue_profile,
    general_torsion,
    in_torsion_space,
    lines_to_components,
    phi_admissible,
    scalar_action_constraints,
    verify_union_decomposition,
    w3_intersection,
)


@pytest.mark.parametrize("name", ["su3", "u2", "so3"])
def test_union_of_two_hyperplanes(name):
    fam = scalar_action_constraints(catalog(name))
    rep = verify_union_decomposition(fam, UNION_COMPONENTS[name], samples=30, seed=1)
    assert rep.ok, rep


def test_dropping_a_component_is_detected():
    fam = scalar_action_constraints(catalog("u2"))
    rep = verify_union_decomposition(fam, UNION_COMPONENTS["u2"][:1], samples=30, seed=1)
    assert not rep.ok


def test_su2_eight_lines():
    h = catalog("su2")
    fam = scalar_action_constraints(h)
    comps = lines_to_components(h, SU2_LINES)
    assert len(comps) == 8
    assert verify_union_decomposition(fam, comps, samples=20, seed=2, check_lines=False).ok


@pytest.mark.parametrize("name", ["suc2", "r1_suc2", "su2_suc2", "so3_ir"])
def test_whole_family_admissible(name):
    assert not scalar_action_constraints(catalog(name)).constraints


def test_family_evaluation():
    fam = scalar_action_constraints(catalog("u2"))
    assert fam.is_admissible_at({"a": 1, "b": 2, "c": 3})
    assert not fam.is_admissible_at({"a": 1, "b": 2, "c": 5})


def test_phi_admissible_only_with_one_invariant_spinor():
    prof = eigenvalue_profile(PHI, catalog("so3_ir"))
    assert prof.eigenvalues() == (-7,)
    assert phi_admissible(catalog("so3_ir"))
    # cl(phi)^2 is 49 on psi_1 and 1 on psi_2
    assert not phi_admissible(catalog("su3"))


@pytest.mark.parametrize("point", [{"a": 1, "b": 3}, {"a": 1, "b": -4}])
def test_su3_lines_have_scalar_square(point):
    h = catalog("su3")
    fam = scalar_action_constraints(h)
    vals = eigenvalue_profile(fam.at(point), h).eigenvalues()
    assert len(vals) == 2 and all(v is not None for v in vals)
    assert vals[0] ** 2 == vals[1] ** 2


def test_rejects_inadmissible():
    h = catalog("u2")
    with pytest.raises(NotAdmissibleError):
        eigenvalue_profile(parse_form("e123", 3), h)
    _, T = general_torsion(h)
    with pytest.raises(NotAdmissibleError):
        eigenvalue_profile(T.substitute({"a": 1, "b": 2, "c": 5}), h)


def test_parameterised_torsion_membership():
    h = catalog("u2")
    _, T = general_torsion(h)
    assert in_torsion_space(T, h)
    assert not in_torsion_space(T.substitute({"a": GENS["a"] ** 2}), h)


def test_w3_intersection_dimensions():
    assert w3_intersection(catalog("su3")).dim == 0
    assert w3_intersection(catalog("so3_ir")).dim == 0
