from __future__ import annotations

import pytest

from g2torsion.exterior import PHI
from g2torsion.g2lie import CATALOG_NAMES, catalog
from g2torsion.invariants import (
    forms27_dimension_table,
    invariant_forms,
    invariant_forms27,
    invariant_spinors,
    lambda3_27,
    spinor_dimension_table,
    torsion_space,
)

SPINORS = {"su3": 2, "u2": 2, "su2": 4, "suc2": 1, "r1_suc2": 1, "su2_suc2": 1, "so3": 2, "so3_ir": 1}
FORMS27 = {"su3": 1, "u2": 2, "su2": 6, "suc2": 1, "r1_suc2": 1, "su2_suc2": 1, "so3": 3, "so3_ir": 0}


def test_lambda3_27_dimension():
    assert lambda3_27().dim == 27


def test_tables():
    assert spinor_dimension_table() == SPINORS
    assert forms27_dimension_table() == FORMS27


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_torsion_space_is_phi_plus_27_part(name):
    h = catalog(name)
    space, gens = invariant_forms27(h)
    assert len(gens) == space.dim
    assert torsion_space(h).dim == space.dim + 1
    assert tuple(PHI.to_vector()) in torsion_space(h)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_invariant_three_forms_match_spinor_count(name):
    # Lambda^3 = 1 + 7 + 27 and Delta = 1 + 7, so the counts are related through the 7-part
    h = catalog(name)
    seven = invariant_spinors(h).dim - 1
    assert invariant_forms(h, 3).dim == 1 + seven + FORMS27[name]


def test_invariant_spinors_are_annihilated():
    h = catalog("u2")
    for v in invariant_spinors(h).basis:
        for op in h.spin_actions():
            assert not any(op.apply(v))
