from __future__ import annotations

from fractions import Fraction

import pytest

from g2torsion.curvature import (
    bianchi_scalar_condition,
    branch_check,
    computed_branches,
    impose_pair_symmetry,
    invariant_curvature_space,
    is_equivariant,
    lies_on,
    pair_symmetry_equations,
    printed_branches,
    same_operator,
    solve_bianchi,
    stiefel_curvature_check,
    symmetric_curvature,
)
from g2torsion.exact import GENS, parse_poly, poly_substitute
from g2torsion.g2lie import catalog
from g2torsion.torsion import general_torsion


def bind(raw):
    return {k: parse_poly(v) for k, v in raw.items()}


@pytest.mark.parametrize("name", ["su3", "u2", "so3", "suc2", "r1_suc2", "so3_ir"])
def test_symmetric_curvature_is_equivariant_and_symmetric(name):
    R = symmetric_curvature(name)
    assert is_equivariant(R, catalog(name))
    assert not pair_symmetry_equations(R)
    k = R.pair_matrix()
    assert k == k.T


def test_pair_symmetry_reduces_invariant_space():
    R = invariant_curvature_space("so3")
    S = impose_pair_symmetry(R)
    assert len(S.params) <= len(R.params)
    assert same_operator(S, symmetric_curvature("so3"))


def test_so3_printed_branches_pass():
    for label, b in printed_branches("so3"):
        assert branch_check("so3", b) is not None, label


def test_perturbed_branch_fails():
    b = bind({"d": "-4*c", "x": "a**2 + b**2 - 49*c**2 + 1"})
    assert branch_check("so3", b) is None


def test_so3_computed_components_lie_on_printed_branches():
    printed = [b for _, b in printed_branches("so3")]
    for comp in computed_branches("so3"):
        assert any(lies_on(comp, p) for p in printed)


def test_r1_suc2_radical_sign():
    # pair symmetry fixes p; the radical coefficient solving Bianchi is -a(15a + 3b)/2
    curv, residual = solve_bianchi("r1_suc2")
    assert not residual
    assert curv["r"] == parse_poly("-15/2*a**2 - 3/2*a*b")
    assert curv["p"] == parse_poly("-a*(3*a + b)/2")
    assert branch_check("r1_suc2", bind({"p": "-a*(3*a + b)/2", "r": "3*a*(5*a + b)/2"})) is None


def test_stiefel():
    rep = stiefel_curvature_check()
    assert rep.ok
    assert rep.curvature_value == GENS["c"] ** 2 * (-49) / 2


def test_scaling_homogeneity():
    # T -> tT forces R -> t^2 R on every Bianchi solution
    h = catalog("so3_ir")
    _, T = general_torsion(h)
    R = symmetric_curvature("so3_ir")
    (x,) = R.params
    base = bianchi_scalar_condition(T.substitute({"a": 1}), R)
    scaled = bianchi_scalar_condition(T.substitute({"a": 3}), R)
    assert base.constraints and scaled.constraints
    for c0, c1 in zip(base.constraints, scaled.constraints):
        # c1(x) = 9 c0(x / 9)
        assert c1 == poly_substitute(c0, {x: GENS[x] * Fraction(1, 9)}) * 9
