from __future__ import annotations

from fractions import Fraction

import pytest

from g2torsion.curvature import symmetric_curvature
from g2torsion.exact import LinearSubspace
from g2torsion.g2lie import catalog
from g2torsion.reductive import (
    JacobiViolation,
    TransitiveAlgebra,
    abelian_algebra,
    adjoint_faithful_check,
    build,
    center,
    derived_algebra,
    is_negative_definite,
    radical,
    satisfies_jacobi,
    structural_analysis,
    torsion_vector,
    vectors_in_basis,
)
from g2torsion.exact import Matrix
from g2torsion.exterior import PHI
from g2torsion.torsion import general_torsion

F = Fraction


def from_table(labels, table):
    n = len(labels)
    zero = tuple(F(0) for _ in range(n))
    consts = [[zero] * n for _ in range(n)]
    for (i, j), vec in table.items():
        v = tuple(F(x) for x in vec)
        consts[i][j] = v
        consts[j][i] = tuple(-x for x in v)
    return TransitiveAlgebra(tuple(labels), 0, tuple(tuple(r) for r in consts))


SO3 = from_table(["x", "y", "z"], {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (2, 0): (0, 1, 0)})
HEIS = from_table(["x", "y", "z"], {(0, 1): (0, 0, 1)})


def test_so3_is_compact_simple():
    rep = structural_analysis(SO3)
    assert rep.perfect and rep.killing_negative_definite and rep.radical.dim == 0
    assert adjoint_faithful_check(SO3)[0]


def test_heisenberg_is_nilpotent():
    rep = structural_analysis(HEIS)
    assert rep.radical.dim == 3 and rep.radical_nilpotent
    assert derived_algebra(HEIS).dim == 1
    assert center(HEIS).dim == 1


def test_abelian():
    g = abelian_algebra(4)
    assert satisfies_jacobi(g) and radical(g).dim == 4 and derived_algebra(g).dim == 0


def test_negative_definite():
    assert is_negative_definite(Matrix([[-2, 1], [1, -3]]))
    assert not is_negative_definite(Matrix([[-2, 0], [0, 1]]))


def test_torsion_vector_is_contraction():
    e1, e2 = (1, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0)
    assert torsion_vector(PHI, e1, e2) == (0, 0, 0, 0, 0, 0, 1)


def algebra(name, values):
    h = catalog(name)
    _, T = general_torsion(h)
    R = symmetric_curvature(name)
    tvals = {k: v for k, v in values.items() if k not in R.params}
    return h, T.substitute(tvals), R.substitute({k: values[k] for k in R.params})


def test_jacobi_on_bianchi_solution():
    g = build(*algebra("so3_ir", {"a": F(1), "x": F(-14)}))
    assert g.is_antisymmetric() and g.dim == 10


def test_jacobi_fails_off_solution():
    with pytest.raises(JacobiViolation):
        build(*algebra("so3_ir", {"a": F(1), "x": F(-13)}))
    g = build(*algebra("so3_ir", {"a": F(1), "x": F(-13)}), check=False)
    assert not satisfies_jacobi(g)


def test_build_requires_bound_parameters():
    h = catalog("so3_ir")
    _, T = general_torsion(h)
    with pytest.raises(ValueError):
        build(h, T, symmetric_curvature("so3_ir"))


def test_suc2_levi_decomposition():
    g = build(*algebra("suc2", {"a": F(1), "b": F(-5), "p": F(1)}))
    rep = structural_analysis(g)
    assert rep.perfect and rep.dim == 10
    spans = ({"e1": 1}, {"e2": 1}, {"e3": 1}, {"e4": 1}, {"e5": 1, "Q2": -1}, {"e6": 1, "Q1": 1}, {"e7": 1, "Q3": 1})
    assert rep.radical == LinearSubspace.span(vectors_in_basis(g, list(spans)), g.dim)
    assert rep.radical_nilpotent and rep.radical_derived.dim == 3 and rep.radical_derived_abelian
    assert rep.quotient_dim == 3 and rep.quotient_killing_negative_definite
    assert not rep.killing_negative_definite


def test_json_export():
    import json

    data = json.loads(SO3.to_json())
    assert data["basis"] == ["x", "y", "z"]
    assert data["brackets"]["[x,y]"] == {"z": "1"}
