"""Invariant spinors, invariant 3-forms and equivariant maps of subalgebras of g2."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .clifford import SPIN_DIM, joint_kernel
from .exact import LinearSubspace, Matrix, express_in, kernel_of_rows, to_fraction
from .exterior import PHI, TRIPLES, KForm, basis_indices, lambda3_projectors, parse_form
from .g2lie import Subalgebra, bracket, catalog, coords, form_action_matrix

FORMS3_DIM = len(TRIPLES)  # 35


@lru_cache(maxsize=None)
def lambda3_27() -> LinearSubspace:
    """Lambda^3_27 inside the 35 coordinates of 3-forms."""
    return LinearSubspace.span(lambda3_projectors()[2].rows, FORMS3_DIM)


def invariant_spinors(h: Subalgebra) -> LinearSubspace:
    """Joint kernel of the spin action of the generators."""
    return joint_kernel(h.spin_actions(), SPIN_DIM)


def invariant_forms(h: Subalgebra, grade: int) -> LinearSubspace:
    """Joint kernel of the derivation action on k-forms."""
    n = len(basis_indices(grade))
    rows = [r for g in h.generators for r in form_action_matrix(g, grade).rows]
    return kernel_of_rows(rows, n) if rows else LinearSubspace.full(n)


def invariant_forms27(h: Subalgebra) -> tuple[LinearSubspace, tuple[KForm, ...]]:
    """h-invariant 3-forms lying in Lambda^3_27, with the echelon basis as forms."""
    space = invariant_forms(h, 3).intersection(lambda3_27())
    return space, tuple(KForm.from_vector(3, v) for v in space.basis)


def forms_span(forms: Sequence[KForm], grade: int = 3) -> LinearSubspace:
    n = len(basis_indices(grade))
    return LinearSubspace.span([tuple(to_fraction(c) for c in KForm(grade, f.coeffs).to_vector()) for f in forms], n)


# Generators of the invariant Lambda^3_27 spaces as printed with the catalog.
# Two-parameter families are given by their parameter blocks.
_T_AB = "(a + b)*(-e135 + e146 + e236 + e245) + 2*a*(e347 + e127) + 4*b*e567"
_T_ABC = (
    "a*(-2*e123 + e136 - e145 + e235 + e246 + 2*e356)"
    " + b*(-2*e124 - e135 - e146 + e236 - e245 + 2*e456)"
    " + c*(4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567)"
)
SU3_GENERATOR = "4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567"
SUC2_GENERATOR = "phi - 7*e567"

PRINTED_FAMILIES: dict[str, tuple[str, tuple[str, ...]]] = {
    "su3": (SU3_GENERATOR, ()),
    "u2": (_T_AB, ("a", "b")),
    "suc2": (SUC2_GENERATOR, ()),
    "r1_suc2": (SUC2_GENERATOR, ()),
    "su2_suc2": (SUC2_GENERATOR, ()),
    "so3": (_T_ABC, ("a", "b", "c")),
}


def printed_generators(name: str) -> tuple[KForm, ...]:
    text, names = PRINTED_FAMILIES[name]
    form = parse_form(text, grade=3)
    if not names:
        return (form,)
    parts, rest = form.linear_parts(names)
    if rest:
        raise ValueError(f"printed family for {name} has a parameter-free part")
    return tuple(parts[n] for n in names)


@dataclass(frozen=True)
class InvariantReport:
    name: str
    spinors: LinearSubspace
    forms27: LinearSubspace
    generators: tuple[KForm, ...]
    printed_match: bool | None

    @property
    def spinor_dim(self) -> int:
        return self.spinors.dim

    @property
    def forms27_dim(self) -> int:
        return self.forms27.dim


def invariant_report(h: Subalgebra) -> InvariantReport:
    spinors = invariant_spinors(h)
    space, gens = invariant_forms27(h)
    match = None
    if h.name in PRINTED_FAMILIES:
        match = forms_span(printed_generators(h.name)) == space
    return InvariantReport(h.name, spinors, space, gens, match)


# equivariant maps ----------------------------------------------------------------

MODULES = ("lambda0", "vector", "lambda2", "lambda3", "spinor", "subalgebra")


def module_actions(h: Subalgebra, module: str) -> tuple[Matrix, ...]:
    """Matrices of the generators acting on one of the standard modules."""
    if module == "lambda0":
        return tuple(Matrix.zeros(1, 1) for _ in h.generators)
    if module == "vector":
        return h.vector_actions()
    if module == "lambda2":
        return tuple(form_action_matrix(g, 2) for g in h.generators)
    if module == "lambda3":
        return tuple(form_action_matrix(g, 3) for g in h.generators)
    if module == "spinor":
        return h.spin_actions()
    if module == "subalgebra":
        return adjoint_matrices(h)
    raise ValueError(f"unknown module {module!r}; expected one of {MODULES}")


def adjoint_matrices(h: Subalgebra) -> tuple[Matrix, ...]:
    """ad(g) on h in the generator basis."""
    basis = [coords(g) for g in h.generators]
    out = []
    for g in h.generators:
        cols = [express_in(basis, coords(bracket(g, x))) for x in h.generators]
        out.append(Matrix.from_columns(cols))
    return tuple(out)


def intertwiners(source: Sequence[Matrix], target: Sequence[Matrix]) -> list[Matrix]:
    """Basis of X with target_g X = X source_g for every generator g."""
    if len(source) != len(target):
        raise ValueError("source and target need one matrix per generator")
    if not source:
        raise ValueError("at least one generator is required")
    m, n = target[0].nrows, source[0].nrows
    rows = []
    for s, t in zip(source, target):
        # (t X - X s)[i, j] as a functional of X[k, l] at index k*n + l
        t_nz = [[(k, t[i, k]) for k in range(m) if t[i, k]] for i in range(m)]
        s_nz = [[(k, s[k, j]) for k in range(n) if s[k, j]] for j in range(n)]
        for i in range(m):
            for j in range(n):
                if not t_nz[i] and not s_nz[j]:
                    continue
                row = [Fraction(0)] * (m * n)
                for k, c in t_nz[i]:
                    row[k * n + j] += c
                for k, c in s_nz[j]:
                    row[i * n + k] -= c
                rows.append(row)
    ker = kernel_of_rows(rows, m * n) if rows else LinearSubspace.full(m * n)
    return [Matrix([list(v[i * n:(i + 1) * n]) for i in range(m)]) for v in ker.basis]


def equivariant_maps(h: Subalgebra, source: str, target: str) -> list[Matrix]:
    return intertwiners(module_actions(h, source), module_actions(h, target))


def equivariant_map_dim(h: Subalgebra, source: str, target: str) -> int:
    return len(equivariant_maps(h, source, target))


def spinor_dimension_table() -> dict[str, int]:
    from .g2lie import CATALOG_NAMES

    return {n: invariant_spinors(catalog(n)).dim for n in CATALOG_NAMES}


def forms27_dimension_table() -> dict[str, int]:
    from .g2lie import CATALOG_NAMES

    return {n: invariant_forms27(catalog(n))[0].dim for n in CATALOG_NAMES}


def torsion_space(h: Subalgebra) -> LinearSubspace:
    """Lambda^3_1 + (Lambda^3_27)_h in 3-form coordinates."""
    space, _ = invariant_forms27(h)
    phi = tuple(to_fraction(c) for c in PHI.to_vector())
    return space + LinearSubspace.span([phi], FORMS3_DIM)
