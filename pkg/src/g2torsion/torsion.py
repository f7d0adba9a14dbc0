"""Admissible torsion forms: 3-forms in Lambda^3_1 + (Lambda^3_27)_h whose
Clifford square acts as a scalar on the h-invariant spinors."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .clifford import clifford_action, eigenvalue_on, psi, restrict
from .exact import (
    GENS,
    PARAMS,
    RING,
    Coeff,
    LinearSubspace,
    Matrix,
    as_poly,
    kernel_of_rows,
    linear_coefficients,
    poly_substitute,
    scalar_defect,
    simplify,
    to_fraction,
)
from .exterior import PHI, KForm, parse_form
from .g2lie import Subalgebra
from .invariants import (
    FORMS3_DIM,
    forms_span,
    invariant_forms27,
    invariant_spinors,
    torsion_space,
)


class NotAdmissibleError(ValueError):
    """The torsion form is not in the admissible set of the subalgebra."""


@dataclass(frozen=True)
class TorsionFamily:
    name: str
    params: tuple[str, ...]
    form: KForm
    constraints: tuple[Coeff, ...]
    spinors: LinearSubspace = field(repr=False)

    def at(self, bindings: Mapping[str, Coeff]) -> KForm:
        return self.form.substitute(bindings)

    def constraints_at(self, bindings: Mapping[str, Coeff]) -> list[Coeff]:
        return [poly_substitute(c, bindings) for c in self.constraints]

    def is_admissible_at(self, bindings: Mapping[str, Coeff]) -> bool:
        return not any(self.constraints_at(bindings))


def square_on_spinors(T: KForm, spinors: LinearSubspace) -> Matrix:
    """Matrix of cl(T)^2 on an invariant spinor space, in its echelon basis."""
    op = clifford_action(T)
    m = restrict(op @ op, spinors)
    if m is None:
        raise NotAdmissibleError("T^2 does not preserve the invariant spinors")
    return m


# Parameterisations of Lambda^3_1 + (Lambda^3_27)_h. Where the catalog prints a
# family the same parameters are used; the coefficient of phi comes last.
FAMILY_TEXT: dict[str, str] = {
    "su3": "a*(4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567) + b*phi",
    "u2": "(a + b)*(-e135 + e146 + e236 + e245) + 2*a*(e347 + e127) + 4*b*e567 + c*phi",
    "suc2": "a*phi + b*e567",
    "r1_suc2": "a*phi + b*e567",
    "su2_suc2": "a*phi + b*e567",
    "so3": (
        "a*(-2*e123 + e136 - e145 + e235 + e246 + 2*e356)"
        " + b*(-2*e124 - e135 - e146 + e236 - e245 + 2*e456)"
        " + c*(4*e127 - 3*e135 + 3*e146 + 3*e236 + 3*e245 + 4*e347 + 4*e567) + d*phi"
    ),
    "so3_ir": "a*phi",
}


def _generic_family(h: Subalgebra) -> tuple[tuple[str, ...], KForm]:
    _, gens = invariant_forms27(h)
    names = PARAMS[: len(gens) + 1]
    form = PHI * GENS[names[-1]]
    for n, g in zip(names, gens):
        form = form + g * GENS[n]
    return names, form


def general_torsion(h: Subalgebra) -> tuple[tuple[str, ...], KForm]:
    """Parameter names and the general element of Lambda^3_1 + (Lambda^3_27)_h."""
    if h.name in FAMILY_TEXT:
        form = parse_form(FAMILY_TEXT[h.name], grade=3)
        names = form.parameters()
        # the printed family must span exactly the torsion space
        parts, rest = form.linear_parts(names)
        if rest or forms_span(list(parts.values())) != torsion_space(h):
            raise ArithmeticError(f"{h.name}: family does not parameterise the torsion space")
        return names, form
    return _generic_family(h)


def scalar_action_constraints(h: Subalgebra) -> TorsionFamily:
    """Polynomials whose vanishing makes T^2 scalar on (Delta_7)_h."""
    names, form = general_torsion(h)
    spinors = invariant_spinors(h)
    m = square_on_spinors(form, spinors)
    defects = []
    seen = set()
    for c in scalar_defect(m):
        c = _normalize(c)
        key = str(c)
        if key not in seen:
            seen.add(key)
            defects.append(c)
    return TorsionFamily(h.name, names, form, tuple(defects), spinors)


def _normalize(c: Coeff) -> Coeff:
    """Scale a polynomial to leading coefficient 1 (constraints are up to scale)."""
    p = as_poly(c)
    if not p:
        return Fraction(0)
    return simplify(p.monic())


# union decompositions -------------------------------------------------------------

Component = Sequence[Coeff]  # linear homogeneous conditions on the family parameters


def _condition_rows(conditions: Component, params: Sequence[str]) -> list[list[Fraction]]:
    rows = []
    for cond in conditions:
        lin, rest = linear_coefficients(cond, tuple(params))
        if rest:
            raise ValueError(f"condition {cond} is not linear homogeneous in {params}")
        rows.append([to_fraction(lin[p]) for p in params])
    return rows


def component_space(conditions: Component, params: Sequence[str]) -> LinearSubspace:
    rows = _condition_rows(conditions, params)
    return kernel_of_rows(rows, len(params)) if rows else LinearSubspace.full(len(params))


def component_substitution(conditions: Component, params: Sequence[str]) -> dict[str, Coeff]:
    """Generic point of a component: params written in terms of the first few params."""
    space = component_space(conditions, params)
    free = [GENS[p] for p in params[: space.dim]]
    return {
        p: simplify(sum((v[i] * s for v, s in zip(space.basis, free)), RING(0)))
        for i, p in enumerate(params)
    }


@dataclass
class UnionReport:
    name: str
    components_on_locus: list[bool]
    on_samples: int = 0
    on_failures: int = 0
    off_samples: int = 0
    off_failures: int = 0
    line_checks: int = 0
    line_failures: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.components_on_locus) and not (self.on_failures or self.off_failures or self.line_failures)


def _random_fraction(rng: random.Random, bound: int = 12) -> Fraction:
    return Fraction(rng.randint(-bound * 4, bound * 4), rng.randint(1, bound))


def verify_union_decomposition(
    family: TorsionFamily,
    components: Sequence[Component],
    samples: int = 100,
    seed: int = 0,
    check_lines: bool = True,
) -> UnionReport:
    """Check that the constraint locus equals the union of linear components.

    (i) each component's generic point satisfies all constraints identically;
    (ii) random points on components satisfy them, random points off all
    components violate some constraint; (iii) for hyperplane components, the
    gcd of the constraints restricted to random lines has exactly the
    component crossings as roots.
    """
    params = family.params
    rng = random.Random(seed)
    report = UnionReport(family.name, [])
    spaces = [component_space(c, params) for c in components]
    for comp in components:
        sub = component_substitution(comp, params)
        report.components_on_locus.append(not any(poly_substitute(c, sub) for c in family.constraints))

    def on_some(point) -> bool:
        return any(sp.contains(point) for sp in spaces)

    for _ in range(samples):
        sp = rng.choice(spaces)
        coeffs = [_random_fraction(rng) for _ in sp.basis]
        point = [sum((c * v[i] for c, v in zip(coeffs, sp.basis)), Fraction(0)) for i in range(len(params))]
        report.on_samples += 1
        if any(family.constraints_at(dict(zip(params, point)))):
            report.on_failures += 1
    produced = 0
    if any(sp.dim == len(params) for sp in spaces):
        report.notes.append("a component is the whole parameter space; no off-locus points exist")
        produced = samples
    while produced < samples:
        point = [_random_fraction(rng) for _ in params]
        if on_some(point):
            continue
        produced += 1
        report.off_samples += 1
        if not any(family.constraints_at(dict(zip(params, point)))):
            report.off_failures += 1
    if check_lines and family.constraints and all(sp.dim == len(params) - 1 for sp in spaces):
        for _ in range(max(samples // 10, 5)):
            report.line_checks += 1
            if not _line_check(family, spaces, rng):
                report.line_failures += 1
    elif check_lines:
        report.notes.append("line completeness check skipped (components are not hyperplanes)")
    return report


def _line_check(family: TorsionFamily, spaces: Sequence[LinearSubspace], rng: random.Random) -> bool:
    params = family.params
    s = GENS["s"]
    base = [_random_fraction(rng) for _ in params]
    direction = [_random_fraction(rng) for _ in params]
    line = {p: b + d * s for p, b, d in zip(params, base, direction)}
    g = RING(0)
    for c in family.constraints:
        g = g.gcd(as_poly(poly_substitute(c, line)))
    if not g:
        return False
    # crossing parameters of the line with each hyperplane n.x = 0
    roots = []
    for sp in spaces:
        normal = sp.annihilator().basis[0]
        nb = sum((x * y for x, y in zip(normal, base)), Fraction(0))
        nd = sum((x * y for x, y in zip(normal, direction)), Fraction(0))
        if nd == 0:
            return False  # degenerate line; treat as failure to keep the check honest
        roots.append(-nb / nd)
    for r in set(roots):
        factor = s - r
        q, rem = divmod(g, factor)
        if rem:
            return False
        g = q
        while True:
            q, rem = divmod(g, factor)
            if rem:
                break
            g = q
    return g.is_ground


# named components of the catalog torsion sets --------------------------------------

def _p(text: str) -> Coeff:
    from .exact import parse_poly

    return parse_poly(text)


# Components expressed as linear conditions on the family parameters.
UNION_COMPONENTS: dict[str, tuple[tuple[Coeff, ...], ...]] = {
    # the lines a(e127 + e347 + e567) and b(-e135 + e146 + e236 + e245)
    "su3": ((_p("b - 3*a"),), (_p("b + 4*a"),)),
    "u2": ((_p("a + b - c"),), (_p("4*a + 4*b + 3*c"),)),
    "so3": ((_p("d - 3*c"),), (_p("d + 4*c"),)),
    "suc2": ((),),
    "r1_suc2": ((),),
    "su2_suc2": ((),),
    "so3_ir": ((),),
}

SU3_LINES = ("e127 + e347 + e567", "-e135 + e146 + e236 + e245")

SU2_LINES = (
    "e127 - e135 + e146 + e236 + e245 + e347 - 2*e567",
    "e127 + e135 - e146 - e236 - e245 + e347 - 2*e567",
    "e127 + e135 + e146 + e236 - e245 + e347 + 2*e567",
    "e127 - e135 - e146 - e236 + e245 + e347 + 2*e567",
    "e135 - e245",
    "e146 + e236",
    "e127 + e347",
    "e567",
)


def lines_to_components(h: Subalgebra, lines: Iterable[str]) -> list[tuple[Coeff, ...]]:
    """Convert printed lines to linear conditions on the family parameters."""
    names, form = general_torsion(h)
    parts, _ = form.linear_parts(names)
    basis = [tuple(to_fraction(c) for c in parts[n].to_vector()) for n in names]
    out = []
    from .exact import express_in

    for text in lines:
        target = tuple(to_fraction(c) for c in parse_form(text, grade=3).to_vector())
        point = express_in(basis, target)
        # conditions: the parameter vector is proportional to point
        normals = LinearSubspace.span([point], len(names)).annihilator().basis
        out.append(tuple(simplify(sum((c * GENS[n] for c, n in zip(v, names)), RING(0))) for v in normals))
    return out


@dataclass(frozen=True)
class EigenvalueProfile:
    torsion: KForm
    pairs: tuple[tuple[tuple[Fraction, ...], Coeff | None], ...]

    def eigenvalues(self) -> tuple[Coeff | None, ...]:
        return tuple(lam for _, lam in self.pairs)


def in_torsion_space(T: KForm, h: Subalgebra) -> bool:
    space = torsion_space(h)
    names = T.parameters()
    try:
        parts, rest = T.linear_parts(names)
    except ValueError:
        return False  # not linear in its parameters
    pieces = list(parts.values()) + [rest]
    for piece in pieces:
        if not piece.is_parameter_free():
            return False
        if tuple(to_fraction(c) for c in KForm(3, piece.coeffs).to_vector()) not in space:
            return False
    return True


def eigenvalue_profile(T: KForm, h: Subalgebra, check: bool = True) -> EigenvalueProfile:
    """Eigenvalues of cl(T) on the echelon basis of (Delta_7)_h."""
    spinors = invariant_spinors(h)
    if check:
        if not in_torsion_space(T, h):
            raise NotAdmissibleError(f"T is not in Lambda^3_1 + (Lambda^3_27)_{h.name}")
        if scalar_defect(square_on_spinors(T, spinors)):
            raise NotAdmissibleError(f"T^2 is not scalar on the {h.name}-invariant spinors")
    op = clifford_action(T)
    pairs = tuple((v, eigenvalue_on(op, v)) for v in spinors.basis)
    return EigenvalueProfile(T, pairs)


def w3_intersection(h: Subalgebra) -> LinearSubspace:
    """Tor_h intersected with Lambda^3_27, in 3-form coordinates.

    An element of (Lambda^3_27)_h kills psi_1 and acts by a symmetric matrix, so
    its square is scalar on (Delta_7)_h only when it kills every invariant
    spinor; the intersection is therefore a linear space.
    """
    space, gens = invariant_forms27(h)
    spinors = invariant_spinors(h)
    if not gens:
        return LinearSubspace.zero(FORMS3_DIM)
    cols = []
    for g in gens:
        op = clifford_action(g)
        cols.append([x for v in spinors.basis for x in op.apply(v)])
    ker = kernel_of_rows([list(r) for r in zip(*cols)], len(gens))
    vecs = []
    for v in ker.basis:
        vecs.append([sum((c * to_fraction(g.to_vector()[k]) for c, g in zip(v, gens)), Fraction(0)) for k in range(FORMS3_DIM)])
    return LinearSubspace.span(vecs, FORMS3_DIM)


def psi1_kernel_in_torsion_space(h: Subalgebra) -> LinearSubspace:
    """{T in Lambda^3_1 + (Lambda^3_27)_h : T . psi_1 = 0}."""
    space = torsion_space(h)
    forms = [KForm.from_vector(3, v) for v in space.basis]
    cols = [clifford_action(f).apply(psi(1)) for f in forms]
    ker = kernel_of_rows([list(r) for r in zip(*cols)], len(forms))
    vecs = [[sum((c * v[k] for c, v in zip(kv, space.basis)), Fraction(0)) for k in range(FORMS3_DIM)] for kv in ker.basis]
    return LinearSubspace.span(vecs, FORMS3_DIM)


@dataclass(frozen=True)
class NearlyParallelReport:
    eigenvalue_psi1: Coeff
    eigenvalue_psi2: Coeff

    @property
    def distinct(self) -> bool:
        return self.eigenvalue_psi1 != self.eigenvalue_psi2


def nearly_parallel_checks() -> NearlyParallelReport:
    """Eigenvalues of phi on psi_1 and psi_2."""
    op = clifford_action(PHI)
    return NearlyParallelReport(eigenvalue_on(op, psi(1)), eigenvalue_on(op, psi(2)))


def phi_admissible(h: Subalgebra) -> bool:
    """Whether c*phi lies in Tor_h (phi^2 scalar on the invariant spinors)."""
    return not scalar_defect(square_on_spinors(PHI, invariant_spinors(h)))
