"""Invariant curvature operators R : Lambda^2 -> h and the Clifford form of the
first Bianchi identity for parallel torsion: T*T + R must be a scalar.

A curvature operator is stored as R = sum coeff * (A (x) B) with A a 2-form and
B in h; it sends w to sum coeff <A, w> B and defines the 4-tensor
R(X, Y, U, V) = sum coeff <A, X^Y> <B, U^V>.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import sympy

from .clifford import SPIN_DIM, clifford_action
from .exact import (
    GENS,
    PARAMS,
    Coeff,
    LinearSubspace,
    Matrix,
    as_poly,
    linear_coefficients,
    poly_substitute,
    rref,
    scalar_defect,
    simplify,
    to_fraction,
    variables,
)
from .exterior import PAIRS, KForm, parse_form
from .g2lie import ALGEBRA_DIM, Subalgebra, catalog, coords, form_action_matrix, named
from .invariants import equivariant_maps
from .torsion import general_torsion

Term = tuple[KForm, KForm, Coeff]


@dataclass(frozen=True)
class CurvatureAnsatz:
    name: str
    params: tuple[str, ...]
    terms: tuple[Term, ...]
    bindings: Mapping[str, Coeff] = field(default_factory=dict)

    def pair_matrix(self) -> Matrix:
        """K[i][j] = R(e_{pair i}, e_{pair j}), so the map is w -> K^T w."""
        rows = [[Fraction(0)] * ALGEBRA_DIM for _ in range(ALGEBRA_DIM)]
        for a, b, c in self.terms:
            va, vb = coords(a), coords(b)
            for i, x in enumerate(va):
                if not x:
                    continue
                for j, y in enumerate(vb):
                    if y:
                        rows[i][j] = rows[i][j] + c * x * y
        return Matrix(rows).map(simplify)

    def apply(self, omega: KForm) -> KForm:
        """R(omega) in h."""
        w = coords(omega)
        out = KForm.zero(2)
        for a, b, c in self.terms:
            s = sum((x * y for x, y in zip(coords(a), w)), Fraction(0))
            if s:
                out = out + b * (c * s)
        return out

    def on_vectors(self, X: Sequence[Coeff], Y: Sequence[Coeff]) -> KForm:
        """R(X, Y) := R(X ^ Y)."""
        xy = KForm(2, {(i + 1, j + 1): X[i] * Y[j] - X[j] * Y[i] for i in range(7) for j in range(i + 1, 7)})
        return self.apply(xy)

    def substitute(self, bindings: Mapping[str, Coeff]) -> "CurvatureAnsatz":
        terms = tuple((a, b, poly_substitute(c, bindings)) for a, b, c in self.terms)
        terms = tuple(t for t in terms if t[2])
        left = tuple(p for p in self.params if p not in bindings)
        merged = {**{k: poly_substitute(v, bindings) for k, v in self.bindings.items()}, **bindings}
        return CurvatureAnsatz(self.name, left, terms, merged)

    def parameter_blocks(self) -> dict[str, Matrix]:
        """pair_matrix split as sum over params of param * block."""
        k = self.pair_matrix()
        blocks = {p: [[Fraction(0)] * ALGEBRA_DIM for _ in range(ALGEBRA_DIM)] for p in self.params}
        for i in range(ALGEBRA_DIM):
            for j in range(ALGEBRA_DIM):
                lin, rest = linear_coefficients(k[i, j], self.params)
                if rest:
                    raise ValueError("curvature ansatz has a parameter-free part")
                for p, c in lin.items():
                    blocks[p][i][j] = to_fraction(c)
        return {p: Matrix(rows) for p, rows in blocks.items()}

    def clifford_element(self) -> Matrix:
        """sum coeff cl(A) cl(B) acting on spinors."""
        acc = Matrix.zeros(SPIN_DIM, SPIN_DIM)
        for a, b, c in self.terms:
            acc = acc + (clifford_action(a) @ clifford_action(b)).scale(c)
        return acc


def _ansatz_from_text(name: str, params: Sequence[str], blocks: Sequence[tuple[str, str]]) -> CurvatureAnsatz:
    """blocks are (2-form text with parameters, generator name)."""
    terms = []
    for text, gen in blocks:
        form = parse_form(text, grade=2)
        parts, rest = form.linear_parts(tuple(params))
        if rest:
            raise ValueError(f"block for {gen} has a parameter-free part")
        b = named(gen) if isinstance(gen, str) else gen
        for p, a in parts.items():
            if a:
                terms.append((a, b, GENS[p]))
    return CurvatureAnsatz(name, tuple(params), tuple(terms))


_SO3_BLOCKS = (
    ("(x - y)*(e12 - e56) + (x + y)*(e16 + e25) + 2*z*(e26 - e15) + 2*u*e37 + 2*v*e47", "S1"),
    ("x*(e13 + e35) + z*(e14 + e23 + e36 + e45) + v*(e17 + e57) - y*(e24 + e46) - u*(e27 + e67)", "S2"),
    ("z*(e13 - e24 - e35 + e46) + y*(e45 - e14) + u*(e57 - e17) + x*(e36 - e23) + v*(e67 - e27)", "S3"),
)

_R1SUC2_BLOCKS = (
    ("-p*(e14 + e23) - q*e57", "Q1"),
    ("p*(e24 - e13) - q*e67", "Q2"),
    ("p*(e34 + e12) + q*e56", "Q3"),
    ("r*(e13 + e24)", "P1"),
)

_QQ = (("p*(-e14 - e23 + 2*e57)", "Q1"), ("p*(-e13 + e24 + 2*e67)", "Q2"), ("p*(e12 + e34 - 2*e56)", "Q3"))
_PP = (("r*(e13 + e24)", "P1"), ("r*(e14 - e23)", "P2"), ("r*(e12 - e34)", "P3"))

# Full invariant spaces printed with the catalog.
PRINTED_ANSATZ: dict[str, tuple[tuple[str, ...], tuple[tuple[str, str], ...]]] = {
    "so3": (("x", "y", "z", "u", "v"), _SO3_BLOCKS),
    "r1_suc2": (("p", "q", "r"), _R1SUC2_BLOCKS),
}

# Pair-symmetric operators as printed. For suc2 and su2_suc2 only these are
# printed; the full invariant spaces there have dimensions 2 and 3.
PRINTED_SYMMETRIC: dict[str, tuple[tuple[str, ...], tuple[tuple[str, str], ...]]] = {
    "so3": (("x",), (("2*x*(e12 - e56)", "S1"), ("x*(e13 + e24 + e35 + e46)", "S2"), ("x*(e14 - e23 + e36 - e45)", "S3"))),
    "suc2": (("p",), _QQ),
    "r1_suc2": (("p", "r"), _QQ + (("r*(e13 + e24)", "P1"),)),
    "su2_suc2": (("p", "r"), _QQ + _PP),
}


def printed_ansatz(name: str, symmetric: bool = False) -> CurvatureAnsatz:
    table = PRINTED_SYMMETRIC if symmetric else PRINTED_ANSATZ
    params, blocks = table[name]
    return _ansatz_from_text(name, params, blocks)


def projection_ansatz(h: Subalgebra, param: str = "x") -> CurvatureAnsatz:
    """param * sum (G^-1)_ij L_i (x) L_j, the orthogonal projection onto h."""
    vecs = [coords(g) for g in h.generators]
    gram = Matrix([[sum((x * y for x, y in zip(u, v)), Fraction(0)) for v in vecs] for u in vecs])
    inv = _inverse(gram)
    terms = []
    for i, gi in enumerate(h.generators):
        for j, gj in enumerate(h.generators):
            if inv[i, j]:
                terms.append((gi, gj, GENS[param] * inv[i, j]))
    return CurvatureAnsatz(h.name, (param,), tuple(terms))


def _inverse(m: Matrix) -> Matrix:
    n = m.nrows
    rows = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, piv = rref(rows, 2 * n)
    if tuple(piv[:n]) != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix([list(r[n:]) for r in red[:n]])


def _fresh_params(count: int, taken: Sequence[str]) -> tuple[str, ...]:
    free = [p for p in PARAMS[7:] if p not in taken]
    if count > len(free):
        raise ValueError("not enough parameter names for the curvature ansatz")
    return tuple(free[:count])


def equivariant_blocks(h: Subalgebra) -> list[Matrix]:
    """Basis of invariant maps Lambda^2 -> h as 21x21 pair matrices K (map = K^T)."""
    out = []
    for x in equivariant_maps(h, "lambda2", "subalgebra"):
        # x[k, j]: coefficient of generator k in the image of pair j
        rows = [[Fraction(0)] * ALGEBRA_DIM for _ in range(ALGEBRA_DIM)]
        for k, g in enumerate(h.generators):
            gv = coords(g)
            for j in range(ALGEBRA_DIM):
                if x[k, j]:
                    for i, y in enumerate(gv):
                        if y:
                            rows[j][i] += x[k, j] * y
        out.append(Matrix(rows))
    return out


def _flat(m: Matrix) -> tuple[Fraction, ...]:
    return tuple(to_fraction(v) for row in m.rows for v in row)


def block_span(blocks: Sequence[Matrix]) -> LinearSubspace:
    return LinearSubspace.span([_flat(b) for b in blocks], ALGEBRA_DIM * ALGEBRA_DIM)


def generic_ansatz(h: Subalgebra, taken: Sequence[str] = ()) -> CurvatureAnsatz:
    """One fresh parameter per basis element of the invariant maps."""
    maps = equivariant_maps(h, "lambda2", "subalgebra")
    names = _fresh_params(len(maps), taken)
    terms = []
    for name, x in zip(names, maps):
        for k, g in enumerate(h.generators):
            a = KForm(2, {PAIRS[j]: x[k, j] for j in range(ALGEBRA_DIM) if x[k, j]})
            if a:
                terms.append((a, g, GENS[name]))
    return CurvatureAnsatz(h.name, names, tuple(terms))


@lru_cache(maxsize=None)
def invariant_curvature_space(name: str) -> CurvatureAnsatz:
    """The general invariant curvature operator of a catalog subalgebra.

    Where a parameterisation is printed with the catalog it is used, after
    checking that it spans the computed space of invariant maps.
    """
    h = catalog(name)
    computed = block_span(equivariant_blocks(h))
    if name in PRINTED_ANSATZ:
        ansatz = printed_ansatz(name)
    elif name == "so3_ir":
        ansatz = projection_ansatz(h)
    else:
        ansatz = generic_ansatz(h, general_torsion(h)[0])
    if block_span(list(ansatz.parameter_blocks().values())) != computed:
        raise ArithmeticError(f"{name}: curvature ansatz does not span the invariant maps")
    return ansatz


@lru_cache(maxsize=None)
def symmetric_curvature(name: str) -> CurvatureAnsatz:
    """Pair-symmetric invariant curvature operators of a catalog subalgebra.

    The printed parameterisation is returned when there is one, after checking
    it spans the same operators as the computed symmetric part.
    """
    sym = impose_pair_symmetry(invariant_curvature_space(name))
    if name not in PRINTED_SYMMETRIC:
        return sym
    printed = printed_ansatz(name, symmetric=True)
    if block_span(list(printed.parameter_blocks().values())) != block_span(list(sym.parameter_blocks().values())):
        raise ArithmeticError(f"{name}: printed symmetric curvature differs from the computed one")
    return printed


def is_equivariant(ansatz: CurvatureAnsatz, h: Subalgebra) -> bool:
    """R(g.w) = [g, R(w)] for every generator g, on each parameter block."""
    for block in ansatz.parameter_blocks().values():
        rmap = block.T
        for g in h.generators:
            ad = form_action_matrix(g, 2)
            if rmap @ ad != ad @ rmap:
                return False
    return True


# pair symmetry ---------------------------------------------------------------------

def _solve_linear(equations: Sequence[Coeff], unknowns: Sequence[str]) -> tuple[dict[str, Coeff], list[Coeff]]:
    """Solve equations linear in ``unknowns`` with constant coefficients.

    Unknowns later in the list are eliminated first. Returns the bindings of
    the pivot unknowns and the residual equations, which no longer involve
    the unknowns.
    """
    order = list(reversed(unknowns))
    n = len(order)
    rows, rhs = [], []
    for eq in equations:
        lin, rest = linear_coefficients(eq, tuple(order))
        row = []
        for u in order:
            c = lin.get(u, 0)
            if variables(c):
                raise ValueError(f"coefficient of {u} depends on parameters")
            row.append(to_fraction(c))
        rows.append(row)
        rhs.append(-as_poly(rest))
    m = len(rows)
    if not m:
        return {}, []
    aug = [r + [Fraction(int(i == j)) for j in range(m)] for i, r in enumerate(rows)]
    red, piv = rref(aug, n + m)
    bindings: dict[str, Coeff] = {}
    residual: list[Coeff] = []
    for row, p in zip(red, piv):
        combo = sum((c * rhs[j] for j, c in enumerate(row[n:]) if c), as_poly(0))
        if p >= n:
            if combo:
                residual.append(simplify(combo))
            continue
        value = combo
        for j in range(p + 1, n):
            if row[j]:
                value = value - GENS[order[j]] * row[j]
        bindings[order[p]] = simplify(value)
    # rows beyond the reported pivots are zero combinations of equations
    return bindings, residual


def pair_symmetry_equations(ansatz: CurvatureAnsatz) -> list[Coeff]:
    k = ansatz.pair_matrix()
    eqs = []
    for i in range(ALGEBRA_DIM):
        for j in range(i + 1, ALGEBRA_DIM):
            d = simplify(k[i, j] - k[j, i])
            if d:
                eqs.append(d)
    return eqs


def impose_pair_symmetry(ansatz: CurvatureAnsatz) -> CurvatureAnsatz:
    """Restrict to R(X,Y,U,V) = R(U,V,X,Y); the result records the bindings used."""
    eqs = pair_symmetry_equations(ansatz)
    if not eqs:
        return ansatz
    bindings, residual = _solve_linear(eqs, ansatz.params)
    if residual:
        raise ArithmeticError("pair symmetry left equations without curvature parameters")
    return ansatz.substitute(bindings)


def same_operator(r1: CurvatureAnsatz, r2: CurvatureAnsatz) -> bool:
    return r1.pair_matrix() == r2.pair_matrix()


# Bianchi condition -----------------------------------------------------------------

@dataclass(frozen=True)
class BianchiCondition:
    matrix: Matrix
    constraints: tuple[Coeff, ...]
    scalar: Coeff


def bianchi_matrix(T: KForm, R: CurvatureAnsatz) -> Matrix:
    t = clifford_action(T)
    return (t @ t + R.clifford_element()).map(simplify)


def bianchi_scalar_condition(T: KForm, R: CurvatureAnsatz) -> BianchiCondition:
    """Off-scalar entries of cl(T)^2 + R as constraints, and the diagonal value."""
    m = bianchi_matrix(T, R)
    seen, out = set(), []
    for c in scalar_defect(m):
        key = str(c)
        if c and key not in seen:
            seen.add(key)
            out.append(c)
    return BianchiCondition(m, tuple(out), simplify(m[0, 0]))


@dataclass(frozen=True)
class BianchiSolution:
    label: str
    bindings: dict[str, Coeff]
    scalar: Coeff

    def describe(self) -> dict[str, str]:
        return {k: str(v) for k, v in self.bindings.items()}


def _sym(p: Coeff) -> sympy.Expr:
    return sympy.sympify(str(as_poly(p).as_expr()))


def solve_bianchi(name: str) -> tuple[dict[str, Coeff], list[Coeff]]:
    """Solve the Bianchi condition for the curvature parameters of a catalog
    subalgebra after pair symmetry. Returns (curvature bindings, residual
    conditions on the torsion parameters)."""
    h = catalog(name)
    _, T = general_torsion(h)
    R = symmetric_curvature(name)
    cond = bianchi_scalar_condition(T, R)
    return _solve_linear(cond.constraints, R.params)


def residual_factors(residual: Sequence[Coeff]) -> list[sympy.Expr]:
    """Irreducible factors of the gcd of the residual conditions."""
    g = sympy.Integer(0)
    for c in residual:
        g = sympy.gcd(g, _sym(c))
    if g == 0:
        return []
    _, facs = sympy.factor_list(g)
    return [f for f, _ in facs]


# Branches printed with the catalog. Each binds some parameters to polynomials
# in the remaining ones.
PRINTED_BRANCHES: dict[str, tuple[tuple[str, dict[str, str]], ...]] = {
    "so3": (
        ("d=-4c", {"d": "-4*c", "x": "a**2 + b**2 - 49*c**2"}),
        ("d=3c", {"d": "3*c", "a": "0", "b": "0", "x": "-49*c**2/2"}),
    ),
    "suc2": (
        ("flat", {"a": "0", "p": "0"}),
        ("5a+b=0", {"b": "-5*a", "p": "a**2"}),
    ),
    "r1_suc2": (("generic", {"p": "-a*(3*a + b)/2", "r": "3*a*(5*a + b)/2"}),),
    "su2_suc2": (("generic", {"r": "-a*(5*a + b)/2", "p": "-a*(3*a + b)/2"}),),
}


def _parse_bindings(raw: Mapping[str, str]) -> dict[str, Coeff]:
    from .exact import parse_poly

    return {k: parse_poly(v) for k, v in raw.items()}


def branch_check(name: str, bindings: Mapping[str, Coeff]) -> BianchiSolution | None:
    """Substitute a branch; return the solution if cl(T)^2 + R is scalar there."""
    h = catalog(name)
    _, T = general_torsion(h)
    R = symmetric_curvature(name)
    cond = bianchi_scalar_condition(T, R)
    if any(poly_substitute(c, bindings) for c in cond.constraints):
        return None
    return BianchiSolution("", dict(bindings), poly_substitute(cond.scalar, bindings))


def printed_branches(name: str) -> list[tuple[str, dict[str, Coeff]]]:
    return [(label, _parse_bindings(raw)) for label, raw in PRINTED_BRANCHES.get(name, ())]


@dataclass(frozen=True)
class StiefelReport:
    torsion_matches: bool
    curvature_value: Coeff
    scalar: Coeff
    flat_scalar: Coeff

    @property
    def ok(self) -> bool:
        return self.torsion_matches and str(self.curvature_value) == str(GENS["c"] ** 2 * Fraction(-49, 2))


def stiefel_curvature_check() -> StiefelReport:
    """The d = 3c, a = b = 0 branch of the so(3) family."""
    h = catalog("so3")
    _, T = general_torsion(h)
    branch = _parse_bindings({"a": "0", "b": "0", "d": "3*c"})
    t_branch = T.substitute(branch)
    expected = parse_form("7*c*(e127 + e347 + e567)", grade=3)
    R = symmetric_curvature("so3")
    cond = bianchi_scalar_condition(t_branch, R)
    bind, residual = _solve_linear([poly_substitute(c, {}) for c in cond.constraints], R.params)
    x = bind.get("x")
    scalar = poly_substitute(cond.scalar, bind)
    flat = bianchi_scalar_condition(t_branch.substitute({"c": 0}), R.substitute({"x": 0})).scalar
    return StiefelReport(t_branch == expected and not residual, x, scalar, flat)


def computed_branches(name: str) -> list[dict[str, Coeff]]:
    """Components of the Bianchi solution set, each as a substitution.

    The residual torsion conditions are solved with sympy; every component is
    then re-verified exactly by substitution into cl(T)^2 + R.
    """
    from .exact import parse_poly

    curv, residual = solve_bianchi(name)
    if name == "su2":
        # six quadrics in seven unknowns: use the eight lines of the torsion set,
        # whose union property is checked in the torsion module
        from .torsion import SU2_LINES, component_substitution, lines_to_components

        names = general_torsion(catalog(name))[0]
        subs = []
        for comp in lines_to_components(catalog(name), SU2_LINES):
            line = component_substitution(comp, names)
            # the line is parameterised by names[0]; rename it to keep bindings explicit
            subs.append({k: poly_substitute(v, {names[0]: GENS["s"]}) for k, v in line.items()})
    else:
        exprs = [_sym(r) for r in residual]
        if not exprs:
            sols = [{}]
        else:
            syms = sorted({s for ex in exprs for s in ex.free_symbols}, key=str)
            sols = sympy.solve(exprs, syms, dict=True)
        subs = [{str(k): parse_poly(str(v)) for k, v in sol.items()} for sol in sols]
    out = []
    for torsion in subs:
        bind = dict(torsion)
        for k, v in curv.items():
            bind[k] = poly_substitute(v, torsion)
        if branch_check(name, bind) is None:
            raise ArithmeticError(f"{name}: solver branch {torsion} fails the exact check")
        out.append(bind)
    return out


def lies_on(point: Mapping[str, Coeff], branch: Mapping[str, Coeff]) -> bool:
    """Does the substitution ``point`` satisfy every equation k = v of ``branch``?"""
    return all(not poly_substitute(GENS[k] - as_poly(v), point) for k, v in branch.items())
