"""so(7) as 2-forms on R^7, the subalgebra g2, and the catalog of its
non-abelian subalgebras used for holonomy.

A 2-form w = sum w_ij e_ij acts on vectors by the skew matrix sending
e_i to w_ij e_j (this is half of the Clifford commutator [w, .]), on spinors
by half its Clifford product, and on forms as a derivation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import isqrt
from typing import Iterable, Sequence

from .clifford import psi, spin_action
from .exact import (
    LinearSubspace,
    Matrix,
    determinant,
    express_in,
    kernel_of_rows,
    rref_kernel,
    simplify,
    to_fraction,
)
from .exterior import DIM, PAIRS, PHI, KForm, basis_indices, parse_form, sort_sign

ALGEBRA_DIM = len(PAIRS)  # 21

# The seven linear equations cutting g2 out of so(7), on the coordinates w_ij.
G2_EQUATIONS: tuple[dict[tuple[int, int], int], ...] = (
    {(1, 2): 1, (3, 4): 1, (5, 6): 1},
    {(1, 3): -1, (2, 4): 1, (6, 7): -1},
    {(1, 4): -1, (2, 3): -1, (5, 7): -1},
    {(1, 6): -1, (2, 5): -1, (3, 7): 1},
    {(1, 5): 1, (2, 6): -1, (4, 7): -1},
    {(1, 7): 1, (3, 6): 1, (4, 5): 1},
    {(2, 7): 1, (3, 5): 1, (4, 6): -1},
)


def equation_matrix() -> Matrix:
    return Matrix([[eq.get(p, 0) for p in PAIRS] for eq in G2_EQUATIONS])


def as_two_form(x) -> KForm:
    if isinstance(x, KForm):
        if x.grade != 2 and x:
            raise ValueError("expected a 2-form")
        return x
    if isinstance(x, str):
        return parse_form(x, grade=2)
    return KForm.from_vector(2, x)


def coords(omega: KForm) -> tuple[Fraction, ...]:
    return tuple(to_fraction(c) for c in as_two_form(omega).to_vector())


def satisfies_g2_equations(omega: KForm) -> bool:
    w = as_two_form(omega)
    return all(not simplify(sum((c * w[p] for p, c in eq.items()), Fraction(0))) for eq in G2_EQUATIONS)


@lru_cache(maxsize=None)
def g2_basis() -> LinearSubspace:
    """g2 as the kernel of the seven equations, inside the 21 coordinates w_ij."""
    return rref_kernel(equation_matrix())


def g2_elements() -> tuple[KForm, ...]:
    return tuple(KForm.from_vector(2, v) for v in g2_basis().basis)


# actions ---------------------------------------------------------------------

def vector_action(omega: KForm) -> Matrix:
    """7x7 skew matrix of the 2-form acting on R^7 (e_i -> w_ij e_j)."""
    w = as_two_form(omega)
    rows = [[0] * DIM for _ in range(DIM)]
    for (i, j), c in w.items():
        rows[j - 1][i - 1] = rows[j - 1][i - 1] + c
        rows[i - 1][j - 1] = rows[i - 1][j - 1] - c
    return Matrix(rows)


def two_form_from_matrix(m: Matrix) -> KForm:
    """Inverse of vector_action on skew matrices."""
    if not m.is_antisymmetric():
        raise ValueError("matrix is not skew-symmetric")
    return KForm(2, {(i, j): m[j - 1, i - 1] for i, j in PAIRS})


def bracket(omega: KForm, eta: KForm) -> KForm:
    """Lie bracket transported from matrix commutators of the vector action."""
    return two_form_from_matrix(vector_action(omega).commutator(vector_action(eta)))


def apply_vector(omega: KForm, v: Sequence) -> tuple:
    return vector_action(omega).apply(tuple(v))


def form_action(omega: KForm, alpha: KForm) -> KForm:
    """Derivation extension of the vector action to forms of any degree."""
    m = vector_action(omega)
    images = {i: {j + 1: m[j, i - 1] for j in range(DIM) if m[j, i - 1]} for i in range(1, DIM + 1)}
    acc: dict[tuple[int, ...], object] = {}
    for idx, c in alpha.items():
        for pos, i in enumerate(idx):
            for j, mji in images[i].items():
                new = idx[:pos] + (j,) + idx[pos + 1:]
                sign, key = sort_sign(new)
                if sign:
                    val = c * mji
                    acc[key] = acc.get(key, 0) + (val if sign > 0 else -val)
    return KForm(alpha.grade, acc)


def form_action_matrix(omega: KForm, grade: int) -> Matrix:
    """Matrix of form_action on the lexicographic basis of k-forms."""
    basis = basis_indices(grade)
    cols = [form_action(omega, KForm.basis(*b)).to_vector() for b in basis]
    return Matrix.from_columns(cols)


# subalgebras -----------------------------------------------------------------

CATALOG_NAMES = ("su3", "u2", "su2", "suc2", "r1_suc2", "su2_suc2", "so3", "so3_ir")

NAMED_GENERATORS: dict[str, str] = {
    "P1": "e13 + e24",
    "P2": "e14 - e23",
    "P3": "e12 - e34",
    "Q1": "-e14 - e23 + 2*e57",
    "Q2": "-e13 + e24 + 2*e67",
    "Q3": "e12 + e34 - 2*e56",
    "S1": "e12 - e56",
    "S2": "e13 + e24 + e35 + e46",
    "S3": "e14 - e23 + e36 - e45",
}

_GENERATOR_LISTS: dict[str, tuple[str, ...]] = {
    "u2": ("P1", "P2", "P3", "Q3"),
    "su2": ("P1", "P2", "P3"),
    "suc2": ("Q1", "Q2", "Q3"),
    "r1_suc2": ("P1", "Q1", "Q2", "Q3"),
    "su2_suc2": ("P1", "P2", "P3", "Q1", "Q2", "Q3"),
    "so3": ("S1", "S2", "S3"),
}


def named(name: str) -> KForm:
    return parse_form(NAMED_GENERATORS[name], grade=2)


class SubalgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Subalgebra:
    """A Lie subalgebra of g2 spanned by independent 2-form generators."""

    name: str
    generators: tuple[KForm, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(as_two_form(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"{self.name}[{k}]" for k in range(len(gens))))
        if len(self.labels) != len(gens):
            raise SubalgebraError("one label per generator")
        if self.span.dim != len(gens):
            raise SubalgebraError(f"{self.name}: generators are linearly dependent")
        for g, lab in zip(gens, self.labels):
            if not satisfies_g2_equations(g):
                raise SubalgebraError(f"{self.name}: generator {lab} is not in g2")
        for a, b in combinations(range(len(gens)), 2):
            if coords(bracket(gens[a], gens[b])) not in self.span:
                raise SubalgebraError(f"{self.name}: [{self.labels[a]}, {self.labels[b]}] leaves the span")

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def span(self) -> LinearSubspace:
        return LinearSubspace.span([coords(g) for g in self.generators], ALGEBRA_DIM)

    def contains(self, omega: KForm) -> bool:
        return coords(omega) in self.span

    def structure_constants(self) -> dict[tuple[int, int], tuple[Fraction, ...]]:
        """[g_a, g_b] expressed in the generators, for a < b."""
        basis = [coords(g) for g in self.generators]
        return {
            (a, b): express_in(basis, coords(bracket(self.generators[a], self.generators[b])))
            for a, b in combinations(range(self.dim), 2)
        }

    def vector_actions(self) -> tuple[Matrix, ...]:
        return tuple(vector_action(g) for g in self.generators)

    def spin_actions(self) -> tuple[Matrix, ...]:
        return tuple(spin_action(g) for g in self.generators)


@lru_cache(maxsize=None)
def catalog(name: str) -> Subalgebra:
    if name in _GENERATOR_LISTS:
        labels = _GENERATOR_LISTS[name]
        return Subalgebra(name, tuple(named(n) for n in labels), labels)
    if name == "su3":
        return _su3()
    if name == "so3_ir":
        return so3_ir_construct()
    raise KeyError(f"unknown subalgebra {name!r}; expected one of {CATALOG_NAMES}")


def _su3() -> Subalgebra:
    """Elements of g2 that annihilate psi_1 and psi_2 under the spin action."""
    g2 = g2_elements()
    # the map coordinates -> (w.psi_1, w.psi_2) on the g2 basis
    cols = []
    for w in g2:
        op = spin_action(w)
        cols.append(op.apply(psi(1)) + op.apply(psi(2)))
    ker = kernel_of_rows([list(r) for r in zip(*cols)], len(g2))
    gens = []
    for v in ker.basis:
        acc = KForm(2)
        for c, w in zip(v, g2):
            if c:
                acc = acc + c * w
        gens.append(acc)
    return Subalgebra("su3", tuple(gens))


def normalizer_in_g2(h: Subalgebra) -> LinearSubspace:
    """{w in g2 : [w, h] in h}, as a subspace of the 21 coordinates."""
    return _bracket_condition(h, h.span.annihilator().basis)


def centralizer_in_g2(h: Subalgebra) -> LinearSubspace:
    """{w in g2 : [w, h] = 0}."""
    ident = [tuple(Fraction(int(i == j)) for j in range(ALGEBRA_DIM)) for i in range(ALGEBRA_DIM)]
    return _bracket_condition(h, ident)


def _bracket_condition(h: Subalgebra, functionals: Sequence[Sequence[Fraction]]) -> LinearSubspace:
    g2 = g2_elements()
    rows = []
    for g in h.generators:
        images = [coords(bracket(w, g)) for w in g2]
        for f in functionals:
            rows.append([sum((x * y for x, y in zip(f, img)), Fraction(0)) for img in images])
    ker = kernel_of_rows(rows, len(g2)) if rows else LinearSubspace.full(len(g2))
    vecs = []
    for v in ker.basis:
        vecs.append([sum((c * coords(w)[k] for c, w in zip(v, g2)), Fraction(0)) for k in range(ALGEBRA_DIM)])
    return LinearSubspace.span(vecs, ALGEBRA_DIM)


def subspace_forms(space: LinearSubspace) -> tuple[KForm, ...]:
    return tuple(KForm.from_vector(2, v) for v in space.basis)


# module structure on R^7 -------------------------------------------------------

def commutant(operators: Sequence[Matrix], n: int) -> list[Matrix]:
    """Basis of the n x n rational matrices commuting with every operator."""
    rows = []
    for op in operators:
        # (op X - X op)[i, j] as linear functional in X[k, l] (index k*n + l)
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    if op[i, k]:
                        row[k * n + j] += op[i, k]
                    if op[k, j]:
                        row[i * n + k] -= op[k, j]
                rows.append(row)
    ker = kernel_of_rows(rows, n * n) if rows else LinearSubspace.full(n * n)
    return [Matrix([list(v[i * n:(i + 1) * n]) for i in range(n)]) for v in ker.basis]


def restrict_to(op: Matrix, basis: Sequence[Sequence[Fraction]]) -> Matrix | None:
    """Matrix of op on span(basis) (coordinates in that basis), None if not invariant."""
    cols = []
    for b in basis:
        img = op.apply(tuple(b))
        try:
            cols.append(express_in(basis, img))
        except ValueError:
            return None
    return Matrix.from_columns(cols)


def is_division_commutant(basis: Sequence[Matrix]) -> bool:
    """True when X^T X is a scalar for every X in the span (by polarization).

    For an orthogonal representation this certifies that the commutant is a
    division algebra, so the module is irreducible over the reals.
    """
    for a in basis:
        for b in basis:
            sym = a.T @ b + b.T @ a
            n = sym.nrows
            lam = sym[0, 0]
            if any(sym[i, j] != (lam if i == j else 0) for i in range(n) for j in range(n)):
                return False
    return True


@dataclass(frozen=True)
class Summand:
    basis: tuple[tuple[Fraction, ...], ...]
    commutant_dim: int
    irreducible: bool

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def kind(self) -> str:
        if self.dim == 1 and self.commutant_dim == 1:
            return "trivial-or-line"
        return {1: "real", 2: "complex", 4: "quaternionic"}.get(self.commutant_dim, "other")


def _coordinate_space(indices: Iterable[int]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(int(i == k)) for k in range(1, DIM + 1)) for i in indices)


def _vectors(*vs) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in v) for v in vs)


# Claimed invariant splittings of R^7, one summand per entry.
VECTOR_SPLITTINGS: dict[str, tuple[tuple[tuple[Fraction, ...], ...], ...]] = {
    "su3": (_coordinate_space(range(1, 7)), _coordinate_space([7])),
    "u2": (_coordinate_space(range(1, 5)), _coordinate_space([5, 6]), _coordinate_space([7])),
    "su2": (_coordinate_space(range(1, 5)), _coordinate_space([5]), _coordinate_space([6]), _coordinate_space([7])),
    "suc2": (_coordinate_space(range(1, 5)), _coordinate_space([5, 6, 7])),
    "r1_suc2": (_coordinate_space(range(1, 5)), _coordinate_space([5, 6, 7])),
    "su2_suc2": (_coordinate_space(range(1, 5)), _coordinate_space([5, 6, 7])),
    "so3": (
        _vectors((1, 0, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, -1, 0), (0, 0, 0, 1, 0, 0, 0)),
        _vectors((1, 0, 0, 0, -1, 0, 0), (0, 1, 0, 0, 0, 1, 0), (0, 0, 1, 0, 0, 0, 0)),
        _coordinate_space([7]),
    ),
    "so3_ir": (_coordinate_space(range(1, 8)),),
}


def vector_decomposition(h: Subalgebra, splitting: Sequence[Sequence[Sequence[Fraction]]]) -> list[Summand]:
    """Check that the given subspaces are invariant, form a direct sum of R^7,
    and report each summand's commutant dimension and irreducibility."""
    acts = h.vector_actions()
    total = []
    out = []
    for basis in splitting:
        basis = tuple(tuple(to_fraction(x) for x in v) for v in basis)
        blocks = []
        for op in acts:
            blk = restrict_to(op, basis)
            if blk is None:
                raise ValueError(f"{h.name}: subspace of dimension {len(basis)} is not invariant")
            blocks.append(blk)
        comm = commutant(blocks, len(basis))
        out.append(Summand(basis, len(comm), is_division_commutant(comm)))
        total.extend(basis)
    if LinearSubspace.span(total, DIM).dim != DIM or len(total) != DIM:
        raise ValueError(f"{h.name}: subspaces do not form a direct sum decomposition of R^7")
    return out


# the irreducible so(3) ---------------------------------------------------------
#
# so(3) acts irreducibly on harmonic cubic polynomials in (x, y, z). That module
# carries an invariant inner product and an invariant 3-form which together form
# a G2 structure; an orthonormal "octonionic" frame, reordered by a signed
# permutation, identifies that structure with phi and carries so(3) into g2.

_CUBICS = tuple((a, b, 3 - a - b) for a in range(3, -1, -1) for b in range(3 - a, -1, -1))
_LINEAR = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _laplacian_row_matrix() -> list[list[int]]:
    rows = [[0] * len(_CUBICS) for _ in _LINEAR]
    for col, m in enumerate(_CUBICS):
        for axis in range(3):
            if m[axis] >= 2:
                t = list(m)
                t[axis] -= 2
                rows[_LINEAR.index(tuple(t))][col] += m[axis] * (m[axis] - 1)
    return rows


def _rotation_on_cubics(i: int, j: int) -> list[list[int]]:
    """Matrix of x_i d/dx_j - x_j d/dx_i on cubic monomials."""
    out = [[0] * len(_CUBICS) for _ in _CUBICS]
    for col, m in enumerate(_CUBICS):
        for src, dst, sign in ((j, i, 1), (i, j, -1)):
            if m[src]:
                t = list(m)
                t[src] -= 1
                t[dst] += 1
                out[_CUBICS.index(tuple(t))][col] += sign * m[src]
    return out


@lru_cache(maxsize=None)
def harmonic_cubic_module() -> tuple[tuple[tuple[Fraction, ...], ...], tuple[Matrix, Matrix, Matrix]]:
    """Echelon basis of harmonic cubics and the matrices of L_x, L_y, L_z on it."""
    harm = kernel_of_rows(_laplacian_row_matrix(), len(_CUBICS)).basis
    mats = []
    # L_x = y d/dz - z d/dy, L_y = z d/dx - x d/dz, L_z = x d/dy - y d/dx
    for i, j in ((1, 2), (2, 0), (0, 1)):
        op = Matrix(_rotation_on_cubics(i, j))
        cols = [express_in(harm, op.apply(h)) for h in harm]
        mats.append(Matrix.from_columns(cols))
    return harm, tuple(mats)


def _invariant_bilinear(ops: Sequence[Matrix], n: int) -> Matrix:
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {p: k for k, p in enumerate(idx)}

    def var(i, j):
        return pos[(min(i, j), max(i, j))]

    rows = []
    for op in ops:
        # (op^T B + B op)[i, j] = sum_k op[k, i] B[k, j] + B[i, k] op[k, j]
        for i in range(n):
            for j in range(i, n):
                row = [Fraction(0)] * len(idx)
                for k in range(n):
                    row[var(k, j)] += op[k, i]
                    row[var(i, k)] += op[k, j]
                rows.append(row)
    ker = kernel_of_rows(rows, len(idx))
    if ker.dim != 1:
        raise ArithmeticError(f"expected a unique invariant bilinear form, found {ker.dim}")
    v = ker.basis[0]
    b = Matrix([[v[var(i, j)] for j in range(n)] for i in range(n)])
    if b[0, 0] < 0:
        b = -b
    return b


def _invariant_three_form(ops: Sequence[Matrix], n: int) -> dict[tuple[int, int, int], Fraction]:
    trip = list(combinations(range(n), 3))
    pos = {t: k for k, t in enumerate(trip)}
    rows = []
    for op in ops:
        # (op . Phi)(e_i, e_j, e_k) = -sum_m op[m,i] Phi(m,j,k) + ... for each slot
        for t in trip:
            row = [Fraction(0)] * len(trip)
            for slot in range(3):
                for m in range(n):
                    c = op[m, t[slot]]
                    if not c:
                        continue
                    new = list(t)
                    new[slot] = m
                    sign, key = sort_sign(new)
                    if sign:
                        row[pos[key]] += sign * c
            rows.append(row)
    ker = kernel_of_rows(rows, len(trip))
    if ker.dim != 1:
        raise ArithmeticError(f"expected a unique invariant 3-form, found {ker.dim}")
    return {t: c for t, c in zip(trip, ker.basis[0]) if c}


def _trilinear(phi3: dict, u, v, w) -> Fraction:
    acc = Fraction(0)
    for (i, j, k), c in phi3.items():
        for p in permutations(range(3)):
            idx = (i, j, k)
            a, b, d = idx[p[0]], idx[p[1]], idx[p[2]]
            if u[a] and v[b] and w[d]:
                sign, _ = sort_sign(p)
                acc += sign * c * u[a] * v[b] * w[d]
    return acc


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q <= 0:
        return None
    n, d = q.numerator, q.denominator
    a, b = isqrt(n), isqrt(d)
    return Fraction(a, b) if a * a == n and b * b == d else None


@dataclass(frozen=True)
class OctonionFrame:
    """Rational orthonormal frame of the cubic module adapted to the 3-form."""

    metric: Matrix
    three_form: dict
    frame: tuple[tuple[Fraction, ...], ...]
    frame_form: dict  # the 3-form written in the frame


def _octonion_frames(bound: int = 2) -> list[OctonionFrame]:
    _, ops = harmonic_cubic_module()
    n = 7
    b = _invariant_bilinear(ops, n)
    phi3 = _invariant_three_form(ops, n)
    binv_cols = []
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for j in range(n):
        binv_cols.append(express_in([b.col(k) for k in range(n)], ident[j]))
    binv = Matrix.from_columns(binv_cols)

    def form(u, v):
        return sum((u[i] * b[i, j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j]), Fraction(0))

    def cross(u, v):
        w = [_trilinear(phi3, u, v, ident[k]) for k in range(n)]
        return binv.apply(w)

    # scale so that |u x v| = |u||v| for orthogonal u, v
    u = ident[0]
    v = next(x for x in ident[1:] if form(u, x) == 0) if any(form(ident[0], x) == 0 for x in ident[1:]) else None
    if v is None:
        comp = kernel_of_rows([b.row(0)], n).basis
        v = comp[0]
    w = cross(u, v)
    scale = form(w, w) / (form(u, u) * form(v, v))
    metric = b.scale(scale)

    def g(x, y):
        return scale * form(x, y)

    def units_in(basis, bound):
        for cs in product(range(-bound, bound + 1), repeat=len(basis)):
            if not any(cs) or next(c for c in cs if c) < 0:
                continue
            x = [sum((c * vec[k] for c, vec in zip(cs, basis)), Fraction(0)) for k in range(n)]
            root = _rational_sqrt(g(x, x))
            if root:
                yield tuple(y / root for y in x)

    lz = ops[2]
    weight0 = kernel_of_rows(lz.rows, n).basis
    weight3 = kernel_of_rows((lz @ lz + Matrix.identity(n).scale(9)).rows, n).basis
    u1 = next(units_in(weight0, 3))
    u2 = next(units_in(weight3, 3))  # weight spaces are orthogonal
    u3 = tuple(cross(u1, u2))
    rest = kernel_of_rows([[g(a, ident[k]) for k in range(n)] for a in (u1, u2, u3)], n).basis
    frames = []
    for u4 in units_in(rest, bound):
        frame = (u1, u2, u3, u4, tuple(cross(u1, u4)), tuple(cross(u2, u4)), tuple(cross(u3, u4)))
        if not all(g(frame[i], frame[j]) == (1 if i == j else 0) for i in range(n) for j in range(n)):
            raise ArithmeticError("octonion frame is not orthonormal")
        frame_form = {}
        for t in combinations(range(n), 3):
            val = scale * _trilinear(phi3, frame[t[0]], frame[t[1]], frame[t[2]])
            if val:
                frame_form[tuple(x + 1 for x in t)] = val
        frames.append(OctonionFrame(metric, phi3, frame, frame_form))
    if not frames:
        raise ArithmeticError("no rational unit vector found in the search box")
    return frames


def _signed_permutation_to_phi(frame_form: dict) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(perm, signs) with e_i = signs[i] * f_{perm[i]} turning frame_form into phi."""
    target = {idx: c for idx, c in PHI.items()}
    support = set(target)
    for perm in permutations(range(7)):
        inv = {perm[i]: i for i in range(7)}
        mapped = {tuple(sorted(inv[j - 1] + 1 for j in t)) for t in frame_form}
        if mapped != support:
            continue
        for signs in product((1, -1), repeat=7):
            out = {}
            for t, c in frame_form.items():
                idx = [inv[j - 1] for j in t]
                s, key = sort_sign(idx)
                out[tuple(x + 1 for x in key)] = s * c * signs[idx[0]] * signs[idx[1]] * signs[idx[2]]
            if out == target:
                return perm, signs
    raise ArithmeticError("no signed permutation identifies the frame form with phi")


def _height(forms: Iterable[KForm]) -> int:
    return sum(abs(f.numerator) + f.denominator for w in forms for _, f in w.items())


def _generators_in_frame(fr: OctonionFrame, ops: Sequence[Matrix]) -> tuple[KForm, ...]:
    perm, signs = _signed_permutation_to_phi(fr.frame_form)
    fmat = Matrix.from_columns(fr.frame)  # frame coordinates -> cubic coordinates
    # cubic -> frame coordinates, using that the frame is orthonormal for the metric
    finv = Matrix([[sum((fr.frame[a][i] * fr.metric[i, j] for i in range(7)), Fraction(0)) for j in range(7)] for a in range(7)])
    # coordinate i of R^7 is signs[i] times frame coordinate perm[i]
    pmat = Matrix([[signs[i] if perm[i] == j else 0 for j in range(7)] for i in range(7)])
    return tuple(two_form_from_matrix(pmat @ finv @ op @ fmat @ pmat.T) for op in ops)


@lru_cache(maxsize=None)
def so3_ir_construct() -> Subalgebra:
    """The irreducible so(3) inside g2, built from the harmonic cubic module.

    Among the rational frames found in a small search box, the one giving the
    smallest coefficients is used; every frame yields a conjugate subalgebra.
    """
    _, ops = harmonic_cubic_module()
    best = min((_generators_in_frame(fr, ops) for fr in _octonion_frames()), key=_height)
    return Subalgebra("so3_ir", best, ("Lx", "Ly", "Lz"))


def irreducibility_certificate(h: Subalgebra) -> bool:
    """Only scalar matrices commute with the vector action."""
    comm = commutant(h.vector_actions(), DIM)
    return len(comm) == 1


def killing_like_trace(h: Subalgebra, actions: Sequence[Matrix]) -> Fraction:
    """trace of sum_i action(g_i)^2 over a module (a Casimir-type invariant)."""
    acc = Fraction(0)
    for a in actions:
        acc += to_fraction((a @ a).trace())
    return acc


def gram_determinant(vectors: Sequence[Sequence[Fraction]]) -> Fraction:
    return determinant(Matrix([[sum((x * y for x, y in zip(u, v)), Fraction(0)) for v in vectors] for u in vectors]))
