"""The Lie algebra g = h + R^7 attached to parallel torsion T and curvature R:

    [A + X, B + Y] = ([A, B] - R(X, Y)) + (A.Y - B.X - T(X, Y)),

with T(X, Y) the vector dual to T(X, Y, .). Basis: the generators of h, then e1..e7.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .curvature import CurvatureAnsatz
from .exact import LinearSubspace, Matrix, determinant, express_in, kernel_of_rows, to_fraction
from .exterior import DIM, KForm, contract
from .g2lie import Subalgebra, apply_vector, bracket, coords

Vector = tuple[Fraction, ...]


class JacobiViolation(ArithmeticError):
    def __init__(self, triple: tuple[int, int, int], labels: Sequence[str], value: Vector):
        self.triple = triple
        self.value = value
        names = ", ".join(labels[i] for i in triple)
        super().__init__(f"Jacobi identity fails on ({names})")


@dataclass(frozen=True)
class TransitiveAlgebra:
    labels: tuple[str, ...]
    holonomy_dim: int
    # constants[i][j] = [b_i, b_j] in the basis
    constants: tuple[tuple[Vector, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = self.constants[i][j]
                for k in range(n):
                    if c[k]:
                        out[k] += xi * yj * c[k]
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    def jacobi_defects(self) -> list[tuple[tuple[int, int, int], Vector]]:
        out = []
        e = [self.basis_vector(i) for i in range(self.dim)]
        for i, j, k in combinations(range(self.dim), 3):
            s = [Fraction(0)] * self.dim
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                t = self.bracket(self.constants[a][b], e[c])
                s = [u + v for u, v in zip(s, t)]
            if any(s):
                out.append(((i, j, k), tuple(s)))
        return out

    def is_antisymmetric(self) -> bool:
        n = self.dim
        return all(
            self.constants[i][j] == tuple(-x for x in self.constants[j][i]) for i in range(n) for j in range(n)
        )

    def to_json(self) -> str:
        table = {
            f"[{self.labels[i]},{self.labels[j]}]": {
                self.labels[k]: str(c) for k, c in enumerate(self.constants[i][j]) if c
            }
            for i, j in combinations(range(self.dim), 2)
            if any(self.constants[i][j])
        }
        return json.dumps({"basis": list(self.labels), "brackets": table}, indent=2, sort_keys=False)


def torsion_vector(T: KForm, X: Sequence[Fraction], Y: Sequence[Fraction]) -> Vector:
    """The vector with <T(X, Y), Z> = T(X, Y, Z)."""
    out = [Fraction(0)] * DIM
    for i, x in enumerate(X):
        if not x:
            continue
        ti = contract(i + 1, T)
        for j, y in enumerate(Y):
            if not y:
                continue
            tij = contract(j + 1, ti)
            for (k,), c in tij.items():
                out[k - 1] += x * y * to_fraction(c)
    return tuple(out)


def build(h: Subalgebra, T: KForm, R: CurvatureAnsatz, check: bool = True) -> TransitiveAlgebra:
    """Assemble the structure constants; with check, raise on the first Jacobi failure."""
    if T.parameters() or any(R.substitute({}).params):
        raise ValueError("bind all torsion and curvature parameters before building")
    m = h.dim
    n = m + DIM
    hbasis = [coords(g) for g in h.generators]
    zero = tuple(Fraction(0) for _ in range(n))
    consts = [[zero] * n for _ in range(n)]

    def from_h(form: KForm) -> list[Fraction]:
        return list(express_in(hbasis, coords(form)))

    unit = [tuple(Fraction(int(k == i)) for k in range(DIM)) for i in range(DIM)]
    for i in range(m):
        for j in range(m):
            consts[i][j] = tuple(from_h(bracket(h.generators[i], h.generators[j])) + [Fraction(0)] * DIM)
        for j in range(DIM):
            y = apply_vector(h.generators[i], unit[j])
            v = tuple([Fraction(0)] * m + [to_fraction(c) for c in y])
            consts[i][m + j] = v
            consts[m + j][i] = tuple(-c for c in v)
    for i in range(DIM):
        for j in range(DIM):
            r = R.on_vectors(unit[i], unit[j])
            hpart = [-to_fraction(c) for c in from_h(r)] if r else [Fraction(0)] * m
            tpart = [-c for c in torsion_vector(T, unit[i], unit[j])]
            consts[m + i][m + j] = tuple(hpart + tpart)
    labels = tuple(h.labels) + tuple(f"e{i}" for i in range(1, DIM + 1))
    g = TransitiveAlgebra(labels, m, tuple(tuple(row) for row in consts))
    if check:
        bad = g.jacobi_defects()
        if bad:
            raise JacobiViolation(bad[0][0], labels, bad[0][1])
    return g


def satisfies_jacobi(g: TransitiveAlgebra) -> bool:
    return not g.jacobi_defects()


def abelian_algebra(n: int = DIM) -> TransitiveAlgebra:
    zero = tuple(Fraction(0) for _ in range(n))
    return TransitiveAlgebra(tuple(f"e{i}" for i in range(1, n + 1)), 0, tuple(tuple(zero for _ in range(n)) for _ in range(n)))


# structure -------------------------------------------------------------------------

def span_of_brackets(g: TransitiveAlgebra, left: LinearSubspace, right: LinearSubspace) -> LinearSubspace:
    vecs = [g.bracket(x, y) for x in left.basis for y in right.basis]
    return LinearSubspace.span(vecs, g.dim)


def derived_algebra(g: TransitiveAlgebra) -> LinearSubspace:
    full = LinearSubspace.full(g.dim)
    return span_of_brackets(g, full, full)


def killing_form(g: TransitiveAlgebra) -> Matrix:
    ads = [g.ad(g.basis_vector(i)) for i in range(g.dim)]
    return Matrix([[to_fraction((a @ b).trace()) for b in ads] for a in ads])


def radical(g: TransitiveAlgebra) -> LinearSubspace:
    """The solvable radical, as the Killing-orthogonal complement of [g, g]."""
    kill = killing_form(g)
    rows = [kill.apply(v) for v in derived_algebra(g).basis]
    return kernel_of_rows(rows, g.dim) if rows else LinearSubspace.full(g.dim)


def lower_central_series(g: TransitiveAlgebra, ideal: LinearSubspace, limit: int = 64) -> list[LinearSubspace]:
    series = [ideal]
    while series[-1].dim and len(series) < limit:
        nxt = span_of_brackets(g, ideal, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def derived_series(g: TransitiveAlgebra, ideal: LinearSubspace, limit: int = 64) -> list[LinearSubspace]:
    series = [ideal]
    while series[-1].dim and len(series) < limit:
        nxt = span_of_brackets(g, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_ideal(g: TransitiveAlgebra, sub: LinearSubspace) -> bool:
    return span_of_brackets(g, LinearSubspace.full(g.dim), sub).is_subspace_of(sub)


def center(g: TransitiveAlgebra) -> LinearSubspace:
    rows = [r for i in range(g.dim) for r in g.ad(g.basis_vector(i)).rows]
    # x central iff ad(e_i) x = 0 for all i
    return kernel_of_rows(rows, g.dim)


def quotient_constants(g: TransitiveAlgebra, ideal: LinearSubspace) -> tuple[list[Vector], list[list[Vector]]]:
    """A complement basis of unit vectors and the bracket on g / ideal in it."""
    comp: list[Vector] = []
    span = ideal
    for i in range(g.dim):
        v = g.basis_vector(i)
        if v not in span:
            comp.append(v)
            span = span + LinearSubspace.span([v], g.dim)
    full_basis = list(comp) + list(ideal.basis)
    k = len(comp)
    table = []
    for x in comp:
        row = []
        for y in comp:
            coeffs = express_in(full_basis, g.bracket(x, y))
            row.append(tuple(coeffs[:k]))
        table.append(row)
    return comp, table


def _killing_from_constants(table: Sequence[Sequence[Vector]]) -> Matrix:
    k = len(table)
    ads = [Matrix.from_columns([table[i][j] for j in range(k)]) for i in range(k)]
    return Matrix([[to_fraction((a @ b).trace()) for b in ads] for a in ads])


def leading_minors(m: Matrix) -> list[Fraction]:
    return [determinant(Matrix([list(m.row(i)[:k]) for i in range(k)])) for k in range(1, m.nrows + 1)]


def is_negative_definite(m: Matrix) -> bool:
    """Sylvester: (-1)^k D_k > 0 for every leading minor."""
    return all((-1) ** (k + 1) * d > 0 for k, d in enumerate(leading_minors(m)))


@dataclass(frozen=True)
class StructureReport:
    dim: int
    derived_dim: int
    perfect: bool
    killing_rank: int
    radical: LinearSubspace
    radical_nilpotent: bool
    radical_derived: LinearSubspace
    radical_derived_abelian: bool
    quotient_dim: int
    quotient_killing_negative_definite: bool
    killing_negative_definite: bool

    def summary(self) -> dict:
        return {
            "dim": self.dim,
            "derived_dim": self.derived_dim,
            "perfect": self.perfect,
            "killing_rank": self.killing_rank,
            "radical_dim": self.radical.dim,
            "radical_nilpotent": self.radical_nilpotent,
            "radical_derived_dim": self.radical_derived.dim,
            "radical_derived_abelian": self.radical_derived_abelian,
            "quotient_dim": self.quotient_dim,
            "quotient_compact": self.quotient_killing_negative_definite,
            "killing_negative_definite": self.killing_negative_definite,
        }


def structural_analysis(g: TransitiveAlgebra) -> StructureReport:
    from .exact import rank

    der = derived_algebra(g)
    kill = killing_form(g)
    rad = radical(g)
    if not is_ideal(g, rad):
        raise ArithmeticError("computed radical is not an ideal")
    lcs = lower_central_series(g, rad)
    rad_der = span_of_brackets(g, rad, rad)
    abelian = not any(any(g.bracket(x, y)) for x in rad_der.basis for y in rad_der.basis)
    _, table = quotient_constants(g, rad)
    qkill = _killing_from_constants(table) if table else Matrix([], 0)
    return StructureReport(
        g.dim,
        der.dim,
        der.dim == g.dim,
        rank(kill.rows, g.dim),
        rad,
        lcs[-1].dim == 0,
        rad_der,
        abelian,
        len(table),
        bool(table) and is_negative_definite(qkill),
        is_negative_definite(kill),
    )


def adjoint_faithful_check(g: TransitiveAlgebra) -> tuple[bool, LinearSubspace]:
    z = center(g)
    return z.dim == 0, z


def vectors_in_basis(g: TransitiveAlgebra, items: Mapping[str, Fraction] | Sequence[Mapping[str, Fraction]]) -> list[Vector]:
    """Vectors written as {label: coefficient}."""
    if isinstance(items, Mapping):
        items = [items]
    idx = {lab: i for i, lab in enumerate(g.labels)}
    out = []
    for item in items:
        v = [Fraction(0)] * g.dim
        for lab, c in item.items():
            v[idx[lab]] += Fraction(c)
        out.append(tuple(v))
    return out
