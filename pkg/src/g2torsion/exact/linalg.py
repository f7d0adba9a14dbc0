"""Exact linear algebra over the rationals: RREF, kernels, canonical subspaces."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .._kernels import rref_integer
from .matrix import Matrix
from .poly import PolyElement, to_fraction

Vector = tuple[Fraction, ...]


class ParameterizedMatrixError(ValueError):
    """Raised when a rational-only routine receives polynomial entries."""


def _integer_row(row: Sequence) -> list[int]:
    fr = [to_fraction(x) for x in row]
    den = 1
    for f in fr:
        if f.denominator != 1:
            den = lcm(den, f.denominator)
    return [f.numerator * (den // f.denominator) for f in fr]


def _check_rational(rows: Iterable[Sequence]) -> None:
    for r in rows:
        for x in r:
            if isinstance(x, PolyElement) and not x.is_ground:
                raise ParameterizedMatrixError(f"entry {x} depends on parameters")


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form of a rational matrix given by rows.

    Returns the nonzero rows (pivot entries equal to 1) and pivot columns.
    """
    rows = [list(r) for r in rows]
    _check_rational(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    ints, pivots = rref_integer([_integer_row(r) for r in rows], ncols)
    out = []
    for r, p in zip(ints, pivots):
        pv = r[p]
        out.append(tuple(Fraction(v, pv) for v in r))
    return tuple(out), tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


class LinearSubspace:
    """A subspace of Q^n stored by its unique reduced-echelon basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: Sequence[Sequence] = ()):
        reduced, pivots = rref(basis, ambient) if basis else ((), ())
        self.ambient = ambient
        self.basis: tuple[Vector, ...] = reduced
        self.pivots: tuple[int, ...] = pivots

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "LinearSubspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        return cls(ambient, vecs)

    @classmethod
    def zero(cls, ambient: int) -> "LinearSubspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "LinearSubspace":
        return cls(ambient, [[Fraction(int(i == j)) for j in range(ambient)] for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def contains(self, v: Sequence) -> bool:
        v = [to_fraction(x) for x in v]
        if len(v) != self.ambient:
            raise ValueError("vector length mismatch")
        residual = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = residual[p]
            if c:
                residual = [x - c * y for x, y in zip(residual, row)]
        return not any(residual)

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the echelon basis (``v`` must lie in the space)."""
        v = tuple(to_fraction(x) for x in v)
        coords = tuple(v[p] for p in self.pivots)
        rebuilt = [sum((c * row[j] for c, row in zip(coords, self.basis)), Fraction(0)) for j in range(self.ambient)]
        if tuple(rebuilt) != v:
            raise ValueError("vector is not in the subspace")
        return coords

    def __add__(self, other: "LinearSubspace") -> "LinearSubspace":
        self._check(other)
        return LinearSubspace(self.ambient, self.basis + other.basis)

    def intersection(self, other: "LinearSubspace") -> "LinearSubspace":
        self._check(other)
        return self.annihilator().__add__(other.annihilator()).annihilator()

    def annihilator(self) -> "LinearSubspace":
        """Orthogonal complement for the standard dot product."""
        if not self.basis:
            return LinearSubspace.full(self.ambient)
        return kernel_of_rows(self.basis, self.ambient)

    orthogonal_complement = annihilator

    def is_subspace_of(self, other: "LinearSubspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def _check(self, other: "LinearSubspace") -> None:
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")

    def __repr__(self) -> str:
        return f"LinearSubspace(ambient={self.ambient}, dim={self.dim})"


def kernel_of_rows(rows: Sequence[Sequence], ncols: int) -> LinearSubspace:
    """Null space of the matrix with the given rows."""
    reduced, pivots = rref(rows, ncols) if rows else ((), ())
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return LinearSubspace(ncols, basis)


def rref_kernel(m: Matrix) -> LinearSubspace:
    """Null space of a parameter-free matrix, in canonical echelon form."""
    if not m.is_parameter_free():
        raise ParameterizedMatrixError("rref_kernel needs parameter-free entries")
    return kernel_of_rows(m.rows, m.ncols)


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """One exact solution of ``A x = rhs`` (free variables set to 0), or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


def express_in(basis: Sequence[Sequence], v: Sequence) -> Vector:
    """Coordinates of ``v`` in a (possibly non-echelon) independent basis."""
    if not basis:
        if any(v):
            raise ValueError("vector is not in the span")
        return ()
    cols = list(zip(*basis))
    x = solve(cols, v)
    if x is None:
        raise ValueError("vector is not in the span")
    return x


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by fraction-free elimination (Bareiss)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    rows = [[to_fraction(x) for x in r] for r in m.rows]
    den = 1
    for r in rows:
        for x in r:
            den = lcm(den, x.denominator)
    a = [[int(x * den) for x in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den**n)
