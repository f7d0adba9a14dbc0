"""Immutable dense matrices with rational or polynomial entries."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import Coeff, PolyElement, poly_substitute, simplify

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Matrix:
    """Dense matrix whose entries are Fractions or ring polynomials.

    Constant polynomials are stored as Fractions, so a matrix without
    parameters is always made of Fractions.
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[Coeff]], ncols: int | None = None):
        data = tuple(tuple(simplify(x) for x in row) for row in rows)
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = widths.pop() if widths else (ncols or 0)

    # construction ---------------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[_ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, values: Sequence[Coeff]) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else _ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Coeff]]) -> "Matrix":
        if not columns:
            return cls([], 0)
        return cls(list(zip(*columns)), len(columns))

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        widths = {b.ncols for b in blocks}
        if len(widths) != 1:
            raise ValueError("vstack needs equal column counts")
        return cls([r for b in blocks for r in b._rows], widths.pop())

    # access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[Coeff, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Coeff:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Coeff, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Coeff, ...]:
        return tuple(r[j] for r in self._rows)

    def is_parameter_free(self) -> bool:
        return not any(isinstance(x, PolyElement) for r in self._rows for x in r)

    # algebra --------------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self._rows], self.ncols)

    def scale(self, c: Coeff) -> "Matrix":
        if not c:
            return Matrix.zeros(self.nrows, self.ncols)
        return Matrix([[c * x if x else _ZERO for x in r] for r in self._rows], self.ncols)

    def __mul__(self, c: Coeff) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if other.nrows:
            cols = [{k: x for k, x in enumerate(c) if x} for c in zip(*other._rows)]
        else:
            cols = [{} for _ in range(other.ncols)]
        out = []
        for r in self._rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            row = []
            for cd in cols:
                acc = _ZERO
                if nz and cd:
                    for k, x in nz:
                        y = cd.get(k)
                        if y is not None:
                            acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(out, other.ncols)

    def apply(self, vec: Sequence[Coeff]) -> tuple[Coeff, ...]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self._rows:
            acc = _ZERO
            for x, y in zip(r, vec):
                if x and y:
                    acc = acc + x * y
            out.append(simplify(acc))
        return tuple(out)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self._rows)], self.nrows) if self.nrows else Matrix([], 0)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self) -> Coeff:
        acc = _ZERO
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self._rows[i][i]
        return simplify(acc)

    def substitute(self, bindings: Mapping[str, Coeff]) -> "Matrix":
        return Matrix([[poly_substitute(x, bindings) for x in r] for r in self._rows], self.ncols)

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self._rows], self.ncols)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.nrows) for j in range(i + 1, self.ncols)
        )

    def is_antisymmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self._rows[i][j] == -self._rows[j][i] for i in range(self.nrows) for j in range(i, self.ncols)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r, s in zip(self._rows, other._rows) for x, y in zip(r, s)
        )

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        return f"Matrix({[list(map(str, r)) for r in self._rows]})"


def is_scalar_matrix(m: Matrix) -> Coeff | None:
    """Return lam if ``m == lam * Identity`` entry-wise, else None."""
    if m.nrows != m.ncols:
        raise ValueError("is_scalar_matrix needs a square matrix")
    if m.nrows == 0:
        return None
    lam = m[0, 0]
    for i, r in enumerate(m.rows):
        for j, x in enumerate(r):
            if i == j:
                if x != lam:
                    return None
            elif x:
                return None
    return lam


def scalar_defect(m: Matrix) -> list[Coeff]:
    """Entries that must vanish for ``m`` to be scalar: off-diagonals and
    differences of diagonal entries with the first one."""
    out: list[Coeff] = []
    lam = m[0, 0]
    for i, r in enumerate(m.rows):
        for j, x in enumerate(r):
            if i == j:
                if i:
                    out.append(simplify(x - lam))
            else:
                out.append(x)
    return [x for x in out if x]
