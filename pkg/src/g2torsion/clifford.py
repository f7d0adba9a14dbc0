"""The real Clifford algebra Cl(7) acting on the spinor space R^8.

Each generator e_i acts by a signed permutation matrix assembled from the
standard so(8) basis matrices E_ab. The spinor basis psi_1..psi_8 is the
standard basis of R^8.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import Coeff, LinearSubspace, Matrix, simplify, to_fraction
from .exterior import DIM, KForm

SPIN_DIM = 8

# e_i as combinations of E_ab: (a, b, coefficient).
GAMMA_TABLE: dict[int, tuple[tuple[int, int, int], ...]] = {
    1: ((1, 8, 1), (2, 7, 1), (3, 6, -1), (4, 5, -1)),
    2: ((1, 7, -1), (2, 8, 1), (3, 5, 1), (4, 6, -1)),
    3: ((1, 6, -1), (2, 5, 1), (3, 8, -1), (4, 7, 1)),
    4: ((1, 5, -1), (2, 6, -1), (3, 7, -1), (4, 8, -1)),
    5: ((1, 3, -1), (2, 4, -1), (5, 7, 1), (6, 8, 1)),
    6: ((1, 4, 1), (2, 3, -1), (5, 8, -1), (6, 7, 1)),
    7: ((1, 2, 1), (3, 4, -1), (5, 6, -1), (7, 8, 1)),
}

# E_ab carries E_SIGN at (a, b) and -E_SIGN at (b, a). Both signs satisfy the
# Clifford relations; -1 is the one for which phi has eigenvalue -7 on psi_1
# and the catalog forms act on psi_1, psi_2 with the expected eigenvalues.
E_SIGN = -1

SpinOperator = Matrix
Spinor = tuple[Fraction, ...]


def basis_matrix(a: int, b: int, sign: int = E_SIGN) -> Matrix:
    """The so(8) basis element E_ab in the chosen sign convention."""
    rows = [[0] * SPIN_DIM for _ in range(SPIN_DIM)]
    rows[a - 1][b - 1] = sign
    rows[b - 1][a - 1] = -sign
    return Matrix(rows)


def _check_index(i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= DIM:
        raise ValueError(f"Clifford generator index must be in 1..{DIM}, got {i!r}")


def gamma_with_sign(i: int, sign: int) -> Matrix:
    _check_index(i)
    rows = [[0] * SPIN_DIM for _ in range(SPIN_DIM)]
    for a, b, c in GAMMA_TABLE[i]:
        rows[a - 1][b - 1] += c * sign
        rows[b - 1][a - 1] -= c * sign
    return Matrix(rows)


@lru_cache(maxsize=None)
def gamma(i: int) -> Matrix:
    """Matrix of Clifford multiplication by e_i on R^8."""
    return gamma_with_sign(i, E_SIGN)


def clifford_relations_hold(sign: int = E_SIGN) -> bool:
    """All 49 identities g_i g_j + g_j g_i = -2 delta_ij Id."""
    gs = [gamma_with_sign(i, sign) for i in range(1, DIM + 1)]
    ident = Matrix.identity(SPIN_DIM)
    for i, gi in enumerate(gs):
        for j, gj in enumerate(gs):
            target = ident.scale(-2) if i == j else Matrix.zeros(SPIN_DIM, SPIN_DIM)
            if gi @ gj + gj @ gi != target:
                return False
    return True


# Monomials e_{i1...ik} are signed permutations; store them compactly as
# (target row for each column, sign for each column).

@lru_cache(maxsize=None)
def _monomial(indices: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    m = Matrix.identity(SPIN_DIM)
    for i in indices:
        m = m @ gamma(i)
    rows, signs = [], []
    for j in range(SPIN_DIM):
        col = m.col(j)
        (r,) = [k for k, x in enumerate(col) if x]
        rows.append(r)
        signs.append(int(col[r]))
    return tuple(rows), tuple(signs)


def monomial_matrix(indices: Sequence[int]) -> Matrix:
    """Product g_{i1} ... g_{ik} in the given order."""
    for i in indices:
        _check_index(i)
    rows, signs = _monomial(tuple(indices))
    out = [[0] * SPIN_DIM for _ in range(SPIN_DIM)]
    for j, (r, s) in enumerate(zip(rows, signs)):
        out[r][j] = s
    return Matrix(out)


def clifford_action(form: KForm) -> Matrix:
    """Clifford multiplication by a form: e_I maps to the ordered gamma product."""
    acc: list[list[Coeff]] = [[0] * SPIN_DIM for _ in range(SPIN_DIM)]
    for idx, c in form.items():
        rows, signs = _monomial(idx)
        for j, (r, s) in enumerate(zip(rows, signs)):
            acc[r][j] = acc[r][j] + (c if s > 0 else -c)
    return Matrix(acc)


def spin_action(omega: KForm) -> Matrix:
    """Action of a 2-form, viewed in spin(7), on spinors: half its Clifford product."""
    if omega.grade != 2 and omega:
        raise ValueError("spin_action expects a 2-form")
    return clifford_action(omega).scale(Fraction(1, 2))


def vector_operator(vec: Sequence[Coeff]) -> Matrix:
    """Clifford multiplication by the vector sum v_i e_i."""
    return clifford_action(KForm(1, {(i + 1,): c for i, c in enumerate(vec) if c}))


def vector_from_operator(op: Matrix) -> tuple[Coeff, ...]:
    """Coordinates v with op = sum v_i g_i, raising if op is not of that form."""
    vec = tuple(simplify(-(gamma(i) @ op).trace() * Fraction(1, SPIN_DIM)) for i in range(1, DIM + 1))
    if vector_operator(vec) != op:
        raise ValueError("operator is not Clifford multiplication by a vector")
    return vec


# spinors ---------------------------------------------------------------------

def psi(k: int) -> Spinor:
    """Basis spinor psi_k, k = 1..8."""
    if not 1 <= k <= SPIN_DIM:
        raise ValueError(f"spinor index must be in 1..{SPIN_DIM}")
    return tuple(Fraction(int(j == k - 1)) for j in range(SPIN_DIM))


def spinor(coords: Iterable) -> Spinor:
    v = tuple(to_fraction(x) for x in coords)
    if len(v) != SPIN_DIM:
        raise ValueError(f"a spinor has {SPIN_DIM} coordinates")
    return v


def spinor_inner(u: Sequence[Coeff], v: Sequence[Coeff]) -> Coeff:
    acc: Coeff = Fraction(0)
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return simplify(acc)


def eigenvalue_on(op: Matrix, v: Sequence[Coeff]) -> Coeff | None:
    """Return lam if op v = lam v exactly, else None."""
    if not any(v):
        raise ValueError("eigenvalue_on needs a nonzero spinor")
    w = op.apply(tuple(v))
    k = next(i for i, x in enumerate(v) if x)
    lam = simplify(w[k] * (1 / to_fraction(v[k])))
    for x, y in zip(w, v):
        if simplify(x - lam * y):
            return None
    return lam


def joint_kernel(operators: Iterable[Matrix], dim: int = SPIN_DIM) -> LinearSubspace:
    """Common null space of rational operators."""
    from .exact import kernel_of_rows

    rows = [r for op in operators for r in op.rows]
    if not rows:
        return LinearSubspace.full(dim)
    return kernel_of_rows(rows, dim)


def restrict(op: Matrix, space: LinearSubspace) -> Matrix | None:
    """Matrix of op on an invariant subspace in its echelon basis, or None if not invariant."""
    cols = []
    for b in space.basis:
        w = op.apply(b)
        coords = [w[p] for p in space.pivots]
        rebuilt = [sum((c * row[j] for c, row in zip(coords, space.basis)), Fraction(0)) for j in range(space.ambient)]
        if any(simplify(x - y) for x, y in zip(rebuilt, w)):
            return None
        cols.append(coords)
    return Matrix.from_columns(cols) if cols else Matrix([], 0)

