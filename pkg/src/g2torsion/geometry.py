"""Ricci tensors and scalar curvature of a parallel torsion form, read off
from a parallel spinor, plus the algebraic consequences along invariant
splittings of R^7.

For parallel torsion dT = sum_i (e_i _| T) ^ (e_i _| T), and
    2 Ric^c(X) . Psi = (X _| dT) . Psi,
    Ric^g = Ric^c + S / 4,   S(X, Y) = sum_i <e_i _| X _| T, e_i _| Y _| T>,
    T^2 . Psi = (2 Scal^g + |T|^2) / 4 . Psi.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .clifford import SPIN_DIM, clifford_action, gamma, psi
from .exact import GENS, Coeff, Matrix, as_poly, parse_poly, simplify, to_fraction
from .exterior import DIM, F, SIGMA, KForm, contract, e, inner, norm_sq, parse_form, sigma_dT, wedge

Block = tuple[int, ...]  # 1-based coordinate indices


class InconsistentRicciError(ArithmeticError):
    """The spinor equation for Ric^c has no solution."""


def _vector_columns(spinor: Sequence[Coeff]) -> list[tuple[Coeff, ...]]:
    return [gamma(i).apply(tuple(spinor)) for i in range(1, DIM + 1)]


def _solve_vector(spinor: Sequence[Coeff], target: Sequence[Coeff]) -> tuple[Coeff, ...]:
    """The vector v with v . spinor = target (unique since v.v.Psi = -|v|^2 Psi)."""
    cols = _vector_columns(spinor)
    rows = [[to_fraction(cols[j][i]) for j in range(DIM)] for i in range(SPIN_DIM)]
    norm = sum((x * x for x in spinor), Fraction(0))
    v = tuple(simplify(sum((rows[i][j] * target[i] for i in range(SPIN_DIM) if rows[i][j]), as_poly(0)) * (1 / norm)) for j in range(DIM))
    # the g_i . Psi are orthogonal of length |Psi|, so v is the orthogonal projection; confirm it
    back = [simplify(sum((v[j] * rows[i][j] for j in range(DIM) if rows[i][j]), as_poly(0))) for i in range(SPIN_DIM)]
    if any(simplify(b - simplify(t)) for b, t in zip(back, target)):
        raise InconsistentRicciError("the spinor equation has no vector solution")
    return v


def ricci_characteristic(T: KForm, spinor: Sequence[Coeff] = None) -> Matrix:
    """Ric^c with rows v_j solving 2 v_j . Psi = (e_j _| dT) . Psi."""
    spinor = tuple(spinor) if spinor is not None else psi(1)
    if not any(spinor):
        raise ValueError("the spinor must be nonzero")
    dT = sigma_dT(T)
    rows = []
    for j in range(1, DIM + 1):
        rhs = clifford_action(contract(j, dT)).apply(spinor)
        rows.append(_solve_vector(spinor, [simplify(x * Fraction(1, 2)) for x in rhs]))
    return Matrix(rows)


def torsion_square(T: KForm) -> Matrix:
    """S(X, Y) = sum_i <e_i _| X _| T, e_i _| Y _| T>, i.e. S_jk = sum_{i,l} T_jil T_kil."""
    contractions = [contract(j, T) for j in range(1, DIM + 1)]
    return Matrix([[_pair(a, b) for b in contractions] for a in contractions])


def _pair(a: KForm, b: KForm) -> Coeff:
    # sum_i <e_i _| a, e_i _| b> = 2 <a, b> for 2-forms
    return simplify(inner(a, b) * 2)


def ricci_riemannian(T: KForm, ric_char: Matrix) -> Matrix:
    return (ric_char + torsion_square(T).scale(Fraction(1, 4))).map(simplify)


def scalar_from_eigen(T: KForm, lam: Coeff) -> Coeff:
    """Scal^g from T . Psi = lam Psi: Scal = (4 lam^2 - |T|^2) / 2."""
    return simplify((as_poly(lam) * lam * 4 - norm_sq(T)) * Fraction(1, 2))


@dataclass(frozen=True)
class RicciData:
    ric_characteristic: Matrix
    ric_riemannian: Matrix
    scal_characteristic: Coeff
    scal_riemannian: Coeff
    blocks: tuple[Block, ...]
    characteristic_values: tuple[Coeff | None, ...]
    riemannian_values: tuple[Coeff | None, ...]


def block_value(m: Matrix, block: Block) -> Coeff | None:
    """c if m restricted to the block is c * Id and m has no entries leaving it."""
    idx = [i - 1 for i in block]
    c = simplify(m[idx[0], idx[0]])
    for i in range(DIM):
        for j in idx:
            want = c if i == j else 0
            if simplify(m[i, j] - want):
                return None
    return c


def ricci_data(T: KForm, blocks: Sequence[Block], spinor: Sequence[Coeff] = None) -> RicciData:
    rc = ricci_characteristic(T, spinor)
    rg = ricci_riemannian(T, rc)
    return RicciData(
        rc,
        rg,
        simplify(rc.trace()),
        simplify(rg.trace()),
        tuple(tuple(b) for b in blocks),
        tuple(block_value(rc, b) for b in blocks),
        tuple(block_value(rg, b) for b in blocks),
    )


# spinor field identities ---------------------------------------------------------

def contraction_factor(T: KForm, j: int, spinor: Sequence[Coeff] = None) -> Coeff | None:
    """mu with (e_j _| T) . Psi = mu e_j . Psi, or None."""
    spinor = tuple(spinor) if spinor is not None else psi(1)
    lhs = clifford_action(contract(j, T)).apply(spinor)
    # e_j . e_j = -1, so mu Psi = -e_j . lhs
    w = gamma(j).apply(lhs)
    return _proportional(tuple(simplify(-x) for x in w), spinor)


def _proportional(w: Sequence[Coeff], v: Sequence[Coeff]) -> Coeff | None:
    k = next(i for i, x in enumerate(v) if x)
    lam = simplify(w[k] * (1 / to_fraction(v[k])))
    if any(simplify(x - lam * y) for x, y in zip(w, v)):
        return None
    return lam


def spinor_field_identities(T: KForm, blocks: Sequence[Block], spinor: Sequence[Coeff] = None) -> dict[Block, Coeff | None]:
    """Per block, the common mu with (X _| T) . Psi = mu X . Psi for X in the block.

    With nabla^c Psi = 0 and nabla^c = nabla^g + (X _| T)/4 this says
    nabla^g_X Psi = -(mu/4) X . Psi.
    """
    out: dict[Block, Coeff | None] = {}
    for b in blocks:
        vals = [contraction_factor(T, j, spinor) for j in b]
        first = vals[0]
        same = first is not None and all(v is not None and not simplify(v - first) for v in vals)
        out[tuple(b)] = first if same else None
    return out


# named torsion forms ---------------------------------------------------------------

SASAKI_TORSION = wedge(F * 2, e(7))  # 2F ^ e7
NEARLY_KAHLER_TORSION = SIGMA
U2_BRANCH_EQUAL = "(2*a + c)*(e127 + e347) + (5*c - 4*a)*e567"  # a + b = c
U2_BRANCH_OPPOSITE = "7/4*c*(e135 - e146 - e236 - e245) + (2*a + c)*(e127 + e347 - 2*e567)"  # 4a + 4b + 3c = 0
SU2_TORSION = "e127 + e347 + e146 + e236 - e135 + e245 - 2*e567"
STIEFEL_TORSION = "7*c*(e127 + e347 + e567)"
SQUASHED_TORSION = "a*phi + b*e567"

E1_U2, E2_U2, E7_U2 = (1, 2, 3, 4), (5, 6), (7,)
E1_SU2, E2_SU2 = (1, 2, 3, 4), (5, 6, 7)


def torsion(text: str) -> KForm:
    return parse_form(text, grade=3)


@dataclass(frozen=True)
class PrintedRicci:
    label: str
    torsion: str
    blocks: tuple[Block, ...]
    characteristic: tuple[str, ...] | None
    riemannian: tuple[str, ...]
    scal_riemannian: str | None = None
    scal_characteristic: str | None = None


PRINTED_RICCI: tuple[PrintedRicci, ...] = (
    PrintedRicci("sasaki", "2*(e127 + e347 + e567)", ((1, 2, 3, 4, 5, 6), (7,)), None, ("10", "6")),
    PrintedRicci(
        "u2-equal",
        U2_BRANCH_EQUAL,
        (E1_U2, E2_U2, E7_U2),
        ("-4*a**2 + 10*a*c + 6*c**2", "-16*a**2 + 12*a*c + 10*c**2", "0"),
        ("-2*a**2 + 12*a*c + 13/2*c**2", "-8*a**2 - 8*a*c + 45/2*c**2", "12*a**2 - 16*a*c + 27/2*c**2"),
        "-12*a**2 + 16*a*c + 169/2*c**2",
        "-48*a**2 + 64*a*c + 44*c**2",
    ),
    PrintedRicci("su2", SU2_TORSION, (E1_SU2, E2_SU2), ("3", "0"), ("9/2", "3")),
    PrintedRicci("stiefel", STIEFEL_TORSION, ((1, 2, 3, 4, 5, 6), (7,)), None, ("5/2*49*c**2", "3/2*49*c**2")),
    PrintedRicci(
        "squashed",
        SQUASHED_TORSION,
        (E1_SU2, E2_SU2),
        ("12*a**2 + 3*a*b", "12*a**2 + 4*a*b"),
        ("27/2*a**2 + 3*a*b", "13*a**2 + 4*a*b + 1/2*(a + b)**2"),
    ),
)


@dataclass(frozen=True)
class RicciComparison:
    label: str
    data: RicciData
    characteristic_ok: bool | None
    riemannian_ok: bool
    scal_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.riemannian_ok and self.characteristic_ok is not False and self.scal_ok is not False


def _equal(x: Coeff | None, text: str) -> bool:
    return x is not None and not simplify(as_poly(x) - as_poly(parse_poly(text)))


def compare_printed_ricci(entry: PrintedRicci) -> RicciComparison:
    data = ricci_data(torsion(entry.torsion), entry.blocks)
    char_ok = None
    if entry.characteristic is not None:
        char_ok = all(_equal(v, t) for v, t in zip(data.characteristic_values, entry.characteristic))
    riem_ok = all(_equal(v, t) for v, t in zip(data.riemannian_values, entry.riemannian))
    scal_ok = None
    if entry.scal_riemannian is not None:
        scal_ok = _equal(data.scal_riemannian, entry.scal_riemannian)
        if entry.scal_characteristic is not None:
            scal_ok = scal_ok and _equal(data.scal_characteristic, entry.scal_characteristic)
    return RicciComparison(entry.label, data, char_ok, riem_ok, scal_ok)


# submersion-type consequences -----------------------------------------------------

def _horizontal_sum(T: KForm, j: int, horizontal: Block, vertical: Block) -> Coeff:
    """sum over i in horizontal, k in vertical of T(e_j, e_i, e_k)^2."""
    acc = as_poly(0)
    for i in horizontal:
        for k in vertical:
            acc += as_poly(_component(T, j, i, k)) ** 2
    return simplify(acc)


def _component(T: KForm, i: int, j: int, k: int) -> Coeff:
    return contract(j, contract(i, T))[(k,)] if len({i, j, k}) == 3 else 0


def base_ricci(T: KForm, ric_g: Matrix, j: int, horizontal: Block, vertical: Block) -> Coeff:
    """Ricci of the base of a submersion with totally geodesic fibres, on e_j.

    Uses Ric_base = Ric + 2 (A_X, A_X) with A_X Y = -T(X, Y, .)/2 projected to the fibre.
    """
    return simplify(ric_g[j - 1, j - 1] + _horizontal_sum(T, j, horizontal, vertical) * Fraction(1, 2))


def leaf_ricci(T: KForm, ric_g: Matrix, j: int, horizontal: Block, vertical: Block) -> Coeff:
    """Ricci of a totally geodesic leaf on e_j, removing sum_i R(e_i, V, V, e_i) = |T(e_i, V, .)|^2 / 4."""
    acc = as_poly(0)
    for i in horizontal:
        for k in range(1, DIM + 1):
            acc += as_poly(_component(T, i, j, k)) ** 2
    return simplify(ric_g[j - 1, j - 1] - acc * Fraction(1, 4))


@dataclass(frozen=True)
class IdentityCheck:
    label: str
    computed: Coeff
    expected: Coeff

    @property
    def ok(self) -> bool:
        return not simplify(as_poly(self.computed) - as_poly(self.expected))


def derived_scalar_identities() -> list[IdentityCheck]:
    out: list[IdentityCheck] = []
    p = parse_poly
    a, c = GENS["a"], GENS["c"]

    # u(2) family on a + b = c
    t5 = torsion(U2_BRANCH_EQUAL)
    d5 = ricci_data(t5, (E1_U2, E2_U2, E7_U2))
    out.append(IdentityCheck("u2 Scal^c is the trace of Ric^c", d5.scal_characteristic, p("-48*a**2 + 64*a*c + 44*c**2")))
    out.append(IdentityCheck("u2 Scal^g on a+b=c", d5.scal_riemannian, p("-12*a**2 + 16*a*c + 169/2*c**2")))
    hor = E1_U2 + E2_U2
    r1 = base_ricci(t5, d5.ric_riemannian, 1, hor, E7_U2)
    r2 = base_ricci(t5, d5.ric_riemannian, 5, hor, E7_U2)
    out.append(IdentityCheck("u2 base Ricci on E1", r1, p("7*c*(2*a + c)")))
    out.append(IdentityCheck("u2 base Ricci on E2", r2, p("7*c*(5*c - 4*a)")))
    s1, s2 = simplify(r1 * 4), simplify(r2 * 2)
    out.append(IdentityCheck("u2 S1", s1, p("28*c*(2*a + c)")))
    out.append(IdentityCheck("u2 S2", s2, p("14*c*(5*c - 4*a)")))
    S = simplify(s1 + s2)
    out.append(IdentityCheck("u2 S = 7*14*c^2", S, p("98*c**2")))
    # a = (5 S1 - 2 S2) / (28 sqrt(2 S)) and c = sqrt(S) / (7 sqrt 2), squared
    out.append(IdentityCheck("u2 inversion for a (squared)", simplify(as_poly(5 * s1 - 2 * s2) ** 2), simplify(a**2 * 784 * 2 * S)))
    out.append(IdentityCheck("u2 inversion for c (squared)", simplify(c**2 * 98), S))
    # de7 = (2a + c) Omega1 + (5c - 4a) Omega2 = (S1/2 Omega1 + S2 Omega2) / sqrt(2 S), squared per block
    out.append(IdentityCheck("u2 de7 on Omega1 (squared)", simplify(as_poly(2 * a + c) ** 2 * 8 * S), simplify(as_poly(s1) ** 2)))
    out.append(IdentityCheck("u2 de7 on Omega2 (squared)", simplify(as_poly(5 * c - 4 * a) ** 2 * 2 * S), simplify(as_poly(s2) ** 2)))

    # Stiefel branch
    ts = torsion(STIEFEL_TORSION)
    ds = ricci_data(ts, ((1, 2, 3, 4, 5, 6), (7,)))
    out.append(IdentityCheck("Stiefel Ric^g on e1..e6", ds.riemannian_values[0], p("5/2*49*c**2")))
    out.append(IdentityCheck("Stiefel Ric^g on e7", ds.riemannian_values[1], p("3/2*49*c**2")))

    # aphi + b e567
    t9 = torsion(SQUASHED_TORSION)
    d9 = ricci_data(t9, (E1_SU2, E2_SU2))
    out.append(IdentityCheck("trace of Ric^c for a*phi + b*e567", d9.scal_characteristic, p("84*a**2 + 24*a*b")))
    out.append(IdentityCheck("E2 block equals (5a+b)^2/2 plus a^2", d9.riemannian_values[1], p("1/2*(5*a + b)**2 + a**2")))
    leaf = leaf_ricci(t9, d9.ric_riemannian, 7, E1_SU2, E2_SU2)
    out.append(IdentityCheck("leaf Ricci", leaf, p("1/2*(5*a + b)**2")))
    out.append(IdentityCheck("leaf Ricci, printed combination", simplify(as_poly(p("12*a**2 + 4*a*b + 1/2*(a + b)**2"))), p("1/2*(5*a + b)**2")))
    out.append(IdentityCheck("leaf sectional curvature", simplify(leaf * Fraction(1, 2)), p("1/4*(5*a + b)**2")))
    mixed = simplify(d9.ric_riemannian[6, 6] - leaf)
    out.append(IdentityCheck("sum_i R(e_i, V, V, e_i)", mixed, p("a**2")))
    out.append(IdentityCheck("Einstein constant of the leaf space", base_ricci(t9, d9.ric_riemannian, 1, E1_SU2, E2_SU2), p("3*a*(5*a + b)")))
    return out
