"""Exterior algebra of R^7 with rational or polynomial coefficients.

Forms are stored over strictly increasing index tuples, which form an
orthonormal basis of each degree. The positive orientation is e1^...^e7.
"""
from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .exact import (
    Coeff,
    Matrix,
    PARAMS,
    PolyElement,
    evaluate_expression,
    express_in,
    format_coeff,
    linear_coefficients,
    poly_substitute,
    simplify,
    to_fraction,
    variables,
)

DIM = 7
Index = tuple[int, ...]


@lru_cache(maxsize=None)
def basis_indices(k: int) -> tuple[Index, ...]:
    """Increasing k-tuples of 1..7 in lexicographic order (the coordinate order)."""
    return tuple(combinations(range(1, DIM + 1), k))


@lru_cache(maxsize=None)
def _position(k: int) -> dict[Index, int]:
    return {t: n for n, t in enumerate(basis_indices(k))}


PAIRS = basis_indices(2)
TRIPLES = basis_indices(3)


def sort_sign(indices: Iterable[int]) -> tuple[int, Index]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    t = list(indices)
    if len(set(t)) != len(t):
        return 0, ()
    sign = 1
    for i in range(len(t)):
        for j in range(len(t) - 1 - i):
            if t[j] > t[j + 1]:
                t[j], t[j + 1] = t[j + 1], t[j]
                sign = -sign
    return sign, tuple(t)


class KForm:
    """A homogeneous exterior form of fixed degree on R^7."""

    __slots__ = ("grade", "_coeffs")

    def __init__(self, grade: int, coeffs: Mapping[Iterable[int], Coeff] | None = None):
        if grade < 0:
            raise ValueError(f"grade {grade} out of range")
        self.grade = grade
        acc: dict[Index, Coeff] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != grade or any(not 1 <= i <= DIM for i in idx):
                raise ValueError(f"index {idx} does not fit a {grade}-form on R^7")
            sign, key = sort_sign(idx)
            if not sign or not c:
                continue
            acc[key] = acc.get(key, 0) + (c if sign > 0 else -c)
        self._coeffs = {k: simplify(v) for k, v in sorted(acc.items()) if v}

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls, grade: int) -> "KForm":
        return cls(grade)

    @classmethod
    def basis(cls, *indices: int) -> "KForm":
        return cls(len(indices), {indices: 1})

    @classmethod
    def from_vector(cls, grade: int, vec: Iterable[Coeff]) -> "KForm":
        vec = list(vec)
        idx = basis_indices(grade)
        if len(vec) != len(idx):
            raise ValueError("vector length does not match the form degree")
        return cls(grade, dict(zip(idx, vec)))

    # access ---------------------------------------------------------------
    @property
    def coeffs(self) -> dict[Index, Coeff]:
        return dict(self._coeffs)

    def items(self) -> Iterator[tuple[Index, Coeff]]:
        return iter(self._coeffs.items())

    def __getitem__(self, idx: Iterable[int]) -> Coeff:
        sign, key = sort_sign(idx)
        if not sign:
            return Fraction(0)
        c = self._coeffs.get(key, Fraction(0))
        return c if sign > 0 else -c

    def to_vector(self) -> tuple[Coeff, ...]:
        return tuple(self._coeffs.get(t, Fraction(0)) for t in basis_indices(self.grade))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def parameters(self) -> tuple[str, ...]:
        used = {n for c in self._coeffs.values() for n in variables(c)}
        return tuple(n for n in PARAMS if n in used)

    def is_parameter_free(self) -> bool:
        return not any(isinstance(c, PolyElement) for c in self._coeffs.values())

    # linear structure -----------------------------------------------------
    def _check(self, other: "KForm") -> None:
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if other.grade != self.grade and other._coeffs and self._coeffs:
            raise ValueError(f"cannot add forms of degree {self.grade} and {other.grade}")

    def __add__(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm):
            return NotImplemented
        self._check(other)
        grade = self.grade if self._coeffs or not other._coeffs else other.grade
        acc = dict(self._coeffs)
        for k, v in other._coeffs.items():
            acc[k] = acc.get(k, 0) + v
        return KForm(grade, acc)

    def __sub__(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.grade, {k: -v for k, v in self._coeffs.items()})

    def __mul__(self, c: Coeff) -> "KForm":
        if isinstance(c, KForm):
            return NotImplemented
        if isinstance(c, int):
            c = Fraction(c)
        return KForm(self.grade, {k: c * v for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> "KForm":
        return self * (1 / to_fraction(c))

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def substitute(self, bindings: Mapping[str, Coeff]) -> "KForm":
        return KForm(self.grade, {k: poly_substitute(v, bindings) for k, v in self._coeffs.items()})

    def linear_parts(self, names: tuple[str, ...]) -> tuple[dict[str, "KForm"], "KForm"]:
        """Split a form linear in ``names`` into per-parameter forms and the rest."""
        parts: dict[str, dict[Index, Coeff]] = {n: {} for n in names}
        rest: dict[Index, Coeff] = {}
        for k, v in self._coeffs.items():
            lin, r = linear_coefficients(v, names)
            for n, c in lin.items():
                if c:
                    parts[n][k] = c
            if r:
                rest[k] = r
        return {n: KForm(self.grade, d) for n, d in parts.items()}, KForm(self.grade, rest)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, KForm):
            if not self._coeffs and not other._coeffs:
                return True
            return self.grade == other.grade and self._coeffs == other._coeffs
        if other == 0:
            return not self._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.grade, tuple(self._coeffs.items())))

    def __str__(self) -> str:
        return format_form(self)

    def __repr__(self) -> str:
        return f"KForm({self.grade}, {format_form(self)!r})"


def e(*indices: int) -> KForm:
    """Basis monomial: ``e(1, 2, 7)`` is e127."""
    return KForm.basis(*indices)


def wedge(alpha: KForm, beta: KForm) -> KForm:
    grade = alpha.grade + beta.grade
    if grade > DIM:
        return KForm(grade)
    acc: dict[Index, Coeff] = {}
    for i, x in alpha.items():
        for j, y in beta.items():
            sign, key = sort_sign(i + j)
            if sign:
                acc[key] = acc.get(key, 0) + (x * y if sign > 0 else -(x * y))
    return KForm(grade, acc)


def contract(v: int, alpha: KForm) -> KForm:
    """Interior product e_v _| alpha."""
    if alpha.grade == 0:
        return KForm(0)
    acc: dict[Index, Coeff] = {}
    for idx, c in alpha.items():
        if v in idx:
            pos = idx.index(v)
            rest = idx[:pos] + idx[pos + 1:]
            acc[rest] = acc.get(rest, 0) + (c if pos % 2 == 0 else -c)
    return KForm(alpha.grade - 1, acc)


def contract_vector(vec: Iterable[Coeff], alpha: KForm) -> KForm:
    """Interior product with a general vector given by coordinates."""
    out = KForm(max(alpha.grade - 1, 0))
    for i, c in enumerate(vec, start=1):
        if c:
            out = out + c * contract(i, alpha)
    return out


def hodge_star(alpha: KForm) -> KForm:
    acc: dict[Index, Coeff] = {}
    full = set(range(1, DIM + 1))
    for idx, c in alpha.items():
        comp = tuple(sorted(full - set(idx)))
        sign, _ = sort_sign(idx + comp)
        acc[comp] = c if sign > 0 else -c
    return KForm(DIM - alpha.grade, acc)


def inner(alpha: KForm, beta: KForm) -> Coeff:
    if alpha.grade != beta.grade and alpha and beta:
        return Fraction(0)
    acc: Coeff = Fraction(0)
    bc = beta.coeffs
    for k, x in alpha.items():
        y = bc.get(k)
        if y is not None:
            acc = acc + x * y
    return simplify(acc)


def norm_sq(alpha: KForm) -> Coeff:
    return inner(alpha, alpha)


def sigma_dT(T: KForm) -> KForm:
    """Sum over i of (e_i _| T) ^ (e_i _| T)."""
    if T.grade != 3:
        raise ValueError("sigma_dT expects a 3-form")
    out = KForm(4)
    for i in range(1, DIM + 1):
        c = contract(i, T)
        if c:
            out = out + wedge(c, c)
    return out


# the G2 form and friends ----------------------------------------------------

PHI = KForm(3, {(1, 2, 7): 1, (1, 3, 5): 1, (1, 4, 6): -1, (2, 3, 6): -1, (2, 4, 5): -1, (3, 4, 7): 1, (5, 6, 7): 1})
STAR_PHI = hodge_star(PHI)
F = KForm(2, {(1, 2): 1, (3, 4): 1, (5, 6): 1})
SIGMA = KForm(3, {(1, 3, 5): 1, (1, 4, 6): -1, (2, 3, 6): -1, (2, 4, 5): -1})
E7 = e(7)
VOLUME = KForm(7, {tuple(range(1, 8)): 1})


def phi() -> KForm:
    return PHI


def star_phi() -> KForm:
    return STAR_PHI


# Lambda^3 = Lambda^3_1 + Lambda^3_7 + Lambda^3_27 ----------------------------

def _projector(spanning: list[tuple[Fraction, ...]]) -> Matrix:
    """Orthogonal projector onto the span of independent rational vectors."""
    n = len(spanning[0])
    gram = [[sum(x * y for x, y in zip(u, w)) for w in spanning] for u in spanning]
    cols = []
    for j in range(n):
        rhs = [u[j] for u in spanning]
        coef = express_in([list(r) for r in zip(*gram)], rhs)
        cols.append([sum(c * u[i] for c, u in zip(coef, spanning)) for i in range(n)])
    return Matrix([list(r) for r in zip(*cols)])


@lru_cache(maxsize=None)
def lambda3_projectors() -> tuple[Matrix, Matrix, Matrix]:
    """Projection matrices (on Lambda^3 coordinates) onto the 1, 7 and 27 parts."""
    p1 = _projector([tuple(to_fraction(x) for x in PHI.to_vector())])
    l7 = [tuple(to_fraction(x) for x in contract(i, STAR_PHI).to_vector()) for i in range(1, DIM + 1)]
    p7 = _projector(l7)
    ident = Matrix.identity(len(TRIPLES))
    return p1, p7, ident - p1 - p7


@dataclass(frozen=True)
class Lambda3Split:
    part1: KForm
    part7: KForm
    part27: KForm

    def reconstruct(self) -> KForm:
        return self.part1 + self.part7 + self.part27


def lambda3_split(alpha: KForm) -> Lambda3Split:
    if alpha.grade != 3 and alpha:
        raise ValueError("lambda3_split expects a 3-form")
    vec = KForm(3, alpha.coeffs).to_vector()
    parts = [KForm.from_vector(3, p.apply(vec)) for p in lambda3_projectors()]
    return Lambda3Split(*parts)


def lambda3_component_basis(which: int) -> tuple[KForm, ...]:
    """A rational spanning basis of Lambda^3_1, Lambda^3_7 or Lambda^3_27."""
    if which == 1:
        return (PHI,)
    if which == 7:
        return tuple(contract(i, STAR_PHI) for i in range(1, DIM + 1))
    if which == 27:
        from .exact import LinearSubspace
        p27 = lambda3_projectors()[2]
        sub = LinearSubspace.span(p27.rows, len(TRIPLES))
        return tuple(KForm.from_vector(3, v) for v in sub.basis)
    raise ValueError("which must be 1, 7 or 27")


# text notation --------------------------------------------------------------

_BASIS_NAME = re.compile(r"^e([1-7]+)$")


class _BasisNames(Mapping):
    def __getitem__(self, name: str) -> KForm:
        m = _BASIS_NAME.match(name)
        if not m:
            raise KeyError(name)
        return KForm.basis(*(int(ch) for ch in m.group(1)))

    def __contains__(self, name: object) -> bool:
        return isinstance(name, str) and bool(_BASIS_NAME.match(name))

    def __iter__(self):
        return iter(())

    def __len__(self) -> int:
        return 0


class FormSyntaxError(ValueError):
    pass


def parse_form(text: str, grade: int | None = None) -> KForm:
    """Parse notation such as ``"4*e127 - 3*e135 + (2*a + c)*e567"``.

    ``e`` followed by digits is a basis monomial (digits need not be sorted;
    ``e21 = -e12``). Coefficients may be rationals or polynomials in the
    fixed parameters. A lone scalar is a 0-form. ``phi``, ``star_phi``,
    ``F``, ``Sigma`` name the standard forms.
    """
    names = _BasisNames()
    extra = {"phi": PHI, "star_phi": STAR_PHI, "F": F, "Sigma": SIGMA}
    merged = _MergedNames(names, extra)
    try:
        value = evaluate_expression(text, merged)
    except ValueError as exc:
        raise FormSyntaxError(str(exc)) from None
    except TypeError as exc:
        raise FormSyntaxError(f"ill-formed form expression {text!r}: {exc}") from None
    if not isinstance(value, KForm):
        value = KForm(0, {(): value}) if value else KForm(grade or 0)
    if grade is not None and value and value.grade != grade:
        raise FormSyntaxError(f"expected a {grade}-form, got degree {value.grade}")
    if grade is not None and not value:
        value = KForm(grade)
    return value


class _MergedNames(Mapping):
    def __init__(self, basis: _BasisNames, extra: dict):
        self._basis = basis
        self._extra = extra

    def __getitem__(self, name):
        if name in self._extra:
            return self._extra[name]
        return self._basis[name]

    def __contains__(self, name):
        return name in self._extra or name in self._basis

    def __iter__(self):
        return iter(self._extra)

    def __len__(self):
        return len(self._extra)


def format_form(alpha: KForm) -> str:
    """Canonical text such as ``4*e127 - 3*e135 + (2*a + c)*e567``."""
    if not alpha:
        return "0"
    parts: list[str] = []
    for idx, c in alpha.items():
        name = "e" + "".join(map(str, idx)) if idx else ""
        text = format_coeff(c)
        negative = False
        if isinstance(c, PolyElement):
            body = f"({text})"
        else:
            f = to_fraction(c)
            negative = f < 0
            body = format_coeff(-f if negative else f)
        if not name:
            term = body
        elif body == "1":
            term = name
        else:
            term = f"{body}*{name}"
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(parts)
