"""Randomized and exhaustive identity suites, run as claims."""
from __future__ import annotations

import random
from fractions import Fraction

from ..clifford import SPIN_DIM, gamma, gamma_with_sign, spin_action, vector_operator
from ..exact import LinearSubspace, Matrix, to_fraction
from ..exterior import DIM, PHI, STAR_PHI, KForm, basis_indices, contract, inner, lambda3_split, wedge
from ..g2lie import CATALOG_NAMES, apply_vector, catalog
from .registry import Outcome


def clifford_identities(sign: int | None = None) -> tuple[int, int]:
    """(checked, failed) over g_i g_j + g_j g_i = -2 delta_ij."""
    gs = [gamma(i) if sign is None else gamma_with_sign(i, sign) for i in range(1, DIM + 1)]
    ident = Matrix.identity(SPIN_DIM)
    zero = Matrix.zeros(SPIN_DIM, SPIN_DIM)
    checked = failed = 0
    for i in range(DIM):
        for j in range(DIM):
            checked += 1
            if gs[i] @ gs[j] + gs[j] @ gs[i] != (ident.scale(-2) if i == j else zero):
                failed += 1
    return checked, failed


def _random_monomial(rng: random.Random, max_grade: int = 4) -> KForm:
    k = rng.randint(0, max_grade)
    idx = tuple(sorted(rng.sample(range(1, DIM + 1), k)))
    return KForm(k, {idx: Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))})


def antiderivation_failures(samples: int = 1000, seed: int = 0) -> tuple[int, int]:
    """v _| (a ^ b) = (v _| a) ^ b + (-1)^deg(a) a ^ (v _| b) on random monomials."""
    rng = random.Random(seed)
    failed = 0
    for _ in range(samples):
        a, b = _random_monomial(rng), _random_monomial(rng)
        v = rng.randint(1, DIM)
        lhs = contract(v, wedge(a, b))
        rhs = wedge(contract(v, a), b) + wedge(a, contract(v, b)) * (-1) ** a.grade
        failed += not _is_zero(lhs - rhs)
    return samples, failed


def _random_three_form(rng: random.Random) -> KForm:
    return KForm(3, {t: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for t in basis_indices(3) if rng.random() < 0.6})


def _is_zero(form: KForm) -> bool:
    return not any(c for _, c in form.items())


def split_failures(samples: int = 100, seed: int = 0) -> tuple[int, int]:
    """The three parts add up to the form and satisfy their defining equations.

    Checked independently of the projectors: the 1-part is <a, phi>/7 phi, the
    27-part is killed by wedging with phi and *phi, and the 7-part lies in
    span{e_i _| *phi}.
    """
    rng = random.Random(seed)
    l7 = LinearSubspace.span([tuple(to_fraction(x) for x in contract(i, STAR_PHI).to_vector()) for i in range(1, DIM + 1)], 35)
    failed = 0
    for _ in range(samples):
        alpha = _random_three_form(rng)
        s = lambda3_split(alpha)
        ok = _is_zero(s.reconstruct() - alpha)
        ok = ok and _is_zero(s.part1 - PHI * (Fraction(to_fraction(inner(alpha, PHI))) / 7))
        ok = ok and _is_zero(wedge(s.part27, PHI)) and _is_zero(wedge(s.part27, STAR_PHI))
        ok = ok and tuple(to_fraction(x) for x in KForm(3, s.part7.coeffs).to_vector()) in l7
        failed += not ok
    return samples, failed


def compatibility_failures() -> tuple[int, int]:
    """[spin(g), e_v] = (g.v) as Clifford multiplication, for every catalog generator and basis vector."""
    checked = failed = 0
    seen = set()
    for name in CATALOG_NAMES:
        for g in catalog(name).generators:
            key = tuple(sorted(g.items()))
            if key in seen:
                continue
            seen.add(key)
            s = spin_action(g)
            for i in range(DIM):
                unit = [Fraction(int(k == i)) for k in range(DIM)]
                lhs = s.commutator(gamma(i + 1))
                rhs = vector_operator(apply_vector(g, unit))
                checked += 1
                failed += lhs != rhs
    return checked, failed


def _as_outcome(result: tuple[int, int], minimum: int) -> Outcome:
    checked, failed = result
    return Outcome(f"{checked} checked, {failed} failed", f">= {minimum} checked, 0 failed", failed == 0 and checked >= minimum)


def check_clifford() -> Outcome:
    return _as_outcome(clifford_identities(), 49)


def check_antiderivation() -> Outcome:
    return _as_outcome(antiderivation_failures(1000), 1000)


def check_split() -> Outcome:
    return _as_outcome(split_failures(100), 100)


def check_compatibility() -> Outcome:
    return _as_outcome(compatibility_failures(), 1)
