from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2torsion.exterior import (
    PHI,
    STAR_PHI,
    VOLUME,
    FormSyntaxError,
    KForm,
    basis_indices,
    contract,
    format_form,
    hodge_star,
    inner,
    lambda3_split,
    norm_sq,
    parse_form,
    sigma_dT,
    wedge,
)
from g2torsion.report.properties import antiderivation_failures, split_failures

coef = st.fractions(min_value=-5, max_value=5, max_denominator=3)


@st.composite
def forms(draw, k):
    idx = basis_indices(k)
    chosen = draw(st.lists(st.sampled_from(idx), max_size=4, unique=True))
    return KForm(k, {i: draw(coef) for i in chosen})


def test_parse_format_roundtrip():
    f = parse_form("a*(e127 + e347) - 2*e567", 3)
    assert parse_form(format_form(f), 3) == f
    assert parse_form("phi", 3) == PHI
    with pytest.raises(FormSyntaxError):
        parse_form("e12 + e345")


def test_sort_sign():
    assert parse_form("e21", 2) == -parse_form("e12", 2)


def test_phi_norms():
    assert norm_sq(PHI) == 7
    assert wedge(PHI, STAR_PHI) == VOLUME * 7
    assert hodge_star(STAR_PHI) == PHI


@given(forms(2), forms(3))
def test_graded_commutativity(a, b):
    assert wedge(a, b) == wedge(b, a)


@given(forms(3))
def test_star_is_isometry(a):
    assert inner(hodge_star(a), hodge_star(a)) == inner(a, a)
    assert hodge_star(hodge_star(a)) == a


@given(forms(3))
def test_star_and_wedge(a):
    # a ^ *a = |a|^2 vol
    assert wedge(a, hodge_star(a)) == VOLUME * norm_sq(a)


def test_sigma_dT_of_phi():
    assert sigma_dT(PHI) == STAR_PHI * 6


def test_antiderivation_suite():
    assert antiderivation_failures(300, seed=5) == (300, 0)


def test_split_suite():
    assert split_failures(30, seed=5) == (30, 0)


def test_split_of_phi_and_e567():
    s = lambda3_split(PHI)
    assert s.part1 == PHI
    assert all(not c for _, c in s.part7.items()) and all(not c for _, c in s.part27.items())
    t = lambda3_split(PHI - parse_form("7*e567", 3))
    assert all(not c for _, c in t.part1.items())


def test_contract_twice_is_zero():
    for i in range(1, 8):
        assert all(not c for _, c in contract(i, contract(i, PHI)).items())


def test_form_arithmetic():
    a = parse_form("e12", 2)
    assert (a * Fraction(1, 2) + a * Fraction(1, 2)) == a
