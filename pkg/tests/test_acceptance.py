"""The twelve acceptance criteria, each a group of registry claims.

Run directly (``python tests/test_acceptance.py``) or under pytest; either way
one PASS/FAIL line is printed per criterion.
"""
from __future__ import annotations

import sys

import pytest

from g2torsion.report import GOLDEN, VERIFIED, run_all

CRITERIA: dict[int, tuple[str, tuple[str, ...]]] = {
    1: ("g2 has dimension 14 and annihilates psi_1", ("C02-g2-dimension",)),
    2: ("invariant spinor and Lambda^3_27 dimension tables", ("C02-spinor-table", "C02-forms27-table")),
    3: ("printed Lambda^3_27 generators span the computed spaces", (
        "C02-generators-su3", "C02-generators-u2", "C02-generators-suc2", "C02-generators-r1_suc2",
        "C02-generators-su2_suc2", "C02-generators-so3")),
    4: ("admissible torsion sets", (
        "C02-tor-su3", "C02-tor-su3-lines", "C02-tor-u2", "C02-tor-su2", "C02-tor-su2-eigenspinors", "C02-tor-suc2",
        "C02-tor-r1-suc2", "C02-tor-su2-suc2", "C02-tor-so3", "C02-tor-so3-w27", "C02-tor-so3-ir")),
    5: ("torsion eigenvalues on invariant spinors", (
        "C04-sasaki-eigenvalues", "C04-sigma-eigenvalues", "C05-eigen-opposite", "C05-eigen-equal",
        "C03-phi-distinct", "C03-phi-eigenvalues")),
    6: ("scalar curvatures", ("C04-sigma-scal", "C05-scal-opposite")),
    7: ("Ricci tensors", (
        "C04-sasaki-ricci", "C04-sasaki-ricci-char", "C04-sigma-ricci", "C05-ricci-opposite", "C05-ricci-equal",
        "C06-ricci", "C07-stiefel-ricci", "C09-ricci")),
    8: ("Bianchi solution families", (
        "C07-pair-symmetry", "C07-branch-d-4c", "C07-branch-d3c", "C07-branches-complete", "C08-suc2-branch-flat",
        "C08-suc2-branch-5a+b", "C08-suc2-branches-complete", "C08-r1-pair-symmetry", "C08-r1-p", "C08-r1-r",
        "C09-bianchi", "C09-bianchi-branch")),
    9: ("the curve 5a^2 + ab = 4", ("C09-curve",)),
    10: ("reductive Lie algebras", (
        "C07-jacobi-so3", "C07-jacobi-su3", "C07-jacobi-u2", "C07-jacobi-su2", "C08-jacobi-so3ir", "C08-jacobi-suc2",
        "C08-jacobi-r1-suc2", "C09-jacobi", "C08-algebra-perfect", "C08-algebra-radical",
        "C08-algebra-radical-derived", "C07-stiefel-algebra")),
    11: ("property suites", ("P-clifford", "P-antiderivation", "P-lambda3-split", "P-spin-vector")),
    12: ("eigenvalue and scalar curvature agree", tuple(f"C01-quarter-identity-{k}" for k in range(1, 6))),
}

RESULTS: dict[int, str] = {}


def judge(summary, n: int) -> tuple[bool, str, list[str]]:
    title, ids = CRITERIA[n]
    bad = []
    for cid in ids:
        rec = summary.by_id(cid)
        if rec.status not in (VERIFIED, GOLDEN):
            bad.append(f"{cid}: {rec.status}; computed {rec.computed}; expected {rec.expected}")
    line = f"{'PASS' if not bad else 'FAIL'} criterion {n:>2}: {title} ({len(ids) - len(bad)}/{len(ids)} claims)"
    return not bad, line, bad


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(full_summary, n):
    ok, line, bad = judge(full_summary, n)
    RESULTS[n] = line
    print(line)
    assert ok, "\n".join(bad)


def main() -> int:
    summary = run_all()
    failed = 0
    for n in sorted(CRITERIA):
        ok, line, bad = judge(summary, n)
        print(line)
        for b in bad:
            print("    " + b)
        failed += not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
