from __future__ import annotations

import csv
import io
import json
import time

import pytest

from g2torsion.report import (
    ERROR,
    GOLDEN,
    OUT_OF_SCOPE,
    REFUTED,
    VERIFIED,
    Claim,
    DuplicateClaimError,
    ExportError,
    Outcome,
    export,
    load_json,
    registry,
    run_all,
    run_claims,
    to_csv,
    to_json,
    to_text,
)
from g2torsion.report.claims import SPINOR_TABLE, table_check

def ok_check():
    return Outcome("1", "1", True)

def test_ids_unique_and_prefixed():
    ids = [c.id for c in registry()]
    assert len(ids) == len(set(ids))
    assert all(i[0] in "CP" for i in ids)
    assert all(c.anchor for c in registry())

def test_every_status_reachable(full_summary):
    c = full_summary.counts()
    assert c[VERIFIED] >= 90 and c[GOLDEN] >= 5 and c[OUT_OF_SCOPE] >= 10
    assert c[ERROR] == 0

def test_only_known_refutation(full_summary):
    assert [r.id for r in full_summary.refuted] == ["C08-r1-r"]
    assert full_summary.exit_code == 1
    assert "Jacobi" in full_summary.by_id("C08-r1-r").detail

def test_json_roundtrip(full_summary):
    rows = load_json(to_json(full_summary))
    assert [r["id"] for r in rows] == sorted(c.id for c in registry())
    by_id = {c.id: c for c in registry()}
    for r in rows:
        assert r["anchor"] == by_id[r["id"]].anchor
        assert r["provenance"] == by_id[r["id"]].provenance

def test_csv_rows(full_summary):
    text = to_csv(full_summary)
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == len(registry()) + 1
    assert rows[0] == ["id", "anchor", "status", "computed", "expected", "provenance", "millis"]

def test_output_is_deterministic_without_runtime(full_summary):
    again = run_all("C02")
    sub = type(full_summary)([r for r in full_summary.records if r.id.startswith("C02")])
    assert to_json(again, with_runtime=False) == to_json(sub, with_runtime=False)
    assert to_csv(again, with_runtime=False) == to_csv(sub, with_runtime=False)

def test_filter():
    s = run_all("P-")
    assert {r.id for r in s.records} == {"P-clifford", "P-antiderivation", "P-lambda3-split", "P-spin-vector"}
    assert run_all("no-such-prefix").records == []

def test_corrupted_table_is_refuted():
    # a generator table that disagrees in one entry must produce a refutation with a diff
    wrong = dict(SPINOR_TABLE, u2=3)
    from g2torsion.invariants import spinor_dimension_table

    s = run_claims([Claim("X-table", "corrupted", "DERIVED", table_check(spinor_dimension_table, wrong))])
    rec = s.records[0]
    assert rec.status == REFUTED and s.exit_code == 1
    assert "u2" in rec.computed + rec.expected + rec.detail

def test_errors_are_reported():
    def boom():
        raise RuntimeError("broken check")

    s = run_claims([Claim("X-err", "anchor", "DERIVED", boom), Claim("X-ok", "anchor", "TRIVIAL", ok_check)])
    assert s.by_id("X-err").status == ERROR
    assert "broken check" in s.by_id("X-err").computed
    assert s.exit_code == 2
    assert "broken check" in to_text(s)

def test_out_of_scope_and_golden():
    s = run_claims([Claim("X-oos", "not computable", "PRINTED"), Claim("X-g", "recorded", "DERIVED", ok_check, golden=True)])
    assert s.by_id("X-oos").status == OUT_OF_SCOPE and s.by_id("X-g").status == GOLDEN
    assert s.exit_code == 0

def test_claim_validation():
    with pytest.raises(ValueError):
        Claim("X", "a", "GUESS", ok_check)
    with pytest.raises(ValueError):
        Claim("X", "a", "PRINTED", None, golden=True)
    with pytest.raises(DuplicateClaimError):
        run_claims([Claim("X", "a", "PRINTED", ok_check)] * 2)

def test_threads_give_same_records():
    def slow():
        time.sleep(0.01)
        return Outcome("2", "2", True)

    claims = [Claim(f"X-{k:02d}", "a", "TRIVIAL", slow) for k in range(8)]
    a, b = run_claims(claims, jobs=1), run_claims(claims, jobs=4)
    assert to_json(a, with_runtime=False) == to_json(b, with_runtime=False)

def test_export(tmp_path, full_summary):
    p = export(full_summary, "json", tmp_path / "r.json")
    assert len(json.loads(p.read_text())["claims"]) == len(registry())
    with pytest.raises(ExportError):
        export(full_summary, "csv", tmp_path / "missing" / "r.csv")
    with pytest.raises(ValueError):
        export(full_summary, "xml", tmp_path / "r.xml")
