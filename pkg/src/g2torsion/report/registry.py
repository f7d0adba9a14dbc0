"""Claim records, the concurrent runner and the report exporters."""
from __future__ import annotations

import csv
import io
import json
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

VERIFIED = "verified"
REFUTED = "refuted"
OUT_OF_SCOPE = "out-of-scope"
GOLDEN = "golden-recorded"
ERROR = "error"
STATUSES = (VERIFIED, REFUTED, OUT_OF_SCOPE, GOLDEN, ERROR)

PROVENANCES = ("PRINTED", "TRIVIAL", "DERIVED")
COLUMNS = ("id", "anchor", "status", "computed", "expected", "provenance", "millis")


@dataclass(frozen=True)
class Outcome:
    """What a check returns: serialized values and whether they agree."""

    computed: str
    expected: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    provenance: str
    check: Callable[[], Outcome] | None = None
    golden: bool = False

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"{self.id}: unknown provenance {self.provenance!r}")
        if self.check is None and self.golden:
            raise ValueError(f"{self.id}: a golden value needs a check")


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    anchor: str
    status: str
    computed: str
    expected: str
    provenance: str
    millis: float
    detail: str = ""

    def row(self) -> dict:
        d = asdict(self)
        d.pop("detail")
        d["millis"] = round(self.millis, 3)
        return d


@dataclass
class Summary:
    records: list[ClaimRecord] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.records)

    @property
    def refuted(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.status == REFUTED]

    @property
    def errors(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.status == ERROR]

    @property
    def exit_code(self) -> int:
        if self.errors:
            return 2
        return 1 if self.refuted else 0

    def by_id(self, cid: str) -> ClaimRecord:
        for r in self.records:
            if r.id == cid:
                return r
        raise KeyError(cid)

    def counts(self) -> dict[str, int]:
        return {s: self.count(s) for s in STATUSES}


class DuplicateClaimError(ValueError):
    pass


def check_unique(claims: Iterable[Claim]) -> None:
    seen: set[str] = set()
    for c in claims:
        if c.id in seen:
            raise DuplicateClaimError(c.id)
        seen.add(c.id)


def evaluate(claim: Claim) -> ClaimRecord:
    if claim.check is None:
        return ClaimRecord(claim.id, claim.anchor, OUT_OF_SCOPE, "", "", claim.provenance, 0.0)
    start = time.perf_counter()
    try:
        out = claim.check()
    except Exception as exc:  # a broken check is reported, not raised
        ms = (time.perf_counter() - start) * 1000
        tb = traceback.format_exception_only(type(exc), exc)[-1].strip()
        return ClaimRecord(claim.id, claim.anchor, ERROR, tb, "", claim.provenance, ms, traceback.format_exc())
    ms = (time.perf_counter() - start) * 1000
    if not out.ok:
        status = REFUTED
    else:
        status = GOLDEN if claim.golden else VERIFIED
    return ClaimRecord(claim.id, claim.anchor, status, out.computed, out.expected, claim.provenance, ms, out.detail)


def run_claims(claims: Sequence[Claim], jobs: int = 1) -> Summary:
    check_unique(claims)
    ordered = sorted(claims, key=lambda c: c.id)
    if jobs <= 1:
        records = [evaluate(c) for c in ordered]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(evaluate, ordered))
    return Summary(records)


def select(claims: Iterable[Claim], prefix: str | None) -> list[Claim]:
    return [c for c in claims if not prefix or c.id.startswith(prefix)]


# export ----------------------------------------------------------------------------

def to_json(summary: Summary, with_runtime: bool = True) -> str:
    rows = []
    for r in sorted(summary.records, key=lambda r: r.id):
        row = r.row()
        if not with_runtime:
            row.pop("millis")
        rows.append(row)
    return json.dumps({"claims": rows}, indent=2, ensure_ascii=False) + "\n"


def to_csv(summary: Summary, with_runtime: bool = True) -> str:
    cols = [c for c in COLUMNS if with_runtime or c != "millis"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in sorted(summary.records, key=lambda r: r.id):
        row = r.row()
        w.writerow({k: row[k] for k in cols})
    return buf.getvalue()


def to_text(summary: Summary, verbose: bool = False) -> str:
    lines = []
    for r in summary.records:
        lines.append(f"{r.status:<16} {r.id}")
        if r.status in (REFUTED, ERROR) or verbose:
            if r.computed or r.expected:
                lines.append(f"{'':16}   computed: {r.computed}")
                lines.append(f"{'':16}   expected: {r.expected}")
            if r.detail and r.status in (REFUTED, ERROR):
                for d in r.detail.strip().splitlines()[-6:]:
                    lines.append(f"{'':16}   {d}")
    c = summary.counts()
    lines.append(", ".join(f"{v} {k}" for k, v in c.items()))
    return "\n".join(lines) + "\n"


class ExportError(OSError):
    pass


def export(summary: Summary, fmt: str, path: str | Path) -> Path:
    writers = {"json": to_json, "csv": to_csv, "text": to_text}
    if fmt not in writers:
        raise ValueError(f"unknown format {fmt!r}")
    p = Path(path)
    try:
        p.write_text(writers[fmt](summary), encoding="utf-8")
    except OSError as exc:
        raise ExportError(f"cannot write report to {p}: {exc}") from exc
    return p


def load_json(text: str) -> list[dict]:
    return json.loads(text)["claims"]
