"""Claim registry, runner and exporters."""
from __future__ import annotations

from typing import Sequence

from .registry import (
    ERROR,
    GOLDEN,
    OUT_OF_SCOPE,
    REFUTED,
    STATUSES,
    VERIFIED,
    Claim,
    ClaimRecord,
    DuplicateClaimError,
    ExportError,
    Outcome,
    Summary,
    export,
    load_json,
    run_claims,
    select,
    to_csv,
    to_json,
    to_text,
)


def registry() -> list[Claim]:
    from .claims import REGISTRY

    return list(REGISTRY)


def run_all(prefix: str | None = None, jobs: int = 1, claims: Sequence[Claim] | None = None) -> Summary:
    """Run every claim whose id starts with prefix."""
    pool = registry() if claims is None else list(claims)
    return run_claims(select(pool, prefix), jobs=jobs)


__all__ = [
    "Claim",
    "ClaimRecord",
    "DuplicateClaimError",
    "ERROR",
    "ExportError",
    "GOLDEN",
    "OUT_OF_SCOPE",
    "Outcome",
    "REFUTED",
    "STATUSES",
    "Summary",
    "VERIFIED",
    "export",
    "load_json",
    "registry",
    "run_all",
    "run_claims",
    "select",
    "to_csv",
    "to_json",
    "to_text",
]
