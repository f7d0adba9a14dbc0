"""Pure-Python fraction-free Gauss-Jordan elimination over the integers."""
from __future__ import annotations

from math import gcd


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def rref_integer(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduce integer rows to fraction-free reduced echelon form.

    Every returned row is primitive with a positive pivot, and each pivot
    column is zero outside its pivot row. Dividing a row by its pivot gives
    the rational RREF. The input list is not modified.
    """
    work = [_primitive(list(r)) for r in rows if any(r)]
    nrows = len(work)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = work[i][c]
            if v:
                av = -v if v < 0 else v
                if best < 0 or av < best_abs:
                    best, best_abs = i, av
                    if av == 1:
                        break
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = work[r]
        if prow[c] < 0:
            prow = [-v for v in prow]
            work[r] = prow
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = work[i]
            x = row[c]
            if not x:
                continue
            g = gcd(pv, x)
            a = pv // g
            b = x // g
            work[i] = _primitive([a * row[j] - b * prow[j] for j in range(ncols)])
        pivots.append(c)
        r += 1
    return work[:r], pivots
