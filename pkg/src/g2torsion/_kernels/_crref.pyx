# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free Gauss-Jordan elimination over the integers.

Same contract as the pure-Python twin in ``_pyrref``. Entries stay Python
integers (arbitrary precision); the speedup comes from typed loop indices,
direct list access, and a machine-word fast path for the row update.
"""
from math import gcd


cdef list _primitive(list row):
    cdef Py_ssize_t j, n = len(row)
    cdef object g = 0
    cdef object v
    for j in range(n):
        v = row[j]
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


cdef list _combine(list row, list prow, object a, object b, Py_ssize_t ncols):
    # a*row - b*prow; below 2^31 each product fits in 62 bits, so the difference cannot overflow
    cdef Py_ssize_t j
    cdef long long la, lb, x, y
    cdef list out = [0] * ncols
    if -2147483648 < a < 2147483648 and -2147483648 < b < 2147483648:
        la = a
        lb = b
        for j in range(ncols):
            xo = row[j]
            yo = prow[j]
            if -2147483648 < xo < 2147483648 and -2147483648 < yo < 2147483648:
                x = xo
                y = yo
                out[j] = la * x - lb * y
            else:
                out[j] = a * xo - b * yo
        return out
    for j in range(ncols):
        out[j] = a * row[j] - b * prow[j]
    return out


def rref_integer(rows, Py_ssize_t ncols):
    cdef list work = [_primitive(list(src)) for src in rows if any(src)]
    cdef Py_ssize_t nrows = len(work)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, best
    cdef object v, av, best_abs, pv, x, g
    cdef list prow, row
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = (<list>work[i])[c]
            if v:
                av = -v if v < 0 else v
                if best < 0 or av < best_abs:
                    best = i
                    best_abs = av
                    if av == 1:
                        break
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = <list>work[r]
        if prow[c] < 0:
            prow = [-v for v in prow]
            work[r] = prow
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>work[i]
            x = row[c]
            if not x:
                continue
            g = gcd(pv, x)
            work[i] = _primitive(_combine(row, prow, pv // g, x // g, ncols))
        pivots.append(c)
        r += 1
    return work[:r], pivots
