# cython: language_level=3
"""Compiled twin of ``leibniz_lab._kernel.pure``.

Entries stay Python ints (arbitrary precision); Cython removes the
interpreter loop overhead around them. Keep the algorithms identical to
the pure module.
"""

from math import gcd


cdef void _strip_content(list row):
    cdef Py_ssize_t i, n = len(row)
    g = 0
    for i in range(n):
        x = row[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i in range(n):
            x = row[i]
            if x:
                row[i] = x // g


def rref_int(rows, Py_ssize_t ncols):
    """Reduced row echelon form of an integer matrix (see pure twin)."""
    cdef list work = [list(row0) for row0 in rows if any(row0)]
    cdef Py_ssize_t nrows = len(work)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, t, cc, i, j, best, ci
    cdef list prow, trow, irow, row
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        bestabs = 0
        for t in range(r, nrows):
            v = (<list>work[t])[c]
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < bestabs:
                    best = t
                    bestabs = a
                    if a == 1:
                        break
        if best < 0:
            continue
        if best != r:
            work[r], work[best] = work[best], work[r]
        prow = <list>work[r]
        piv = prow[c]
        for t in range(r + 1, nrows):
            trow = <list>work[t]
            v = trow[c]
            if v:
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                if a == 1:
                    for cc in range(c, ncols):
                        trow[cc] = trow[cc] - b * prow[cc]
                else:
                    for cc in range(c, ncols):
                        trow[cc] = a * trow[cc] - b * prow[cc]
                _strip_content(trow)
        pivots.append(c)
        r += 1
    del work[r:]
    for i in range(r - 1, -1, -1):
        ci = pivots[i]
        irow = <list>work[i]
        piv = irow[ci]
        for t in range(i):
            trow = <list>work[t]
            v = trow[ci]
            if v:
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                if a == 1:
                    for cc in range(ci, ncols):
                        trow[cc] = trow[cc] - b * irow[cc]
                else:
                    for cc in range(ncols):
                        trow[cc] = a * trow[cc] - b * irow[cc]
                _strip_content(trow)
    denoms = []
    for i in range(r):
        row = <list>work[i]
        if row[pivots[i]] < 0:
            for j in range(ncols):
                x = row[j]
                if x:
                    row[j] = -x
        denoms.append(row[pivots[i]])
    return pivots, work, denoms


def bareiss_det_int(rows):
    """Determinant of a square integer matrix via Bareiss elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list m = [list(r) for r in rows]
    cdef int sign = 1
    cdef Py_ssize_t k, i, j, t
    cdef list krow, irow
    prev = 1
    for k in range(n - 1):
        if (<list>m[k])[k] == 0:
            for t in range(k + 1, n):
                if (<list>m[t])[k]:
                    m[k], m[t] = m[t], m[k]
                    sign = -sign
                    break
            else:
                return 0
        krow = <list>m[k]
        pk = krow[k]
        for i in range(k + 1, n):
            irow = <list>m[i]
            mik = irow[k]
            for j in range(k + 1, n):
                irow[j] = (pk * irow[j] - mik * krow[j]) // prev
            irow[k] = 0
        prev = pk
    return sign * (<list>m[n - 1])[n - 1]
