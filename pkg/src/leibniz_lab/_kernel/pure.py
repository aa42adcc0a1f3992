"""Pure-Python integer row-reduction kernels.

These are the hot loops under the whole exact linear algebra layer:
reduced row echelon form and Bareiss determinants over arbitrary-precision
integers. ``_speedups.pyx`` is the compiled twin; the two must stay in
lockstep (the backend parity test compares them on random inputs).
"""

from math import gcd


def _strip_content(row):
    # Divide out the gcd of the entries, keeping the row direction.
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i, x in enumerate(row):
            if x:
                row[i] = x // g


def rref_int(rows, ncols):
    """Reduced row echelon form of an integer matrix.

    ``rows`` is a list of equal-length integer lists (not mutated). Returns
    ``(pivot_cols, out_rows, denoms)``: row ``i`` of the rational RREF is
    ``out_rows[i] / denoms[i]`` with ``denoms[i] > 0`` and
    ``out_rows[i][pivot_cols[i]] == denoms[i]``. Zero rows are dropped.
    """
    work = [list(r) for r in rows if any(r)]
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # Smallest nonzero pivot keeps intermediate entries small.
        best = -1
        bestabs = 0
        for t in range(r, nrows):
            v = work[t][c]
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
        prow = work[r]
        piv = prow[c]
        for t in range(r + 1, nrows):
            trow = work[t]
            v = trow[c]
            if v:
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                if a == 1:
                    for cc in range(c, ncols):
                        trow[cc] -= b * prow[cc]
                else:
                    for cc in range(c, ncols):
                        trow[cc] = a * trow[cc] - b * prow[cc]
                _strip_content(trow)
        pivots.append(c)
        r += 1
    del work[r:]
    for i in range(r - 1, -1, -1):
        ci = pivots[i]
        irow = work[i]
        piv = irow[ci]
        for t in range(i):
            trow = work[t]
            v = trow[ci]
            if v:
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                if a == 1:
                    for cc in range(ci, ncols):
                        trow[cc] -= b * irow[cc]
                else:
                    # irow is zero left of ci, but trow still picks up the a-scale there.
                    for cc in range(ncols):
                        trow[cc] = a * trow[cc] - b * irow[cc]
                _strip_content(trow)
    denoms = []
    for i in range(r):
        row = work[i]
        if row[pivots[i]] < 0:
            for j, x in enumerate(row):
                if x:
                    row[j] = -x
        denoms.append(row[pivots[i]])
    return pivots, work, denoms


def bareiss_det_int(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for t in range(k + 1, n):
                if m[t][k]:
                    m[k], m[t] = m[t], m[k]
                    sign = -sign
                    break
            else:
                return 0
        krow = m[k]
        pk = krow[k]
        for i in range(k + 1, n):
            irow = m[i]
            mik = irow[k]
            for j in range(k + 1, n):
                irow[j] = (pk * irow[j] - mik * krow[j]) // prev
            irow[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]
