# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force sweep over an 8-coefficient integer box.

Visits every assignment in the box and keeps those whose 27 affine
functionals stay inside their bounds.  prune=True rejects a prefix as soon
as a functional with fully assigned support leaves its bounds, which skips
no feasible point; prune=False defers every check to the leaves, the slow
assumption-free mode.  No interval reasoning happens here on purpose: this
is the independent check on the propagation-based enumerator.
"""


def sweep(rows, lower, upper, box_lo, box_hi, bint prune=True):
    """Feasible coefficient tuples, in lexicographic order.

    rows: 27 sequences of 8 small integers (functional coefficients)
    lower/upper: inclusive bounds per functional (upper may be huge)
    box_lo/box_hi: inclusive per-coefficient search range
    """
    cdef long long R[27][8]
    cdef long long L[27]
    cdef long long U[27]
    cdef long long blo[8]
    cdef long long bhi[8]
    cdef long long partial[9][27]
    cdef long long val[8]
    cdef int last_col[27]
    cdef int i, j, d, r
    cdef bint ok

    if len(rows) != 27:
        raise ValueError("need exactly 27 functional rows")
    for i in range(27):
        if len(rows[i]) != 8:
            raise ValueError("each functional row needs 8 coefficients")
        for j in range(8):
            R[i][j] = rows[i][j]
        L[i] = lower[i]
        U[i] = upper[i]
        last_col[i] = -1
        for j in range(8):
            if R[i][j] != 0:
                last_col[i] = j
    for j in range(8):
        blo[j] = box_lo[j]
        bhi[j] = box_hi[j]
        if blo[j] > bhi[j]:
            return []

    # constant functionals never change; settle them once
    for i in range(27):
        if last_col[i] < 0 and not (L[i] <= 0 <= U[i]):
            return []
        partial[0][i] = 0

    results = []
    d = 0
    val[0] = blo[0] - 1
    while d >= 0:
        val[d] += 1
        if val[d] > bhi[d]:
            d -= 1
            continue
        for i in range(27):
            partial[d + 1][i] = partial[d][i] + R[i][d] * val[d]
        if prune:
            ok = True
            for i in range(27):
                if last_col[i] == d:
                    if partial[d + 1][i] < L[i] or partial[d + 1][i] > U[i]:
                        ok = False
                        break
            if not ok:
                continue
        if d == 7:
            ok = True
            for i in range(27):
                if partial[8][i] < L[i] or partial[8][i] > U[i]:
                    ok = False
                    break
            if ok:
                results.append(
                    (val[0], val[1], val[2], val[3], val[4], val[5], val[6], val[7])
                )
            continue
        d += 1
        val[d] = blo[d] - 1
    return results
