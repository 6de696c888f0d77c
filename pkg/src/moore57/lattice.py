"""The integer null lattice of the shared block matrix M.

M has rank 19, so its null space has dimension 8.  An integer basis is
given by the Kronecker products e_i (x) e_j (x) e_k with i, j, k in {1, 2},
where e_1 = (1, 0, -1) and e_2 = (0, 1, -1).  Coefficients against this
basis are written (a, b, c, d, a', b', c', d') in the order
(111, 112, 121, 122, 211, 212, 221, 222).
"""

from __future__ import annotations

from functools import lru_cache

COEFFICIENT_NAMES = ("a", "b", "c", "d", "a'", "b'", "c'", "d'")

_EPS = ((1, 0, -1), (0, 1, -1))

# Rows of the basis matrix that carry a plain 8x8 identity; reading a null
# vector at these positions recovers its coefficients directly.
_UNIT_ROWS = (0, 1, 3, 4, 9, 10, 12, 13)


class NotInNullSpace(ValueError):
    pass


def _kron(u, v):
    return tuple(a * b for a in u for b in v)


@lru_cache(maxsize=1)
def null_basis() -> tuple:
    """The 8 basis vectors, each 27 entries, in coefficient order."""
    return tuple(
        _kron(_kron(_EPS[i], _EPS[j]), _EPS[k])
        for i in (0, 1)
        for j in (0, 1)
        for k in (0, 1)
    )


@lru_cache(maxsize=1)
def functional_rows() -> tuple:
    """Row i gives the 8 coefficients of entry i of an expanded null vector.

    These are the 27 affine functionals bounding any solution written as
    base + lattice vector; entry 8 (0-based) is a+b+c+d and entry 26 is
    minus the full coefficient sum.
    """
    basis = null_basis()
    return tuple(tuple(basis[j][i] for j in range(8)) for i in range(27))


def expand(n) -> tuple:
    """The 27-entry lattice vector with coefficients n."""
    if len(n) != 8:
        raise ValueError(f"need 8 coefficients, got {len(n)}")
    rows = functional_rows()
    return tuple(sum(r[j] * n[j] for j in range(8)) for r in rows)


def coefficients_of(v) -> tuple:
    """Inverse of expand on the lattice; raises NotInNullSpace otherwise."""
    if len(v) != 27:
        raise ValueError(f"need a 27-entry vector, got {len(v)}")
    n = tuple(v[i] for i in _UNIT_ROWS)
    if expand(n) != tuple(v):
        raise NotInNullSpace("vector is not in the null lattice of M")
    return n


def exact_rank(matrix) -> int:
    """Rank by fraction-free integer elimination (no floating point)."""
    m = [list(row) for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pval = m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col] != 0:
                f = m[i][col]
                m[i] = [pval * a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank
