"""Rook's-grid oracle for the distance-3 structure.

The distance-3 graph of the degree-57 subgraph is the Cartesian product of
two complete graphs: vertices are cells of an n x n grid and two cells are
"line-mates" exactly when they share a row or a column.  The geometric
facts used to pin block constraints reduce to counting exercises on this
grid, which this module settles by exhaustive scan so the counts are
independent of any cleverness.

Patterns use the block convention (U, V, W) = relations of the pairs
(v,w), (u,w), (u,v), with 3 meaning the pair shares a grid line and 2
meaning it does not.  Distance-1 and -2 structure is not represented here;
the grid only knows who is at distance 3.
"""

from __future__ import annotations

import itertools


class Unrealizable(ValueError):
    """The requested collinearity pattern cannot be placed on the grid."""


MIN_SIDE = 4

Cell = tuple[int, int]


def _check_side(n: int) -> None:
    if n < MIN_SIDE:
        raise ValueError(f"grid side must be at least {MIN_SIDE}, got {n}")


def are_linemates(u: Cell, v: Cell) -> bool:
    return u != v and (u[0] == v[0] or u[1] == v[1])


def place_pattern(n: int, pattern) -> tuple[Cell, Cell, Cell]:
    """Deterministic cells (u, v, w) realizing a collinearity pattern.

    All eight patterns over {2, 3} are realizable once n >= 4; the
    Unrealizable error is reserved for geometry that cannot exist.
    """
    _check_side(n)
    if len(pattern) != 3 or any(p not in (2, 3) for p in pattern):
        raise Unrealizable(f"pattern components must be 2 or 3, got {tuple(pattern)}")
    U, V, W = pattern
    shared = sum(1 for p in (U, V, W) if p == 3)
    if shared == 0:
        u, v, w = (1, 1), (2, 2), (3, 3)
    elif shared == 3:
        u, v, w = (1, 1), (1, 2), (1, 3)
    elif shared == 1:
        # the collinear pair sits on row 1; the third cell avoids both lines
        if U == 3:
            v, w, u = (1, 1), (1, 2), (2, 3)
        elif V == 3:
            u, w, v = (1, 1), (1, 2), (2, 3)
        else:
            u, v, w = (1, 1), (1, 2), (2, 3)
    else:
        # two collinear pairs: their lines are the row and column of the
        # vertex common to both pairs
        if U == 2:  # (u,w) and (u,v) collinear through u
            u, w, v = (1, 1), (1, 2), (2, 1)
        elif V == 2:  # (v,w) and (u,v) collinear through v
            v, w, u = (1, 1), (1, 2), (2, 1)
        else:  # (v,w) and (u,w) collinear through w
            w, v, u = (1, 1), (1, 2), (2, 1)
    placed = (u, v, w)
    got = (
        3 if are_linemates(v, w) else 2,
        3 if are_linemates(u, w) else 2,
        3 if are_linemates(u, v) else 2,
    )
    if got != tuple(pattern):
        raise Unrealizable(f"pattern {tuple(pattern)} not realizable (placed {got})")
    return placed


def common_linemates(n: int, u: Cell, v: Cell, w: Cell) -> int:
    """How many cells share a grid line with each of u, v, w (exhaustive)."""
    _check_side(n)
    if len({u, v, w}) != 3:
        raise ValueError("u, v, w must be three distinct cells")
    count = 0
    for z in itertools.product(range(1, n + 1), repeat=2):
        if z in (u, v, w):
            continue
        if are_linemates(z, u) and are_linemates(z, v) and are_linemates(z, w):
            count += 1
    return count


def pair_candidates(n: int, u: Cell, v: Cell) -> int:
    """How many cells share a grid line with both u and v (exhaustive)."""
    _check_side(n)
    if u == v:
        raise ValueError("u and v must be distinct")
    count = 0
    for z in itertools.product(range(1, n + 1), repeat=2):
        if z in (u, v):
            continue
        if are_linemates(z, u) and are_linemates(z, v):
            count += 1
    return count


def pattern_count(n: int, pattern) -> int:
    """Common line-mates of the deterministic placement of a pattern."""
    return common_linemates(n, *place_pattern(n, pattern))
