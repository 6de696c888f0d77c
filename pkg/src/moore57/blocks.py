"""Triple-distance blocks: variable indexing, admissibility, and the linear systems.

A block is the self-contained 27-variable system attached to one triple of
pairwise distances (U, V, W) = (d(v,w), d(u,w), d(u,v)).  The unknown
x(i1, i2, i3) counts vertices at distances i1, i2, i3 from u, v, w.  All
blocks share one 27x27 zero-one coefficient matrix M; only the right-hand
side depends on (U, V, W).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .drg import IntersectionNumbers

Block = tuple[int, int, int]
Triple = tuple[int, int, int]

DISTANCES = (1, 2, 3)


class OutOfRange(ValueError):
    """An index component fell outside {1, 2, 3} (or 1..27 for flat indices)."""


class InadmissibleBlock(ValueError):
    pass


class NegativeRhs(ValueError):
    """A coincidence correction drove a right-hand side negative."""


def var_index(triple: Triple) -> int:
    """Lexicographic position of (i1, i2, i3) among the 27 variables, 1-based."""
    i1, i2, i3 = triple
    if not all(v in DISTANCES for v in triple):
        raise OutOfRange(f"triple components must be in 1..3, got {triple}")
    return 9 * (i1 - 1) + 3 * (i2 - 1) + i3


def var_triple(idx: int) -> Triple:
    """Inverse of var_index."""
    if not 1 <= idx <= 27:
        raise OutOfRange(f"variable index must be in 1..27, got {idx}")
    q, r = divmod(idx - 1, 9)
    s, t = divmod(r, 3)
    return (q + 1, s + 1, t + 1)


def distance_triple_ok(a: int, b: int, c: int) -> bool:
    """Can three pairwise distances of distinct vertices be (a, b, c)?

    Rules out triangle-inequality failures and, because the ambient graph
    has girth 5, the all-ones triple.
    """
    m = max(a, b, c)
    return m <= a + b + c - m and (a, b, c) != (1, 1, 1)


def is_block_admissible(block: Block) -> bool:
    U, V, W = block
    if not all(v in DISTANCES for v in block):
        raise OutOfRange(f"block components must be in 1..3, got {block}")
    return distance_triple_ok(U, V, W)


def canonical_form(block: Block) -> Block:
    """Sorted representative (U >= V >= W) of a block's permutation orbit."""
    return tuple(sorted(block, reverse=True))


def canonical_blocks() -> list[Block]:
    """The 8 sorted admissible blocks: 211, 221, 222, 321, 322, 331, 332, 333."""
    out = []
    for t in itertools.combinations_with_replacement((3, 2, 1), 3):
        if is_block_admissible(t):
            out.append(t)
    return sorted(out)


def admissible_blocks() -> list[Block]:
    """All 23 ordered admissible blocks."""
    return [t for t in itertools.product(DISTANCES, repeat=3) if is_block_admissible(t)]


def block_label(block: Block) -> str:
    return "".join(map(str, block))


def parse_block(label: str) -> Block:
    if len(label) != 3 or not label.isdigit():
        raise OutOfRange(f"block label must be three digits, got {label!r}")
    block = tuple(int(ch) for ch in label)
    if not all(v in DISTANCES for v in block):
        raise OutOfRange(f"block digits must be in 1..3, got {label!r}")
    return block


def coefficient_matrix() -> list[list[int]]:
    """The shared 27x27 matrix M.

    Rows 1-9 sum over i1 for each (i2, i3), rows 10-18 over i2 for each
    (i1, i3), rows 19-27 over i3 for each (i1, i2); the fixed pair runs
    lexicographically within each family.  Every column holds exactly one
    1 per family.
    """
    M = [[0] * 27 for _ in range(27)]
    r = 0
    for i2, i3 in itertools.product(DISTANCES, repeat=2):
        for i1 in DISTANCES:
            M[r][var_index((i1, i2, i3)) - 1] = 1
        r += 1
    for i1, i3 in itertools.product(DISTANCES, repeat=2):
        for i2 in DISTANCES:
            M[r][var_index((i1, i2, i3)) - 1] = 1
        r += 1
    for i1, i2 in itertools.product(DISTANCES, repeat=2):
        for i3 in DISTANCES:
            M[r][var_index((i1, i2, i3)) - 1] = 1
        r += 1
    return M


def build_rhs(block: Block, pnums: IntersectionNumbers) -> list[int]:
    """Right-hand sides for one block, coincidence corrections applied.

    The index-0 unknowns are not variables: x(0, i2, i3) counts the single
    vertex z = u, which contributes exactly when d(u, v) = i2 and
    d(u, w) = i3, i.e. delta(i2, W) * delta(i3, V); likewise z = v and
    z = w for the other two families.  Those known values move to the
    right-hand side.
    """
    if not is_block_admissible(block):
        raise InadmissibleBlock(f"block {block_label(block)} is not admissible")
    U, V, W = block
    rhs = []
    for i2, i3 in itertools.product(DISTANCES, repeat=2):
        rhs.append(pnums.entry(U, i2, i3) - (1 if (i2 == W and i3 == V) else 0))
    for i1, i3 in itertools.product(DISTANCES, repeat=2):
        rhs.append(pnums.entry(V, i1, i3) - (1 if (i1 == W and i3 == U) else 0))
    for i1, i2 in itertools.product(DISTANCES, repeat=2):
        rhs.append(pnums.entry(W, i1, i2) - (1 if (i1 == V and i2 == U) else 0))
    bad = [i for i, v in enumerate(rhs) if v < 0]
    if bad:
        raise NegativeRhs(
            f"block {block_label(block)}: negative rhs at equations {bad}"
        )
    return rhs


def forced_zero_variables(block: Block) -> frozenset[int]:
    """Variable indices killed by the triangle inequality or girth 5.

    For each candidate (i1, i2, i3), the three vertex triples {z,v,w},
    {z,u,w}, {z,u,v} have distance triples (i2,i3,U), (i1,i3,V), (i1,i2,W);
    any impossible one forces the count to zero.  Girth 5 additionally
    forbids the four-cycles encoded by (i1,i2,U,V), (i1,i3,U,W) or
    (i2,i3,V,W) all equal to 1.
    """
    if not is_block_admissible(block):
        raise InadmissibleBlock(f"block {block_label(block)} is not admissible")
    U, V, W = block
    ones = (1, 1, 1, 1)
    out = set()
    for t in itertools.product(DISTANCES, repeat=3):
        i1, i2, i3 = t
        if (
            not distance_triple_ok(i2, i3, U)
            or not distance_triple_ok(i1, i3, V)
            or not distance_triple_ok(i1, i2, W)
            or (i1, i2, U, V) == ones
            or (i1, i3, U, W) == ones
            or (i2, i3, V, W) == ones
        ):
            out.add(var_index(t))
    return frozenset(out)


@dataclass(frozen=True)
class BlockSystem:
    """One block's system M x = rhs plus its forced-zero variables."""

    block: Block
    matrix: tuple  # 27 rows of 27 zero-one entries
    rhs: tuple
    forced_zero: frozenset[int]

    def residual(self, x) -> list[int]:
        return [
            sum(row[c] * x[c] for c in range(27)) - b
            for row, b in zip(self.matrix, self.rhs)
        ]


def build_system(block: Block, pnums: IntersectionNumbers) -> BlockSystem:
    return BlockSystem(
        block=tuple(block),
        matrix=tuple(tuple(row) for row in coefficient_matrix()),
        rhs=tuple(build_rhs(block, pnums)),
        forced_zero=forced_zero_variables(block),
    )


def apply_symmetry(sigma, block: Block, x):
    """Relabel the three base vertices by a permutation sigma of (0, 1, 2).

    The configuration is the triple of pairs ((i1, U), (i2, V), (i3, W));
    position t of the image takes the pair from position sigma[t].  Returns
    the image block together with the re-sorted 27-entry solution vector,
    which solves the image block's system whenever x solves the original.
    """
    if sorted(sigma) != [0, 1, 2]:
        raise OutOfRange(f"sigma must permute (0, 1, 2), got {sigma}")
    new_block = tuple(block[s] for s in sigma)
    out = [0] * 27
    for t in itertools.product(DISTANCES, repeat=3):
        image = tuple(t[s] for s in sigma)
        out[var_index(image) - 1] = x[var_index(t) - 1]
    return new_block, tuple(out)


def orbit(block: Block) -> set[Block]:
    """All ordered blocks reachable from this one by relabeling."""
    return {tuple(block[s] for s in p) for p in itertools.permutations((0, 1, 2))}


def serialize_solution(x) -> str:
    """Comma-separated 27-entry form used in text output."""
    return ",".join(map(str, x))
