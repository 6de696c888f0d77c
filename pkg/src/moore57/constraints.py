"""Per-block constraint sets beyond the linear system itself.

Three sources: non-negativity of every count, the forced-zero variables,
and two geometric facts about the distance-3 structure (the rook's-grid
model of the degree-57 instance): the value of x(3,3,3) is pinned by the
number of 3s among (U, V, W), and two sporadic constraints hold on blocks
322 and 222.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import blocks
from .blocks import Block

#: Side length of the grid model of the distance-3 graph for degree 57.
GRID_SIDE = 56


@dataclass(frozen=True)
class NonNegative:
    index: int

    kind = "non_negative"


@dataclass(frozen=True)
class FixedValue:
    index: int
    value: int

    kind = "fixed_value"


@dataclass(frozen=True)
class UpperBound:
    index: int
    bound: int

    kind = "upper_bound"


Constraint = Union[NonNegative, FixedValue, UpperBound]


@dataclass(frozen=True)
class ConstraintSet:
    constraints: tuple

    def __post_init__(self):
        seen = set()
        for c in self.constraints:
            if isinstance(c, FixedValue):
                if c.index in seen:
                    raise ValueError(f"two fixed values for index {c.index}")
                seen.add(c.index)
                if c.value < 0:
                    raise ValueError(f"fixed value at {c.index} is negative")
            if isinstance(c, UpperBound) and c.bound < 0:
                raise ValueError(f"upper bound at {c.index} is negative")

    def bounds(self) -> tuple[list, list]:
        """Per-variable bounds (lo, hi), hi entries None when unbounded."""
        lo = [0] * 27
        hi: list = [None] * 27
        for c in self.constraints:
            i = c.index - 1
            if isinstance(c, FixedValue):
                lo[i] = max(lo[i], c.value)
                hi[i] = c.value if hi[i] is None else min(hi[i], c.value)
            elif isinstance(c, UpperBound):
                hi[i] = c.bound if hi[i] is None else min(hi[i], c.bound)
        for i in range(27):
            if hi[i] is not None and lo[i] > hi[i]:
                raise ValueError(f"contradictory bounds at index {i + 1}")
        return lo, hi

    def to_records(self) -> list[dict]:
        out = []
        for c in self.constraints:
            rec = {"kind": c.kind, "index": c.index}
            if isinstance(c, FixedValue):
                rec["value"] = c.value
            elif isinstance(c, UpperBound):
                rec["value"] = c.bound
            out.append(rec)
        return out


def x333_value(block: Block) -> int:
    """The pinned value of x(3,3,3) for an admissible block.

    A vertex at distance 3 from all of u, v, w shares a grid line with each
    of them; counting those is a pure grid exercise: 0, 1, 0 or n-3 common
    line-mates according to 0, 1, 2 or 3 of the pairwise distances being 3.
    """
    if not blocks.is_block_admissible(block):
        raise blocks.InadmissibleBlock(f"block {blocks.block_label(block)}")
    threes = list(block).count(3)
    return {0: 0, 1: 1, 2: 0, 3: GRID_SIDE - 3}[threes]


def sporadic_constraints(block: Block) -> tuple:
    """Sporadic constraints on blocks 322 and 222; empty elsewhere.

    On 322 the matching between disjoint grid lines pins x(1,3,3) = 1.  On
    222 each pair among u, v, w admits exactly two common grid-line
    candidates, capping the six variables with a repeated 3 at 2.
    """
    if not blocks.is_block_admissible(block):
        raise blocks.InadmissibleBlock(f"block {blocks.block_label(block)}")
    if tuple(block) == (3, 2, 2):
        return (FixedValue(blocks.var_index((1, 3, 3)), 1),)
    if tuple(block) == (2, 2, 2):
        capped = ((1, 3, 3), (2, 3, 3), (3, 1, 3), (3, 2, 3), (3, 3, 1), (3, 3, 2))
        return tuple(UpperBound(blocks.var_index(t), 2) for t in capped)
    return ()


def assemble(block: Block) -> ConstraintSet:
    """Everything known about one canonical block's solutions.

    Non-negativity on all 27 variables, zero at each forced-zero index, the
    pinned x(3,3,3) value, and the sporadic constraints.
    """
    cons: list = [NonNegative(i) for i in range(1, 28)]
    forced = blocks.forced_zero_variables(block)
    cons.extend(FixedValue(i, 0) for i in sorted(forced))
    pinned = x333_value(block)
    if 27 in forced:
        if pinned != 0:
            raise ValueError("x(3,3,3) both forced to zero and pinned nonzero")
    else:
        cons.append(FixedValue(27, pinned))
    cons.extend(sporadic_constraints(block))
    return ConstraintSet(tuple(cons))
