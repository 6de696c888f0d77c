"""Exact parameters of a diameter-3 distance-regular graph.

Everything in here is integer arithmetic on the intersection array
[b0, b1, b2; c1, c2, c3]: the distance-shell sizes k_i and the three
symmetric matrices p^Z whose (X, Y) entry counts vertices at distance X
from one endpoint and Y from the other of a pair at distance Z.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

DIAMETER = 3


class NonIntegralMultiplicity(ValueError):
    """A shell size k_i * b_i / c_{i+1} failed to divide exactly."""


class InfeasibleArray(ValueError):
    """The array produced a negative or fractional intersection number."""


@dataclass(frozen=True)
class IntersectionArray:
    """The parameter tuple (b0, b1, b2; c1, c2, c3) of a diameter-3 graph."""

    b: tuple[int, int, int]
    c: tuple[int, int, int]

    def __post_init__(self):
        b, c = self.b, self.c
        if len(b) != 3 or len(c) != 3:
            raise ValueError("need exactly three b and three c entries")
        if not all(isinstance(v, int) for v in b + c):
            raise ValueError("array entries must be integers")
        if not (b[0] >= b[1] >= b[2] >= 1):
            raise ValueError(f"need b0 >= b1 >= b2 >= 1, got {b}")
        if not (1 == c[0] <= c[1] <= c[2] <= b[0]):
            raise ValueError(f"need 1 = c1 <= c2 <= c3 <= b0, got {c}")
        for i in (1, 2, 3):
            if self.a(i) < 0:
                raise ValueError(f"a_{i} = {self.a(i)} is negative")

    def b_at(self, i: int) -> int:
        # b_i with b_3 = 0
        return self.b[i] if i < 3 else 0

    def c_at(self, i: int) -> int:
        # c_i, defined for i in 1..3
        return self.c[i - 1]

    def a(self, i: int) -> int:
        # a_i = b0 - b_i - c_i, the within-shell valency
        return self.b[0] - self.b_at(i) - self.c_at(i)

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        """Parse the text form "b0,b1,b2;c1,c2,c3" (spaces tolerated)."""
        parts = text.replace(" ", "").split(";")
        if len(parts) != 2:
            raise ValueError(f"expected 'b0,b1,b2;c1,c2,c3', got {text!r}")
        try:
            b = tuple(int(v) for v in parts[0].split(","))
            c = tuple(int(v) for v in parts[1].split(","))
        except ValueError:
            raise ValueError(f"non-integer entry in array {text!r}") from None
        if len(b) != 3 or len(c) != 3:
            raise ValueError(f"expected three entries per side in {text!r}")
        return cls(b, c)

    def __str__(self):
        return ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c))


#: The array of the distance-regular subgraph forced by a degree-57 Moore graph.
MOORE57_ARRAY = IntersectionArray((55, 54, 2), (1, 1, 54))


def multiplicities(arr: IntersectionArray) -> tuple[int, int, int, int]:
    """Shell sizes (k0, k1, k2, k3) from k_{i+1} = k_i * b_i / c_{i+1}.

    Raises NonIntegralMultiplicity when a division is inexact, which
    already rules the array out.
    """
    k = [1]
    for i in range(DIAMETER):
        num = k[-1] * arr.b[i]
        den = arr.c[i]
        if num % den != 0:
            raise NonIntegralMultiplicity(
                f"k_{i + 1} = {num}/{den} is not an integer for [{arr}]"
            )
        k.append(num // den)
    return tuple(k)


@dataclass(frozen=True)
class IntersectionNumbers:
    """The three bordered 4x4 matrices p^Z, Z in {1,2,3}, indices 0..3.

    p[Z][X][Y] counts vertices at distance X from y and Y from x when
    d(x, y) = Z.  Row 0 / column 0 carry the coincidence border
    p(Z, X, 0) = [X == Z].
    """

    array: IntersectionArray
    p: tuple  # p[Z-1][X][Y], each a 4x4 tuple-of-tuples

    def entry(self, Z: int, X: int, Y: int) -> int:
        return self.p[Z - 1][X][Y]

    def matrix(self, Z: int) -> tuple:
        """Full bordered 4x4 matrix for one Z."""
        return self.p[Z - 1]

    def core(self, Z: int) -> tuple:
        """The 3x3 block over X, Y in {1,2,3}."""
        return tuple(tuple(row[1:4]) for row in self.p[Z - 1][1:4])


def intersection_numbers(arr: IntersectionArray) -> IntersectionNumbers:
    """All p^Z matrices, computed by the standard three-term recurrence.

    Column 1 of p^Z is (c_Z, a_Z, b_Z) placed at rows Z-1, Z, Z+1; columns
    2 and 3 follow from counting edges between consecutive distance shells:

        c_{j+1} p(i, j+1) = b_{i-1} p(i-1, j) + (a_i - a_j) p(i, j)
                            + c_{i+1} p(i+1, j) - b_{j-1} p(i, j-1)

    The result is validated against symmetry, the row-sum identity
    sum_Y p(Z, X, Y) = k_X, the border values and triangle zeros before
    being returned; any failure raises InfeasibleArray.
    """
    k = multiplicities(arr)
    bb = [arr.b_at(i) for i in range(4)]
    cc = [0] + [arr.c_at(i) for i in (1, 2, 3)]
    aa = [0] + [arr.a(i) for i in (1, 2, 3)]

    mats = []
    for Z in (1, 2, 3):
        m = [[0] * 4 for _ in range(4)]
        for X in range(4):
            m[X][0] = 1 if X == Z else 0
        for X, val in ((Z - 1, cc[Z]), (Z, aa[Z]), (Z + 1, bb[Z])):
            if 0 <= X <= 3:
                m[X][1] = val
        for j in (1, 2):
            for X in range(4):
                t = (aa[X] - aa[j]) * m[X][j] - bb[j - 1] * m[X][j - 1]
                if X >= 1:
                    t += bb[X - 1] * m[X - 1][j]
                if X + 1 <= 3:
                    t += cc[X + 1] * m[X + 1][j]
                if t % cc[j + 1] != 0:
                    raise InfeasibleArray(
                        f"p^{Z}({X},{j + 1}) = {t}/{cc[j + 1]} is fractional"
                    )
                m[X][j + 1] = t // cc[j + 1]
        mats.append(tuple(tuple(row) for row in m))

    nums = IntersectionNumbers(arr, tuple(mats))
    _validate(nums, k)
    return nums


def _validate(nums: IntersectionNumbers, k) -> None:
    for Z in (1, 2, 3):
        m = nums.matrix(Z)
        for X in range(4):
            for Y in range(4):
                if m[X][Y] < 0:
                    raise InfeasibleArray(f"p^{Z}({X},{Y}) = {m[X][Y]} is negative")
                if m[X][Y] != m[Y][X]:
                    raise InfeasibleArray(f"p^{Z} not symmetric at ({X},{Y})")
                if X >= 1 and Y >= 1 and (abs(X - Y) > Z or X + Y < Z) and m[X][Y] != 0:
                    raise InfeasibleArray(f"p^{Z}({X},{Y}) must vanish, got {m[X][Y]}")
            if m[X][0] != (1 if X == Z else 0):
                raise InfeasibleArray(f"border p^{Z}({X},0) wrong")
            if sum(m[X]) != k[X]:
                raise InfeasibleArray(
                    f"row sum of p^{Z} at X={X} is {sum(m[X])}, want k_{X} = {k[X]}"
                )


@dataclass(frozen=True)
class TableDeviation:
    """One disagreement between a computed p entry and the published table."""

    family: int  # Z
    row: int  # X
    col: int  # Y
    computed: int
    published: int

    @property
    def label(self) -> str:
        return f"p{self.family}({self.row},{self.col})"

    def describe(self) -> str:
        return (
            f"{self.label}: computed {self.computed}, published table prints "
            f"{self.published} (breaks symmetry and the row-sum identity)"
        )


def load_published_tables() -> dict:
    """Reference listings shipped with the package (counts, p matrices, ...)."""
    with resources.files("moore57.data").joinpath("published.json").open() as fh:
        return json.load(fh)


def published_deviations(nums: IntersectionNumbers) -> list[TableDeviation]:
    """Compare computed p matrices against the published 3x3 tables.

    For the degree-57 instance this flags exactly one entry: the published
    p^2 prints 54 at (2, 1) where symmetry with (1, 2) and the row-sum
    identity force 52.
    """
    published = load_published_tables()["p_matrices"]
    out = []
    for Z in (1, 2, 3):
        ref = published[str(Z)]
        core = nums.core(Z)
        for X in range(3):
            for Y in range(3):
                if core[X][Y] != ref[X][Y]:
                    out.append(
                        TableDeviation(Z, X + 1, Y + 1, core[X][Y], ref[X][Y])
                    )
    return out
