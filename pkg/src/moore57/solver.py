"""Solution finding and exhaustive enumeration over the null lattice.

Solutions of one block are exactly base + lattice vector subject to the
assembled constraints, so the search runs in the 8-dimensional coefficient
space rather than the 27-dimensional variable space.  Interval propagation
over the 27 affine functionals bounds every coefficient first; a
depth-first sweep with partial-sum pruning then visits every remaining
candidate, which makes the enumeration complete.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import blocks, constraints as cons_mod, drg, lattice
from .blocks import Block, BlockSystem
from .constraints import ConstraintSet

_D = (1, 2, 3)


class InfeasibleBlock(Exception):
    """The block's system has no integer solution under its constraints."""


class UnboundedLattice(Exception):
    """Interval propagation failed to bound a coefficient."""


def anchor_solution(system: BlockSystem) -> tuple:
    """Some integer solution of M x = rhs, constraints ignored.

    Fixes the eight unknowns with all indices in {2, 3} to zero and
    back-substitutes the remaining 19 through the three equation families;
    those 19 positions are a complement of the null lattice, so this works
    exactly when the system is solvable at all.  Entries may be negative.
    """
    rhs = system.rhs
    F1 = {(j, k): rhs[3 * (j - 1) + k - 1] for j in _D for k in _D}
    F2 = {(i, k): rhs[9 + 3 * (i - 1) + k - 1] for i in _D for k in _D}
    F3 = {(i, j): rhs[18 + 3 * (i - 1) + j - 1] for i in _D for j in _D}
    x = {t: 0 for t in itertools.product((2, 3), repeat=3)}
    for j, k in itertools.product((2, 3), repeat=2):
        x[(1, j, k)] = F1[(j, k)] - x[(2, j, k)] - x[(3, j, k)]
    for i, k in itertools.product((2, 3), repeat=2):
        x[(i, 1, k)] = F2[(i, k)] - x[(i, 2, k)] - x[(i, 3, k)]
    for i, j in itertools.product((2, 3), repeat=2):
        x[(i, j, 1)] = F3[(i, j)] - x[(i, j, 2)] - x[(i, j, 3)]
    for k in (2, 3):
        x[(1, 1, k)] = F1[(1, k)] - x[(2, 1, k)] - x[(3, 1, k)]
    for j in (2, 3):
        x[(1, j, 1)] = F1[(j, 1)] - x[(2, j, 1)] - x[(3, j, 1)]
    for i in (2, 3):
        x[(i, 1, 1)] = F2[(i, 1)] - x[(i, 2, 1)] - x[(i, 3, 1)]
    x[(1, 1, 1)] = F1[(1, 1)] - x[(2, 1, 1)] - x[(3, 1, 1)]
    vec = tuple(x[t] for t in itertools.product(_D, repeat=3))
    if any(r != 0 for r in system.residual(vec)):
        raise InfeasibleBlock(
            f"block {blocks.block_label(system.block)}: inconsistent margins, "
            "no integer solution exists"
        )
    return vec


def _merged_bounds(system: BlockSystem, cons: ConstraintSet):
    lo, hi = cons.bounds()
    for i in system.forced_zero:
        hi[i - 1] = 0 if hi[i - 1] is None else min(hi[i - 1], 0)
    return lo, hi


def _ceil_div(a, b):
    return -((-a) // b)


def propagate_intervals(anchor, lo, hi, max_rounds: int = 64):
    """Integer interval bounds on the 8 coefficients, None when unbounded.

    Each variable bound lo[i] <= anchor[i] + row_i . n <= hi[i] is solved
    for one coefficient at a time using the current bounds of the others;
    rounds repeat to a fixed point.  Works one-sidedly: a coefficient can
    gain a lower bound before any upper bound exists.
    """
    rows = lattice.functional_rows()
    nlo = [None] * 8
    nhi = [None] * 8
    for _ in range(max_rounds):
        changed = False
        for i in range(27):
            row = rows[i]
            support = [j for j in range(8) if row[j] != 0]
            L = lo[i] - anchor[i]
            H = None if hi[i] is None else hi[i] - anchor[i]
            for j in support:
                cj = row[j]
                rest_min, rest_max = 0, 0
                for jj in support:
                    if jj == j:
                        continue
                    c = row[jj]
                    terms = [
                        None if b is None else c * b for b in (nlo[jj], nhi[jj])
                    ]
                    if c < 0:
                        terms.reverse()
                    rest_min = None if (rest_min is None or terms[0] is None) else rest_min + terms[0]
                    rest_max = None if (rest_max is None or terms[1] is None) else rest_max + terms[1]
                if cj > 0:
                    new_lo = None if rest_max is None else _ceil_div(L - rest_max, cj)
                    new_hi = (
                        None
                        if (H is None or rest_min is None)
                        else (H - rest_min) // cj
                    )
                else:
                    new_lo = (
                        None
                        if (H is None or rest_min is None)
                        else _ceil_div(H - rest_min, cj)
                    )
                    new_hi = None if rest_max is None else (L - rest_max) // cj
                if new_lo is not None and (nlo[j] is None or new_lo > nlo[j]):
                    nlo[j] = new_lo
                    changed = True
                if new_hi is not None and (nhi[j] is None or new_hi < nhi[j]):
                    nhi[j] = new_hi
                    changed = True
                if nlo[j] is not None and nhi[j] is not None and nlo[j] > nhi[j]:
                    return nlo, nhi  # empty box, caller handles
        if not changed:
            break
    return nlo, nhi


@dataclass(frozen=True)
class EnumerationResult:
    """The complete constrained solution set of one block."""

    block: Block
    base: tuple  # the particular solution all tuples are relative to
    tuples: tuple  # coefficient 8-tuples, aligned with solutions
    solutions: tuple  # 27-entry vectors, sorted lexicographically
    count: int
    bound_audit: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "block": blocks.block_label(self.block),
            "count": self.count,
            "base": list(self.base),
            "tuples": [list(t) for t in self.tuples],
            "solutions": [list(s) for s in self.solutions],
        }


def _sweep(anchor, lo, hi, nlo, nhi):
    """DFS over the coefficient box; prunes on partial functional bounds."""
    rows = lattice.functional_rows()
    L = [lo[i] - anchor[i] for i in range(27)]
    H = [None if hi[i] is None else hi[i] - anchor[i] for i in range(27)]
    found = []
    n = [0] * 8

    def rest_range(row, depth):
        rmin = rmax = 0
        for j in range(depth, 8):
            c = row[j]
            if c > 0:
                rmin += c * nlo[j]
                rmax += c * nhi[j]
            elif c < 0:
                rmin += c * nhi[j]
                rmax += c * nlo[j]
        return rmin, rmax

    def dfs(depth, partial):
        if depth == 8:
            found.append(tuple(n))
            return
        for v in range(nlo[depth], nhi[depth] + 1):
            n[depth] = v
            nxt = [partial[i] + rows[i][depth] * v for i in range(27)]
            ok = True
            for i in range(27):
                rmin, rmax = rest_range(rows[i], depth + 1)
                if nxt[i] + rmax < L[i]:
                    ok = False
                    break
                if H[i] is not None and nxt[i] + rmin > H[i]:
                    ok = False
                    break
            if ok:
                dfs(depth + 1, nxt)
        n[depth] = 0

    dfs(0, [0] * 27)
    return found


def enumerate_solutions(
    system: BlockSystem, cons: ConstraintSet, hard_cap: int | None = None
) -> EnumerationResult:
    """Every solution of the block under cons, with lattice coefficients.

    Completeness rests on interval propagation: every coefficient gets a
    finite range before the sweep starts.  If propagation leaves some
    coefficient unbounded, UnboundedLattice is raised unless hard_cap is
    given, in which case the missing bounds are capped at +-hard_cap and
    the result carries an audit of whether any solution touched the cap.
    """
    anchor = anchor_solution(system)
    lo, hi = _merged_bounds(system, cons)
    nlo, nhi = propagate_intervals(anchor, lo, hi)
    audit = {}
    capped = [j for j in range(8) if nlo[j] is None or nhi[j] is None]
    if capped:
        if hard_cap is None:
            raise UnboundedLattice(
                f"block {blocks.block_label(system.block)}: coefficients "
                f"{[lattice.COEFFICIENT_NAMES[j] for j in capped]} unbounded"
            )
        # synthesize the missing side a window-width away from the known
        # one; with both sides open fall back to +-hard_cap around zero,
        # which presumes the anchor sits near the feasible region
        synth_lo, synth_hi = set(), set()
        for j in capped:
            if nlo[j] is None and nhi[j] is None:
                nlo[j], nhi[j] = -hard_cap, hard_cap
                synth_lo.add(j)
                synth_hi.add(j)
            elif nlo[j] is None:
                nlo[j] = nhi[j] - 2 * hard_cap
                synth_lo.add(j)
            else:
                nhi[j] = nlo[j] + 2 * hard_cap
                synth_hi.add(j)
        audit["capped"] = [lattice.COEFFICIENT_NAMES[j] for j in capped]
    if any(nlo[j] > nhi[j] for j in range(8)):
        raise InfeasibleBlock(
            f"block {blocks.block_label(system.block)}: constraint box is empty"
        )

    rows = lattice.functional_rows()
    pairs = []
    for n in _sweep(anchor, lo, hi, nlo, nhi):
        x = tuple(anchor[i] + sum(rows[i][j] * n[j] for j in range(8)) for i in range(27))
        pairs.append((n, x))
    if not pairs:
        raise InfeasibleBlock(
            f"block {blocks.block_label(system.block)} has no constrained solution"
        )
    pairs.sort(key=lambda p: p[1])
    if capped:
        # a solution sitting on a synthesized bound means the cap may have
        # clipped the true set
        hits = set()
        for n, _ in pairs:
            for j in capped:
                if (j in synth_lo and n[j] == nlo[j]) or (
                    j in synth_hi and n[j] == nhi[j]
                ):
                    hits.add(lattice.COEFFICIENT_NAMES[j])
        audit["cap_hits"] = sorted(hits)

    # Re-anchor at the lexicographically greatest solution; the tuple
    # listing is then independent of the internal anchor.
    base_n, base_x = pairs[-1]
    tuples = tuple(tuple(a - b for a, b in zip(n, base_n)) for n, _ in pairs)
    sols = tuple(x for _, x in pairs)
    return EnumerationResult(
        block=system.block,
        base=base_x,
        tuples=tuples,
        solutions=sols,
        count=len(sols),
        bound_audit=audit,
    )


def particular_solution(system: BlockSystem, cons: ConstraintSet) -> tuple:
    """The canonical particular solution: lexicographically greatest.

    Deterministic, and computed by the same bounded search that drives the
    enumeration; raises InfeasibleBlock when no solution exists.
    """
    return enumerate_solutions(system, cons).base


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(self.violations)


def verify_solution(system: BlockSystem, cons: ConstraintSet, x) -> VerificationReport:
    """Every violated equation or constraint, empty report iff valid."""
    bad = []
    if len(x) != 27:
        return VerificationReport((f"solution has {len(x)} entries, want 27",))
    for r, res in enumerate(system.residual(x)):
        if res != 0:
            bad.append(f"equation {r + 1}: residual {res}")
    for c in cons.constraints:
        v = x[c.index - 1]
        if isinstance(c, cons_mod.NonNegative) and v < 0:
            bad.append(f"x({c.index}) = {v} is negative")
        elif isinstance(c, cons_mod.FixedValue) and v != c.value:
            bad.append(f"x({c.index}) = {v}, pinned to {c.value}")
        elif isinstance(c, cons_mod.UpperBound) and v > c.bound:
            bad.append(f"x({c.index}) = {v} exceeds bound {c.bound}")
    for i in sorted(system.forced_zero):
        if x[i - 1] != 0:
            bad.append(f"x({i}) = {x[i - 1]} at a forced-zero index")
    return VerificationReport(tuple(bad))


def enumerate_block(
    block: Block, pnums: drg.IntersectionNumbers | None = None
) -> EnumerationResult:
    """Convenience wrapper: build, assemble and enumerate one block."""
    if pnums is None:
        pnums = drg.intersection_numbers(drg.MOORE57_ARRAY)
    system = blocks.build_system(block, pnums)
    return enumerate_solutions(system, cons_mod.assemble(block))


def summary(pnums: drg.IntersectionNumbers | None = None) -> dict:
    """Solution counts over the 8 canonical blocks, keyed by label."""
    if pnums is None:
        pnums = drg.intersection_numbers(drg.MOORE57_ARRAY)
    return {
        blocks.block_label(b): enumerate_block(b, pnums).count
        for b in blocks.canonical_blocks()
    }


def block221_report(result: EnumerationResult | None = None) -> dict:
    """Cross-checks on block 221 used when weighing the counting argument.

    Reports the values of x(3,3,1) across the three solutions, the paired
    x(2,2,1) values, and whether x(2,2,1) - x(3,3,1) = 49 on the solution
    with x(3,3,1) = 2; x(1,3,2) must vanish throughout (triangle
    inequality).
    """
    if result is None:
        result = enumerate_block((2, 2, 1))
    i331 = blocks.var_index((3, 3, 1))
    i221 = blocks.var_index((2, 2, 1))
    i132 = blocks.var_index((1, 3, 2))
    rows = [
        {"x331": s[i331 - 1], "x221": s[i221 - 1], "x132": s[i132 - 1]}
        for s in result.solutions
    ]
    values = sorted(r["x331"] for r in rows)
    at_two = [r for r in rows if r["x331"] == 2]
    checks = {
        "x331_values_are_0_1_2": values == [0, 1, 2],
        "difference_at_two_is_49": bool(at_two)
        and all(r["x221"] - r["x331"] == 49 for r in at_two),
        "x132_always_zero": all(r["x132"] == 0 for r in rows),
    }
    return {
        "block": blocks.block_label(result.block),
        "solution_count": result.count,
        "rows": rows,
        "x331_values": values,
        "checks": checks,
        "ok": all(checks.values()),
    }
