"""Existence machinery for Moore graphs via permutation systems.

A degree-d Moore graph exists iff there is a d-partite graph H on parts of
size d-1 that is (d-1)-regular, has exactly one edge between any vertex
and any other part, and contains no triangle or square.  The part-to-part
matchings of such an H are permutations theta_ij, so searching for H is a
backtracking search over permutation assignments.  Cycle checks run
directly on the partial graph: adding an edge is rejected as soon as it
closes a 3- or 4-cycle.

The search normalizes every matching into the last part to the identity;
this loses no generality because relabeling within parts is free.  All
parts are 1-based; permutation one-line arrays are 0-based.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass

STATUS_FOUND = "found"
STATUS_EXHAUSTED = "exhausted_no_solution"
STATUS_BUDGET = "budget_exceeded"


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class SearchBudget:
    """Limits that turn "no solution exists" into "none found so far"."""

    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass(frozen=True)
class PermSystem:
    """Degree d plus one permutation of {0..d-2} per part pair i < j."""

    d: int
    theta: dict

    def __post_init__(self):
        m = self.d - 1
        for (i, j), perm in self.theta.items():
            if not (1 <= i < j <= self.d):
                raise ValueError(f"bad pair ({i},{j}) for degree {self.d}")
            if sorted(perm) != list(range(m)):
                raise ValueError(f"theta[{i},{j}] is not a permutation of 0..{m - 1}")
        expected = {(i, j) for i in range(1, self.d + 1) for j in range(i + 1, self.d + 1)}
        if set(self.theta) != expected:
            raise ValueError("theta must cover every pair i < j exactly once")

    def theta_of(self, i: int, j: int) -> tuple:
        """theta_ij, with theta_ji defined as the inverse of theta_ij."""
        if i < j:
            return tuple(self.theta[(i, j)])
        perm = self.theta[(j, i)]
        inv = [0] * len(perm)
        for x, y in enumerate(perm):
            inv[y] = x
        return tuple(inv)

    def to_json_dict(self) -> dict:
        return {
            "degree": self.d,
            "theta": {f"{i},{j}": list(p) for (i, j), p in sorted(self.theta.items())},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PermSystem":
        theta = {}
        for key, perm in data["theta"].items():
            i, j = (int(v) for v in key.split(","))
            theta[(i, j)] = tuple(perm)
        return cls(int(data["degree"]), theta)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


class SimpleGraph:
    """Undirected graph on vertices 0..n-1 with optional part labels."""

    def __init__(self, n: int, parts=None):
        self.n = n
        self.adj = [set() for _ in range(n)]
        self.parts = list(parts) if parts is not None else None

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if v in self.adj[u]:
            raise ValueError(f"duplicate edge {u}-{v}")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def edges(self) -> list:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def to_edge_list(self) -> str:
        """One "u v" pair per line, 0-based."""
        return "\n".join(f"{u} {v}" for u, v in self.edges())


def _bfs_levels(g: SimpleGraph, start: int) -> list:
    level = [-1] * g.n
    level[start] = 0
    queue = [start]
    for u in queue:
        for v in g.adj[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def diameter(g: SimpleGraph):
    """Longest shortest path; None when disconnected or trivial."""
    if g.n == 0:
        return None
    best = 0
    for s in range(g.n):
        level = _bfs_levels(g, s)
        if min(level) < 0:
            return None
        best = max(best, max(level))
    return best


def girth(g: SimpleGraph):
    """Length of a shortest cycle; None for forests."""
    best = None
    for s in range(g.n):
        level = [-1] * g.n
        parent = [-1] * g.n
        level[s] = 0
        queue = [s]
        for u in queue:
            for v in g.adj[u]:
                if level[v] < 0:
                    level[v] = level[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u] and level[v] >= level[u]:
                    # non-tree edge closes a cycle through s
                    cyc = level[u] + level[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def fixed_point_free(perm) -> bool:
    """True iff the permutation moves every element."""
    return all(p != x for x, p in enumerate(perm))


def part_vertex(d: int, part: int, elem: int) -> int:
    """Vertex id of element elem (0-based) of part (1-based)."""
    return (part - 1) * (d - 1) + elem


def build_h(sys: PermSystem) -> SimpleGraph:
    """The d-partite graph whose i-to-j matching is theta_ij."""
    d, m = sys.d, sys.d - 1
    parts = [p for p in range(1, d + 1) for _ in range(m)]
    g = SimpleGraph(d * m, parts=parts)
    for (i, j), perm in sys.theta.items():
        for x in range(m):
            g.add_edge(part_vertex(d, i, x), part_vertex(d, j, perm[x]))
    return g


def verify_h(h: SimpleGraph, d: int) -> dict:
    """Pass/fail per defining property of H, plus an overall verdict."""
    m = d - 1
    report = {}
    parts = h.parts or []
    labels = sorted(set(parts))
    report["d_parts"] = len(labels) == d
    report["part_size"] = all(parts.count(p) == m for p in labels)
    report["regular_degree"] = all(h.degree(u) == m for u in range(h.n))
    one_each = True
    for u in range(h.n):
        seen = [parts[v] for v in h.adj[u]]
        want = [p for p in labels if p != parts[u]]
        if sorted(seen) != want:
            one_each = False
            break
    report["one_neighbor_per_part"] = one_each
    gir = girth(h)
    report["girth"] = gir
    report["no_short_cycles"] = gir is None or gir >= 5
    report["ok"] = all(
        report[k]
        for k in ("d_parts", "part_size", "regular_degree",
                  "one_neighbor_per_part", "no_short_cycles")
    )
    return report


def assemble_moore(h: SimpleGraph, d: int) -> SimpleGraph:
    """Wrap H with a center and its d neighbors: d*d + 1 vertices."""
    report = verify_h(h, d)
    if not report["ok"]:
        raise ValueError(f"H fails its defining properties: {report}")
    m = d - 1
    n = 1 + d + h.n
    g = SimpleGraph(n)
    center = 0
    for i in range(1, d + 1):
        g.add_edge(center, i)
    offset = 1 + d
    for u, v in h.edges():
        g.add_edge(offset + u, offset + v)
    labels = sorted(set(h.parts))
    for idx, part in enumerate(labels, start=1):
        for u in range(h.n):
            if h.parts[u] == part:
                g.add_edge(idx, offset + u)
    return g


def is_moore(g: SimpleGraph, d: int) -> tuple[bool, dict]:
    """d-regular, d*d + 1 vertices, girth exactly 5, diameter exactly 2."""
    diag = {
        "order": g.n,
        "order_ok": g.n == d * d + 1,
        "regular": all(g.degree(u) == d for u in range(g.n)),
        "girth": girth(g),
        "diameter": diameter(g),
    }
    diag["ok"] = (
        diag["order_ok"]
        and diag["regular"]
        and diag["girth"] == 5
        and diag["diameter"] == 2
    )
    return diag["ok"], diag


def identity_lift(psi: dict, d: int | None = None) -> PermSystem:
    """Extend matchings among the first d-1 parts by identities to part d.

    psi maps pairs (i, j), 1 <= i < j <= d-1, to permutations of d-1
    elements; d is inferred from the permutation length when omitted.
    """
    if d is None:
        if not psi:
            raise ValueError("cannot infer degree from an empty system")
        d = len(next(iter(psi.values()))) + 1
    m = d - 1
    theta = {}
    for (i, j), perm in psi.items():
        if not (1 <= i < j <= d - 1):
            raise ValueError(f"psi pair ({i},{j}) out of range for degree {d}")
        theta[(i, j)] = tuple(perm)
    identity = tuple(range(m))
    for i in range(1, d):
        theta[(i, d)] = identity
    return PermSystem(d, theta)


@dataclass
class SearchOutcome:
    status: str
    degree: int
    nodes: int
    system: PermSystem | None = None
    graph: SimpleGraph | None = None
    moore_diag: dict | None = None
    h_report: dict | None = None

    def to_json_dict(self) -> dict:
        out = {"status": self.status, "degree": self.degree, "nodes": self.nodes}
        if self.system is not None:
            out["system"] = self.system.to_json_dict()
        if self.moore_diag is not None:
            out["moore"] = self.moore_diag
        if self.h_report is not None:
            out["h_properties"] = self.h_report
        return out


class _Searcher:
    """Backtracking over matchings, one image at a time, girth-checked."""

    def __init__(self, d: int, budget: SearchBudget | None, seed, normalize: bool):
        self.d = d
        self.m = d - 1
        self.budget = budget or SearchBudget()
        self.rng = random.Random(seed) if seed is not None else None
        self.normalize = normalize
        free_parts = d - 1 if normalize else d
        self.pairs = [
            (i, j)
            for i in range(1, free_parts + 1)
            for j in range(i + 1, free_parts + 1)
        ]
        self.nodes = 0
        self.deadline = (
            time.monotonic() + self.budget.max_seconds
            if self.budget.max_seconds is not None
            else None
        )
        nv = d * self.m
        self.adj = [0] * nv
        if normalize:
            for i in range(1, d):
                for x in range(self.m):
                    self._link(part_vertex(d, i, x), part_vertex(d, d, x))

    def _link(self, u, v):
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def _unlink(self, u, v):
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)

    def _closes_short_cycle(self, u, v):
        adj = self.adj
        if adj[u] & adj[v]:
            return True  # triangle u-w-v
        au = adj[u] & ~(1 << v)
        av = adj[v] & ~(1 << u)
        while au:
            wbit = au & -au
            au ^= wbit
            if adj[wbit.bit_length() - 1] & av:
                return True  # square u-w-z-v
        return False

    def _tick(self):
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExhausted

    def _candidates(self, pair_idx):
        order = [y for y in range(self.m) if not self.used[pair_idx] >> y & 1]
        if self.rng is not None:
            self.rng.shuffle(order)
        return iter(order)

    def run(self):
        """Iterative depth-first search over slots (pair, element).

        An explicit stack instead of recursion: a budgeted run at degree
        57 legitimately reaches tens of thousands of accepted assignments.
        """
        m = self.m
        pairs = self.pairs
        total = len(pairs) * m
        if total == 0:
            return {}
        self.used = [0] * len(pairs)
        assign = {}
        iters = [None] * total
        chosen = [None] * total
        s = 0
        iters[0] = self._candidates(0)
        while True:
            pi, x = divmod(s, m)
            i, j = pairs[pi]
            u = part_vertex(self.d, i, x)
            placed = False
            for y in iters[s]:
                self._tick()
                v = part_vertex(self.d, j, y)
                if self._closes_short_cycle(u, v):
                    continue
                self._link(u, v)
                self.used[pi] |= 1 << y
                chosen[s] = (y, u, v)
                assign[(i, j, x)] = y
                placed = True
                break
            if placed:
                s += 1
                if s == total:
                    return dict(assign)
                iters[s] = self._candidates(s // m)
                continue
            s -= 1
            if s < 0:
                return None
            pi, x = divmod(s, m)
            i, j = pairs[pi]
            y, u, v = chosen[s]
            self._unlink(u, v)
            self.used[pi] &= ~(1 << y)
            del assign[(i, j, x)]


def _outcome_from_assignment(d: int, assignment: dict, normalize: bool) -> SearchOutcome:
    free_parts = d - 1 if normalize else d
    m = d - 1
    theta = {}
    for i in range(1, free_parts + 1):
        for j in range(i + 1, free_parts + 1):
            theta[(i, j)] = tuple(assignment[(i, j, x)] for x in range(m))
    if normalize:
        identity = tuple(range(m))
        for i in range(1, d):
            theta[(i, d)] = identity
    system = PermSystem(d, theta)
    h = build_h(system)
    h_report = verify_h(h, d)
    moore = assemble_moore(h, d)
    ok, diag = is_moore(moore, d)
    if not (h_report["ok"] and ok):
        raise AssertionError(f"search returned an invalid system: {h_report} {diag}")
    return SearchOutcome(
        status=STATUS_FOUND,
        degree=d,
        nodes=0,
        system=system,
        graph=moore,
        moore_diag=diag,
        h_report=h_report,
    )


def search(
    d: int,
    budget: SearchBudget | None = None,
    seed=None,
    normalize: bool = True,
) -> SearchOutcome:
    """Backtracking existence search at degree d.

    Returns a found system (verified sound before returning), an
    exhausted-no-solution verdict covering the whole normalized space, or a
    budget-exceeded outcome when limits ran out first.
    """
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    searcher = _Searcher(d, budget, seed, normalize)
    try:
        assignment = searcher.run()
    except _BudgetExhausted:
        return SearchOutcome(status=STATUS_BUDGET, degree=d, nodes=searcher.nodes)
    if assignment is None:
        return SearchOutcome(status=STATUS_EXHAUSTED, degree=d, nodes=searcher.nodes)
    outcome = _outcome_from_assignment(d, assignment, normalize)
    outcome.nodes = searcher.nodes
    return outcome


def naive_search(d: int) -> SearchOutcome:
    """Unpruned product-space enumeration in the normalized form.

    Builds the full H for every tuple of matchings among the first d-1
    parts and keeps the first that verifies.  Only sensible for d <= 4;
    the space has ((d-1)!)**C(d-1,2) assignments.
    """
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    m = d - 1
    pairs = [(i, j) for i in range(1, d) for j in range(i + 1, d)]
    perms = list(itertools.permutations(range(m)))
    nodes = 0
    for combo in itertools.product(perms, repeat=len(pairs)):
        nodes += 1
        psi = {pair: perm for pair, perm in zip(pairs, combo)}
        system = identity_lift(psi, d)
        h = build_h(system)
        report = verify_h(h, d)
        if report["ok"]:
            moore = assemble_moore(h, d)
            ok, diag = is_moore(moore, d)
            if not ok:
                raise AssertionError(f"H verified but assembly is not Moore: {diag}")
            return SearchOutcome(
                status=STATUS_FOUND,
                degree=d,
                nodes=nodes,
                system=system,
                graph=moore,
                moore_diag=diag,
                h_report=report,
            )
    return SearchOutcome(status=STATUS_EXHAUSTED, degree=d, nodes=nodes)


def triangle_via_composition(sys: PermSystem, i: int, j: int, k: int) -> bool:
    """Triangle test through parts i, j, k by composing matchings.

    Following x from part k through parts i and j and back, x is a fixed
    point of theta_jk(theta_ij(theta_ki(x))) exactly when x lies on a
    triangle; cross-checks the graph cycle detection.
    """
    tki = sys.theta_of(k, i)
    tij = sys.theta_of(i, j)
    tjk = sys.theta_of(j, k)
    for x in range(sys.d - 1):
        if tjk[tij[tki[x]]] == x:
            return True
    return False


def has_triangle_through(h: SimpleGraph, parts: tuple) -> bool:
    """Is there a triangle of H with exactly these part labels?"""
    want = sorted(parts)
    for u in range(h.n):
        for v in h.adj[u]:
            if v <= u:
                continue
            for w in h.adj[u] & h.adj[v]:
                if sorted((h.parts[u], h.parts[v], h.parts[w])) == want:
                    return True
    return False
