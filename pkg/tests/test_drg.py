"""Intersection array parameters against brute-force distance partitions."""

from collections import deque

import pytest

from moore57 import drg


def bfs_distances(adj, start):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def brute_force_p(adj):
    """p[h][i][j] counted directly on an explicit distance-regular graph."""
    verts = sorted(adj)
    dist = {u: bfs_distances(adj, u) for u in verts}
    diam = max(max(d.values()) for d in dist.values())
    tables = {}
    for x in verts:
        for y in verts:
            h = dist[x][y]
            if h == 0:
                continue
            tab = [[0] * (diam + 1) for _ in range(diam + 1)]
            for z in verts:
                tab[dist[y][z]][dist[x][z]] += 1
            if h in tables:
                assert tables[h] == tab, "graph is not distance-regular"
            else:
                tables[h] = tab
    return tables


def cycle_graph(n):
    return {i: {(i - 1) % n, (i + 1) % n} for i in range(n)}


def heawood_graph():
    # point-line incidence structure as a circulant: ring edges plus
    # chords i <-> i+5 from even vertices
    adj = {i: set() for i in range(14)}
    for i in range(14):
        adj[i].add((i + 1) % 14)
        adj[(i + 1) % 14].add(i)
        if i % 2 == 0:
            adj[i].add((i + 5) % 14)
            adj[(i + 5) % 14].add(i)
    assert all(len(nbrs) == 3 for nbrs in adj.values())
    return adj


def test_parse_and_str():
    arr = drg.IntersectionArray.parse("55,54,2;1,1,54")
    assert arr == drg.MOORE57_ARRAY
    assert str(arr) == "55,54,2;1,1,54"
    assert drg.IntersectionArray.parse(" 2, 1,1 ; 1,1, 1 ").b == (2, 1, 1)
    for bad in ("55,54;1,1,54", "a,b,c;1,1,1", "1,1,1", "2,1,1;1,1"):
        with pytest.raises(ValueError):
            drg.IntersectionArray.parse(bad)


def test_array_invariants():
    with pytest.raises(ValueError):
        drg.IntersectionArray((1, 2, 3), (1, 1, 1))  # b not decreasing
    with pytest.raises(ValueError):
        drg.IntersectionArray((3, 2, 1), (2, 2, 2))  # c1 != 1
    with pytest.raises(ValueError):
        drg.IntersectionArray((3, 2, 1), (1, 1, 5))  # c3 > b0
    with pytest.raises(ValueError):
        drg.IntersectionArray((2, 2, 2), (1, 1, 1))  # a_1 negative


def test_multiplicities_examples():
    assert drg.multiplicities(drg.MOORE57_ARRAY) == (1, 55, 2970, 110)
    assert sum(drg.multiplicities(drg.MOORE57_ARRAY)) == 3136  # 56 * 56
    assert drg.multiplicities(drg.IntersectionArray((2, 1, 1), (1, 1, 1))) == (1, 2, 2, 2)
    assert drg.multiplicities(drg.IntersectionArray((2, 1, 1), (1, 1, 2))) == (1, 2, 2, 1)


def test_multiplicities_non_integral():
    with pytest.raises(drg.NonIntegralMultiplicity):
        drg.multiplicities(drg.IntersectionArray((3, 2, 1), (1, 2, 2)))


def test_infeasible_arrays_detected():
    # (3,1,1;1,1,1) would need p^2(2,2) = -1; (4,1,1;1,2,2) a fractional p
    with pytest.raises(drg.InfeasibleArray):
        drg.intersection_numbers(drg.IntersectionArray((3, 1, 1), (1, 1, 1)))
    with pytest.raises(drg.InfeasibleArray):
        drg.intersection_numbers(drg.IntersectionArray((4, 1, 1), (1, 2, 2)))


def test_p_matrices_match_published_values(pnums):
    assert pnums.core(1) == ((0, 54, 0), (54, 2808, 108), (0, 108, 2))
    assert pnums.core(3) == ((0, 54, 1), (54, 2862, 54), (1, 54, 54))
    # entry (2,1) is 52, forced by symmetry and the row sum k_2 = 2970
    assert pnums.core(2) == ((1, 52, 2), (52, 2811, 106), (2, 106, 2))
    assert pnums.entry(2, 2, 1) == 52


def test_published_deviation_diagnostic(pnums):
    devs = drg.published_deviations(pnums)
    assert len(devs) == 1
    d = devs[0]
    assert (d.family, d.row, d.col) == (2, 2, 1)
    assert d.computed == 52 and d.published == 54
    assert d.label == "p2(2,1)"
    assert "52" in d.describe() and "54" in d.describe()


def test_row_sums_symmetry_and_border(pnums):
    k = drg.multiplicities(drg.MOORE57_ARRAY)
    for Z in (1, 2, 3):
        m = pnums.matrix(Z)
        for X in range(4):
            assert sum(m[X]) == k[X]
            assert m[X][0] == (1 if X == Z else 0)
            for Y in range(4):
                assert m[X][Y] == m[Y][X]
                assert m[X][Y] >= 0


@pytest.mark.parametrize(
    "graph,array",
    [
        (cycle_graph(7), ((2, 1, 1), (1, 1, 1))),
        (cycle_graph(6), ((2, 1, 1), (1, 1, 2))),
        (heawood_graph(), ((3, 2, 2), (1, 1, 3))),
    ],
)
def test_brute_force_equivalence(graph, array):
    nums = drg.intersection_numbers(drg.IntersectionArray(*array))
    tables = brute_force_p(graph)
    for h in (1, 2, 3):
        got = tuple(tuple(row[:4]) for row in tables[h])
        assert got == nums.matrix(h)
    k = drg.multiplicities(nums.array)
    assert sum(k) == len(graph)
