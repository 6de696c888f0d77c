"""Permutation systems, the candidate subgraph H, and the existence search."""

import itertools
import random

import pytest

from moore57 import permsearch as ps

HEXAGON_SYSTEM = ps.PermSystem(
    3, {(1, 2): (1, 0), (1, 3): (0, 1), (2, 3): (0, 1)}
)


def petersen():
    g = ps.SimpleGraph(10)
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)  # outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5)  # inner pentagram
        g.add_edge(i, 5 + i)  # spokes
    return g


def test_perm_system_validation():
    with pytest.raises(ValueError):
        ps.PermSystem(3, {(1, 2): (1, 0)})  # missing pairs
    with pytest.raises(ValueError):
        ps.PermSystem(3, {(1, 2): (1, 1), (1, 3): (0, 1), (2, 3): (0, 1)})
    with pytest.raises(ValueError):
        ps.PermSystem(3, {(2, 1): (1, 0), (1, 3): (0, 1), (2, 3): (0, 1)})


def test_theta_inverse():
    sys = ps.PermSystem(
        4,
        {
            (1, 2): (1, 2, 0),
            (1, 3): (2, 0, 1),
            (1, 4): (0, 1, 2),
            (2, 3): (1, 0, 2),
            (2, 4): (2, 1, 0),
            (3, 4): (0, 2, 1),
        },
    )
    for i, j in itertools.permutations(range(1, 5), 2):
        fwd = sys.theta_of(i, j)
        back = sys.theta_of(j, i)
        assert all(back[fwd[x]] == x for x in range(3))


def test_serialization_round_trip():
    again = ps.PermSystem.from_json_dict(HEXAGON_SYSTEM.to_json_dict())
    assert again == HEXAGON_SYSTEM
    assert '"1,2"' in HEXAGON_SYSTEM.to_json()


def test_build_h_hexagon():
    h = ps.build_h(HEXAGON_SYSTEM)
    assert h.n == 6
    assert all(h.degree(u) == 2 for u in range(6))
    assert ps.girth(h) == 6
    assert ps.diameter(h) == 3
    report = ps.verify_h(h, 3)
    assert report["ok"]


def test_build_h_all_identity_has_triangle():
    sys = ps.PermSystem(3, {p: (0, 1) for p in ((1, 2), (1, 3), (2, 3))})
    h = ps.build_h(sys)
    assert ps.girth(h) == 3
    report = ps.verify_h(h, 3)
    assert not report["no_short_cycles"] and not report["ok"]
    assert report["d_parts"] and report["regular_degree"]


def test_build_h_degree_two():
    sys = ps.PermSystem(2, {(1, 2): (0,)})
    h = ps.build_h(sys)
    assert h.n == 2 and h.edges() == [(0, 1)]
    assert ps.verify_h(h, 2)["ok"]
    assert ps.girth(h) is None


def test_vertex_degrees_uniform():
    rng = random.Random(3)
    perms = list(itertools.permutations(range(4)))
    theta = {}
    for i in range(1, 6):
        for j in range(i + 1, 6):
            theta[(i, j)] = rng.choice(perms)
    h = ps.build_h(ps.PermSystem(5, theta))
    assert all(h.degree(u) == 4 for u in range(h.n))


def test_assemble_moore_petersen():
    h = ps.build_h(HEXAGON_SYSTEM)
    g = ps.assemble_moore(h, 3)
    assert g.n == 10
    ok, diag = ps.is_moore(g, 3)
    assert ok, diag
    assert diag["girth"] == 5 and diag["diameter"] == 2
    assert all(g.degree(u) == 3 for u in range(g.n))


def test_assemble_moore_pentagon():
    sys = ps.PermSystem(2, {(1, 2): (0,)})
    g = ps.assemble_moore(ps.build_h(sys), 2)
    assert g.n == 5
    ok, diag = ps.is_moore(g, 2)
    assert ok, diag


def test_assemble_moore_rejects_bad_h():
    sys = ps.PermSystem(3, {p: (0, 1) for p in ((1, 2), (1, 3), (2, 3))})
    with pytest.raises(ValueError):
        ps.assemble_moore(ps.build_h(sys), 3)


def test_is_moore_negatives():
    k4 = ps.SimpleGraph(4)
    for u, v in itertools.combinations(range(4), 2):
        k4.add_edge(u, v)
    ok, diag = ps.is_moore(k4, 3)
    assert not ok and not diag["order_ok"]
    ok, _ = ps.is_moore(petersen(), 3)
    assert ok


def test_fixed_point_free():
    assert not ps.fixed_point_free((0,))
    assert not ps.fixed_point_free((0, 1, 2))
    assert ps.fixed_point_free((1, 0))
    derangements = [p for p in itertools.permutations(range(4)) if ps.fixed_point_free(p)]
    assert len(derangements) == 9


def test_identity_lift():
    lifted = ps.identity_lift({(1, 2): (1, 0)})
    assert lifted == HEXAGON_SYSTEM
    assert lifted.theta_of(3, 1) == (0, 1)
    with pytest.raises(ValueError):
        ps.identity_lift({})
    with pytest.raises(ValueError):
        ps.identity_lift({(1, 3): (1, 0)})  # pair must avoid the last part


def test_identity_lift_fixed_point_gives_triangle():
    # a fixed point of psi_12 closes a short cycle through parts 1, 2, d
    # via the two identity matchings: (1,x), (2,x), (d,x) are mutually
    # adjacent, a triangle
    lifted = ps.identity_lift({(1, 2): (0, 1)})
    h = ps.build_h(lifted)
    assert ps.girth(h) == 3
    assert ps.has_triangle_through(h, (1, 2, 3))
    assert not ps.verify_h(h, 3)["ok"]


def test_search_degree_2_and_3():
    out = ps.search(2)
    assert out.status == ps.STATUS_FOUND
    assert out.moore_diag["order"] == 5
    out = ps.search(3)
    assert out.status == ps.STATUS_FOUND
    ok, diag = ps.is_moore(out.graph, 3)
    assert ok and diag["order"] == 10
    assert out.h_report["ok"]


def test_search_degree_4_and_5_exhausted():
    assert ps.search(4).status == ps.STATUS_EXHAUSTED
    assert ps.search(5).status == ps.STATUS_EXHAUSTED


def test_naive_search_agrees_small_degrees():
    assert ps.naive_search(3).status == ps.STATUS_FOUND
    assert ps.naive_search(4).status == ps.STATUS_EXHAUSTED
    assert ps.naive_search(2).status == ps.STATUS_FOUND


def test_search_without_normalization():
    out = ps.search(3, normalize=False)
    assert out.status == ps.STATUS_FOUND
    ok, _ = ps.is_moore(out.graph, 3)
    assert ok


def test_search_seed_does_not_change_verdict():
    for seed in (0, 1, 99):
        assert ps.search(3, seed=seed).status == ps.STATUS_FOUND
        assert ps.search(4, seed=seed).status == ps.STATUS_EXHAUSTED


def test_search_budget_exceeded():
    out = ps.search(57, budget=ps.SearchBudget(max_nodes=2000))
    assert out.status == ps.STATUS_BUDGET
    assert out.nodes > 2000
    out = ps.search(8, budget=ps.SearchBudget(max_seconds=0.05))
    assert out.status in (ps.STATUS_BUDGET, ps.STATUS_FOUND)


def test_search_rejects_tiny_degree():
    with pytest.raises(ValueError):
        ps.search(1)
    with pytest.raises(ValueError):
        ps.naive_search(0)


def test_triangle_composition_matches_graph_check():
    # theta_ki . theta_ij . theta_jk has a fixed point exactly when a
    # triangle runs through parts i, j, k
    rng = random.Random(17)
    perms = list(itertools.permutations(range(4)))
    for _ in range(20):
        theta = {}
        for i in range(1, 6):
            for j in range(i + 1, 6):
                theta[(i, j)] = rng.choice(perms)
        sys = ps.PermSystem(5, theta)
        h = ps.build_h(sys)
        for i, j, k in itertools.combinations(range(1, 6), 3):
            via_comp = ps.triangle_via_composition(sys, i, j, k)
            via_graph = ps.has_triangle_through(h, (i, j, k))
            assert via_comp == via_graph, (i, j, k)


def test_edge_list_export():
    h = ps.build_h(HEXAGON_SYSTEM)
    text = h.to_edge_list()
    lines = text.splitlines()
    assert len(lines) == 6
    assert all(len(line.split()) == 2 for line in lines)


def test_simple_graph_guards():
    g = ps.SimpleGraph(3)
    g.add_edge(0, 1)
    with pytest.raises(ValueError):
        g.add_edge(0, 1)
    with pytest.raises(ValueError):
        g.add_edge(2, 2)
