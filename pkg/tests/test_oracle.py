import pytest

from forbidtree.forbid import three_consecutive_hull_edges
from forbidtree.generators import convex_points, random_points
from forbidtree.geometry import Edge, EdgeSet, convex_hull
from forbidtree.oracle import (
    SearchBudgetExceeded,
    exists_embedding,
    forbids,
    min_forbidden_set_size,
    verify_construction,
)
from forbidtree.trees import Tree, all_trees, spider_tree


def complete_edge_set(n):
    return EdgeSet(Edge(a, b) for a in range(n) for b in range(a + 1, n))


def test_always_feasible_without_forbidden_edges():
    for k in range(2, 8):
        for n in (k, k + 2):
            s = random_points(n, seed=k)
            for t in all_trees(k):
                rep = exists_embedding(t, s)
                assert rep.feasible is True
                rep.witness.validate()


def test_three_consecutive_hull_edges_block_spider():
    for n in range(5, 9):
        s = convex_points(n, seed=1)
        c = three_consecutive_hull_edges(s, 0)
        rep = exists_embedding(spider_tree(n), s, c.edges)
        assert rep.feasible is False
        assert rep.witness is None


def test_path_needs_two_hull_edges_on_convex_points():
    # A crossing-free spanning path on convex points consumes the remaining
    # arc from its ends, so both its first and its last edge join two
    # cyclically adjacent points. Forbidding all hull edges, or all but one,
    # blocks the path; leaving two disjoint hull edges restores it.
    s = convex_points(5, seed=1)
    hull = convex_hull(s)
    hull_edges = [Edge(hull[i], hull[(i + 1) % 5]) for i in range(5)]
    path = Tree(5, [(i, i + 1) for i in range(4)])
    assert exists_embedding(path, s, EdgeSet(hull_edges)).feasible is False
    for keep in range(5):
        rest = EdgeSet(e for i, e in enumerate(hull_edges) if i != keep)
        assert exists_embedding(path, s, rest).feasible is False
    rest = EdgeSet(hull_edges[1:3] + hull_edges[4:])
    rep = exists_embedding(path, s, rest)
    assert rep.feasible is True
    assert rep.witness.hull_edges_used() == 2


def test_forbids_trivial():
    s = random_points(6, seed=2)
    for t in all_trees(4):
        assert not forbids(EdgeSet(), t, s)
    assert forbids(complete_edge_set(6), Tree(2, [(0, 1)]), s)


def test_forbids_monotone_under_supersets():
    s = convex_points(6, seed=1)
    c = three_consecutive_hull_edges(s, 0)
    t = spider_tree(6)
    assert forbids(c.edges, t, s)
    hull = convex_hull(s)
    bigger = EdgeSet(list(c.edges) + [Edge(hull[4], hull[5])])
    assert forbids(bigger, t, s)


def test_budget_exhaustion_is_unknown_not_infeasible():
    s = random_points(7, seed=1)
    t = all_trees(7)[0]
    rep = exists_embedding(t, s, budget=3)
    assert rep.feasible is None
    assert rep.unknown
    assert rep.witness is None
    with pytest.raises(SearchBudgetExceeded):
        forbids(EdgeSet(), t, s, budget=3)


def test_verdict_independent_of_vertex_order():
    s = convex_points(6, seed=1)
    c = three_consecutive_hull_edges(s, 0)
    t = spider_tree(6)
    orders = [
        [0, 1, 2, 3, 4, 5],
        [0, 4, 5, 1, 2, 3],
        [2, 1, 0, 3, 4, 5],
    ]
    verdicts = set()
    for order in orders:
        # order must walk the tree: fix up to a BFS-compatible order
        rep = exists_embedding(t, s, c.edges, vertex_order=_bfs_compatible(t, order))
        verdicts.add(rep.feasible)
    assert verdicts == {False}


def _bfs_compatible(t, preference):
    seen = []
    frontier = [preference[0]]
    while frontier:
        frontier.sort(key=preference.index)
        v = frontier.pop(0)
        seen.append(v)
        for w in t.adjacency[v]:
            if w not in seen and w not in frontier:
                frontier.append(w)
    return seen


def test_report_counters_and_json():
    s = convex_points(5, seed=1)
    rep = exists_embedding(spider_tree(5), s, EdgeSet([Edge(0, 1)]))
    assert rep.nodes_expanded > 0
    data = rep.to_json()
    assert data["feasible"] is True
    assert data["witness"]["crossings"] == 0
    assert set(rep.prunes) == {"crossing", "forbidden"}
    unk = exists_embedding(spider_tree(5), s, budget=2).to_json()
    assert unk["feasible"] == "unknown"


def test_min_forbidden_k2_needs_every_edge():
    s = random_points(4, seed=5)
    res = min_forbidden_set_size(s, 2, size_cap=6)
    assert res is not None
    assert res.size == 6
    assert set(res.edges) == set(complete_edge_set(4))


def test_min_forbidden_convex_is_three():
    for n in (5, 6):
        s = convex_points(n, seed=1)
        res = min_forbidden_set_size(s, n, 3)
        assert res is not None and res.size == 3
        assert forbids(res.edges, res.tree, s)


def test_min_forbidden_none_within_cap():
    s = convex_points(6, seed=1)
    assert min_forbidden_set_size(s, 6, 2) is None


def test_min_forbidden_range_checks():
    with pytest.raises(ValueError):
        min_forbidden_set_size(random_points(8, seed=1), 4, 3)
    with pytest.raises(ValueError):
        min_forbidden_set_size(random_points(5, seed=1), 1, 3)


def test_verify_construction_consecutive_and_blanket():
    from forbidtree.forbid import r_edge_blanket

    for n in (5, 6, 7):
        s = convex_points(n, seed=1)
        assert verify_construction(three_consecutive_hull_edges(s, 0), s)
    s = convex_points(8, seed=1)
    assert verify_construction(r_edge_blanket(s, 5), s)


def test_verify_construction_subset_route_matches_global():
    from forbidtree.forbid import r_edge_blanket

    s = convex_points(7, seed=1)
    c = r_edge_blanket(s, 4)
    # subset decomposition and the direct global search agree
    assert verify_construction(c, s) == forbids(c.edges, c.target_tree, s)


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        exists_embedding(spider_tree(8), random_points(6, seed=1))
