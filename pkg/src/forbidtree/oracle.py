"""Exhaustive backtracking oracle for tree embeddability under forbidden edges.

This is the ground truth the constructive embedders and the forbidden-set
constructions are checked against. A feasibility search is exact within its
node budget; running out of budget is a distinct "unknown" outcome, never
conflated with infeasibility.
"""
from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, field

from .embedding import Embedding
from .geometry import Edge, EdgeSet, PointSet, convex_hull
from .trees import Tree, all_trees, root_at

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """A search hit its node budget before reaching a verdict."""


@dataclass
class SearchReport:
    """Outcome of one feasibility search.

    feasible is True/False for settled verdicts and None when the budget ran
    out; a witness is present exactly when feasible is True.
    """

    feasible: bool | None
    witness: Embedding | None
    nodes_expanded: int
    prunes: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def unknown(self) -> bool:
        return self.feasible is None

    def to_json(self) -> dict:
        return {
            "feasible": "unknown" if self.feasible is None else self.feasible,
            "witness": self.witness.to_json() if self.witness else None,
            "nodes": self.nodes_expanded,
            "prunes": dict(self.prunes),
            "ms": round(self.elapsed * 1000, 3),
        }


def _search_order(t: Tree, start: int | None = None) -> list[int]:
    """BFS order from a max-degree vertex: early placements constrain most edges."""
    if start is None:
        start = min(range(t.k), key=lambda v: (-t.degree(v), v))
    order = []
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in t.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def exists_embedding(
    t: Tree,
    s: PointSet,
    forbidden: EdgeSet | None = None,
    budget: int = DEFAULT_BUDGET,
    vertex_order: list[int] | None = None,
) -> SearchReport:
    """Decide whether the tree embeds into the point set avoiding forbidden edges.

    DFS over injective vertex-to-point assignments in a BFS vertex order, so
    each newly placed vertex adds exactly one drawn edge; branches are pruned
    the moment that edge is forbidden or crosses an earlier one. Exhaustive
    within the budget.
    """
    k, n = t.k, len(s)
    if k > n:
        raise ValueError(f"tree on {k} vertices cannot embed into {n} points")
    if budget <= 0:
        raise ValueError("budget must be positive")
    forbidden = forbidden or EdgeSet()
    forbidden.validate_for(s)
    forb_ids = frozenset(s.edge_id(e) for e in forbidden)
    start = time.perf_counter()
    prunes = {"crossing": 0, "forbidden": 0}

    if k == 1:
        emb = Embedding(root_at(t, 0), s, (0,))
        return SearchReport(True, emb, 1, prunes, time.perf_counter() - start)

    order = vertex_order if vertex_order is not None else _search_order(t)
    if sorted(order) != list(range(k)):
        raise ValueError("vertex_order must be a permutation of the vertices")
    # parent of each vertex among its predecessors in the order
    placed_rank = {v: i for i, v in enumerate(order)}
    parent_of = [-1] * k
    for v in order[1:]:
        earlier = [w for w in t.adjacency[v] if placed_rank[w] < placed_rank[v]]
        if len(earlier) != 1:
            raise ValueError("vertex_order must place a neighbor before each vertex")
        parent_of[v] = earlier[0]

    cross = s.crossing_sets()
    asg = [-1] * k
    used = [False] * n
    placed_ids: set[int] = set()
    nodes = 0

    def edge_id(a: int, b: int) -> int:
        return a * n + b if a < b else b * n + a

    def dfs(i: int) -> bool:
        nonlocal nodes
        v = order[i]
        par_pt = asg[parent_of[v]] if i > 0 else -1
        for pt in range(n):
            if used[pt]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded
            eid = -1
            if i > 0:
                eid = edge_id(par_pt, pt)
                if eid in forb_ids:
                    prunes["forbidden"] += 1
                    continue
                if not cross[eid].isdisjoint(placed_ids):
                    prunes["crossing"] += 1
                    continue
                placed_ids.add(eid)
            used[pt] = True
            asg[v] = pt
            if i + 1 == k or dfs(i + 1):
                return True
            used[pt] = False
            if i > 0:
                placed_ids.discard(eid)
        return False

    try:
        found = dfs(0)
    except SearchBudgetExceeded:
        return SearchReport(None, None, nodes, prunes, time.perf_counter() - start)
    witness = None
    if found:
        witness = Embedding(root_at(t, order[0]), s, tuple(asg))
        witness.validate()
        if not witness.avoids(forbidden):
            raise AssertionError("oracle witness uses a forbidden edge")
    return SearchReport(found, witness, nodes, prunes, time.perf_counter() - start)


def forbids(
    forbidden: EdgeSet,
    t: Tree,
    s: PointSet,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """True iff every embedding of the tree uses a forbidden edge."""
    report = exists_embedding(t, s, forbidden, budget)
    if report.unknown:
        raise SearchBudgetExceeded(f"verdict unknown after {report.nodes_expanded} nodes")
    return not report.feasible


MAX_SEARCH_POINTS = 7


@dataclass(frozen=True)
class MinForbidResult:
    size: int
    edges: EdgeSet
    tree: Tree


def _dihedral_canonical(positions: dict[int, int], n: int, subset: tuple[Edge, ...]):
    """Canonical form of an edge subset under hull rotations and reflections."""
    pos_pairs = [(positions[e.a], positions[e.b]) for e in subset]
    best = None
    for r in range(n):
        for refl in (False, True):
            mapped = []
            for a, b in pos_pairs:
                if refl:
                    a, b = (r - a) % n, (r - b) % n
                else:
                    a, b = (a + r) % n, (b + r) % n
                mapped.append((a, b) if a < b else (b, a))
            mapped.sort()
            key = tuple(mapped)
            if best is None or key < best:
                best = key
    return best


def min_forbidden_set_size(
    s: PointSet,
    k: int,
    size_cap: int,
    budget: int = DEFAULT_BUDGET,
) -> MinForbidResult | None:
    """Smallest edge subset (up to the cap) forbidding some k-vertex tree.

    Enumerates subsets in size order; for convex inputs only one
    representative per dihedral symmetry class of the hull order is tested.
    Returns None when no subset within the cap forbids any tree.
    """
    n = len(s)
    if n > MAX_SEARCH_POINTS:
        raise ValueError(f"practical range is n <= {MAX_SEARCH_POINTS}")
    if not (2 <= k <= n):
        raise ValueError("need 2 <= k <= n")
    if size_cap < 1:
        raise ValueError("size_cap must be positive")
    trees = all_trees(k)
    edges = [Edge(a, b) for a in range(n) for b in range(a + 1, n)]
    convex = len(convex_hull(s)) == n
    positions = hull_pos = None
    if convex:
        hull = convex_hull(s)
        hull_pos = {idx: p for p, idx in enumerate(hull)}
    seen_classes: set = set()
    for m in range(1, min(size_cap, len(edges)) + 1):
        seen_classes.clear()
        for combo in itertools.combinations(edges, m):
            if convex:
                key = _dihedral_canonical(hull_pos, n, combo)
                if key in seen_classes:
                    continue
                seen_classes.add(key)
            fset = EdgeSet(combo)
            for t in trees:
                if forbids(fset, t, s, budget):
                    return MinForbidResult(m, fset, t)
    return None


def verify_construction(construction, s: PointSet, budget: int = DEFAULT_BUDGET) -> bool:
    """Check a forbidding construction against the oracle.

    For depth-blanket constructions with k < n this walks every k-point
    subset and checks the target tree cannot embed into it avoiding the
    blanket's induced edges (equivalent to the global search, but mirrors
    the subset argument the construction is built on and localizes any
    failure to a subset).
    """
    target = construction.target_tree
    k = target.k
    n = len(s)
    construction.edges.validate_for(s)
    if construction.kind == "r-edge-blanket" and k < n:
        forb_pairs = {(e.a, e.b) for e in construction.edges}
        for subset in itertools.combinations(range(n), k):
            remap = {orig: i for i, orig in enumerate(subset)}
            sub = s.subset(subset)
            inside = set(subset)
            induced = EdgeSet(
                Edge(remap[a], remap[b])
                for a, b in forb_pairs
                if a in inside and b in inside
            )
            report = exists_embedding(target, sub, induced, budget)
            if report.unknown:
                raise SearchBudgetExceeded("subset verdict unknown")
            if report.feasible:
                return False
        return True
    return forbids(construction.edges, target, s, budget)
