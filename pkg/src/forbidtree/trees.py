"""Abstract trees: spiders, rooting, canonical forms, exhaustive generation.

Canonical strings use sorted-parenthesization AHU encoding rooted at the
tree center(s); two trees get equal strings iff they are isomorphic. The
encoding is stable across releases.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

MAX_ENUM_VERTICES = 10


class Tree:
    """Unrooted tree on k vertices given by its edge list."""

    def __init__(self, k: int, edges: Iterable[tuple[int, int]]):
        edges = [tuple(sorted(e)) for e in edges]
        if len(edges) != k - 1:
            raise ValueError(f"a tree on {k} vertices needs {k - 1} edges")
        adjacency: list[list[int]] = [[] for _ in range(k)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop")
            if not (0 <= u < k and 0 <= v < k):
                raise ValueError("vertex index out of range")
            if (u, v) in seen:
                raise ValueError("parallel edge")
            seen.add((u, v))
            adjacency[u].append(v)
            adjacency[v].append(u)
        self.k = k
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self.edges = tuple(sorted(seen))
        if k > 1 and not self._connected():
            raise ValueError("tree is not connected")

    def _connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.k

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_path(self) -> bool:
        return self.k <= 2 or all(self.degree(v) <= 2 for v in range(self.k))

    def is_star(self) -> bool:
        return self.k <= 2 or max(self.degree(v) for v in range(self.k)) == self.k - 1

    def __eq__(self, other):
        return isinstance(other, Tree) and self.k == other.k and self.edges == other.edges

    def __hash__(self):
        return hash((self.k, self.edges))

    def __repr__(self):
        return f"Tree(k={self.k}, edges={list(self.edges)})"

    def to_json(self) -> dict:
        return {"k": self.k, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Tree":
        return cls(int(data["k"]), [(int(u), int(v)) for u, v in data["edges"]])


@dataclass(frozen=True)
class RootedTree:
    """Tree plus root, parent pointers, ordered children and subtree sizes."""

    tree: Tree
    root: int
    children: tuple[tuple[int, ...], ...]
    parent: tuple[int | None, ...]
    subtree_size: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.tree.k

    def with_children(self, children: dict[int, list[int]]) -> "RootedTree":
        """Copy with some vertices' child lists replaced (structure unchanged)."""
        new = list(self.children)
        for v, order in children.items():
            if sorted(order) != sorted(new[v]):
                raise ValueError("reordered children must be a permutation")
            new[v] = tuple(order)
        return RootedTree(self.tree, self.root, tuple(new), self.parent, self.subtree_size)


def root_at(t: Tree, v: int) -> RootedTree:
    """Root the tree at v; children initially in ascending index order."""
    if not (0 <= v < t.k):
        raise ValueError(f"vertex {v} out of range")
    parent: list[int | None] = [None] * t.k
    children: list[list[int]] = [[] for _ in range(t.k)]
    order = []
    queue = deque([v])
    seen = {v}
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in t.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                children[u].append(w)
                queue.append(w)
    size = [1] * t.k
    for u in reversed(order):
        for c in children[u]:
            size[u] += size[c]
    return RootedTree(
        tree=t,
        root=v,
        children=tuple(tuple(c) for c in children),
        parent=tuple(parent),
        subtree_size=tuple(size),
    )


def sort_children_by_subtree_size(rt: RootedTree, ascending: bool = True) -> RootedTree:
    """Reorder every child list by subtree size; ties break by vertex index."""
    new = {}
    for v in range(rt.k):
        kids = list(rt.children[v])
        kids.sort(key=lambda c: (rt.subtree_size[c], c) if ascending
                  else (-rt.subtree_size[c], c))
        new[v] = kids
    return rt.with_children(new)


def spider_tree(n: int) -> Tree:
    """The spider T_n: vertex 0 is the center.

    n = 2 is a single edge. Odd n: (n-1)/2 legs, each a path of length 2.
    Even n > 2: one leg of length 3 and (n-4)/2 legs of length 2 (one leg of
    the odd spider on n-1 vertices with an edge subdivided; any choice of
    subdivided edge gives an isomorphic tree).
    """
    if n < 2:
        raise ValueError("spider trees need n >= 2")
    if n == 2:
        return Tree(2, [(0, 1)])
    edges = []
    nxt = 1
    if n % 2 == 0:
        edges += [(0, 1), (1, 2), (2, 3)]
        nxt = 4
    while nxt < n:
        edges += [(0, nxt), (nxt, nxt + 1)]
        nxt += 2
    return Tree(n, edges)


def _center_vertices(t: Tree) -> list[int]:
    """1 or 2 middle vertices found by repeatedly stripping leaves."""
    if t.k == 1:
        return [0]
    degree = [t.degree(v) for v in range(t.k)]
    layer = [v for v in range(t.k) if degree[v] == 1]
    remaining = t.k
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in t.adjacency[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
            degree[v] = 0
        layer = nxt
    return sorted(layer)


def _rooted_encoding(t: Tree, root: int) -> str:
    def enc(v: int, par: int) -> str:
        subs = sorted(enc(u, v) for u in t.adjacency[v] if u != par)
        return "(" + "".join(subs) + ")"

    return enc(root, -1)


def ahu_canonical(t: Tree) -> str:
    """Canonical string: minimum center-rooted AHU encoding."""
    return min(_rooted_encoding(t, c) for c in _center_vertices(t))


def _prufer_to_edges(seq: tuple[int, ...], k: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence; repeatedly joins the smallest current leaf.

    Pointer trick: consumed vertices drop to degree 0 so the forward scan
    skips them; a vertex below the pointer that just became a leaf is used
    immediately (it is smaller than every unscanned candidate).
    """
    degree = [1] * k
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        leaf = x if (degree[x] == 1 and x < ptr) else -1
    last = [v for v in range(k) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def _canon_from_edges(edges: list[tuple[int, int]], k: int) -> str:
    adjacency: list[list[int]] = [[] for _ in range(k)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    # inline center finding + encoding on raw adjacency (hot path)
    degree = [len(a) for a in adjacency]
    layer = [v for v in range(k) if degree[v] == 1]
    remaining = k
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adjacency[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
            degree[v] = 0
        layer = nxt

    def enc(v: int, par: int) -> str:
        subs = sorted(enc(u, v) for u in adjacency[v] if u != par)
        return "(" + "".join(subs) + ")"

    return min(enc(c, -1) for c in sorted(layer))


def _all_trees_prufer(k: int) -> list[Tree]:
    found: dict[str, Tree] = {}
    if k == 2:
        return [Tree(2, [(0, 1)])]
    for seq in itertools.product(range(k), repeat=k - 2):
        edges = _prufer_to_edges(seq, k)
        canon = _canon_from_edges(edges, k)
        if canon not in found:
            found[canon] = Tree(k, edges)
    return [found[c] for c in sorted(found)]


def _all_trees_grow(k: int) -> list[Tree]:
    """Extend every (k-1)-vertex class by one leaf in every position.

    Every tree on k vertices arises from a tree on k-1 vertices by leaf
    removal, so this enumeration is exhaustive; AHU dedup keeps one
    representative per class.
    """
    level = {ahu_canonical(Tree(2, [(0, 1)])): Tree(2, [(0, 1)])}
    for m in range(3, k + 1):
        nxt: dict[str, Tree] = {}
        for t in level.values():
            for v in range(t.k):
                grown = Tree(m, list(t.edges) + [(v, m - 1)])
                canon = ahu_canonical(grown)
                if canon not in nxt:
                    nxt[canon] = grown
        level = nxt
    return [level[c] for c in sorted(level)]


@lru_cache(maxsize=None)
def _all_trees_cached(k: int) -> tuple[Tree, ...]:
    # Brute Prufer enumeration is the reference route; for k >= 9 the
    # k^(k-2) sequences are impractical in-process, so leaf growth (also
    # exhaustive, cross-checked against the Prufer route in tests) is used.
    if k <= 8:
        return tuple(_all_trees_prufer(k))
    return tuple(_all_trees_grow(k))


def all_trees(k: int) -> list[Tree]:
    """One representative per isomorphism class of trees on k vertices.

    Deterministic order (sorted by canonical string). Supported for
    2 <= k <= 10.
    """
    if not (2 <= k <= MAX_ENUM_VERTICES):
        raise ValueError(f"supported range is 2..{MAX_ENUM_VERTICES}")
    return list(_all_trees_cached(k))
