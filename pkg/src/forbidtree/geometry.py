"""Exact planar geometry over integer coordinates.

All predicates are computed with exact integer arithmetic; point sets are
validated to be in general position (no three collinear) at construction,
so every downstream crossing/orientation test is branch-free and exact.
All types are immutable values and all operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

# Coordinates bounded so a 3-point orientation determinant fits in signed
# 64-bit arithmetic: |x|,|y| <= 2^30 gives |det| < 2^63.
COORD_BOUND = 1 << 30


class GeneralPositionError(ValueError):
    """Raised when a point set violates the general-position contract."""


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("coordinates must be integers")
        if abs(self.x) > COORD_BOUND or abs(self.y) > COORD_BOUND:
            raise ValueError(f"coordinate magnitude exceeds {COORD_BOUND}")


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p).

    +1 = counter-clockwise turn, -1 = clockwise, 0 = collinear.
    """
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


@dataclass(frozen=True)
class Edge:
    """Unordered pair of point indices, stored with a < b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("edge endpoints must differ")
        if self.a < 0 or self.b < 0:
            raise ValueError("edge indices must be non-negative")
        if self.a > self.b:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    def shares_endpoint(self, other: "Edge") -> bool:
        return bool({self.a, self.b} & {other.a, other.b})

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Edge":
        a, b = data
        return cls(int(a), int(b))


class EdgeSet:
    """A set of edges over one point set; no duplicates by construction."""

    def __init__(self, edges: Iterable[Edge] = ()):
        self._edges = frozenset(edges)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def __len__(self):
        return len(self._edges)

    def __iter__(self):
        return iter(sorted(self._edges, key=lambda e: (e.a, e.b)))

    def __contains__(self, e: Edge) -> bool:
        return e in self._edges

    def __eq__(self, other):
        return isinstance(other, EdgeSet) and self._edges == other._edges

    def __hash__(self):
        return hash(self._edges)

    def __repr__(self):
        return f"EdgeSet({sorted((e.a, e.b) for e in self._edges)})"

    def validate_for(self, s: "PointSet") -> None:
        n = len(s)
        for e in self._edges:
            if e.b >= n:
                raise IndexError(f"edge {e} out of range for {n} points")

    def to_json(self) -> dict:
        return {"edges": [e.to_json() for e in self]}

    @classmethod
    def from_json(cls, data: dict) -> "EdgeSet":
        return cls(Edge.from_json(pair) for pair in data["edges"])


class PointSet:
    """Ordered, indexed collection of points in general position.

    General position (no two coincident, no three collinear) is enforced
    eagerly at construction; violations raise GeneralPositionError rather
    than degrading later predicates.
    """

    def __init__(self, points: Iterable[Point | tuple[int, int]]):
        pts = tuple(
            p if isinstance(p, Point) else Point(int(p[0]), int(p[1]))
            for p in points
        )
        if len(set(pts)) != len(pts):
            raise GeneralPositionError("coincident points")
        n = len(pts)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if orient(pts[i], pts[j], pts[k]) == 0:
                        raise GeneralPositionError(
                            f"collinear triple at indices {i},{j},{k}"
                        )
        self._points = pts
        self._hull: tuple[int, ...] | None = None
        self._cross_sets: dict[int, frozenset[int]] | None = None

    def __len__(self):
        return len(self._points)

    def __getitem__(self, i: int) -> Point:
        return self._points[i]

    def __iter__(self):
        return iter(self._points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self._points == other._points

    def __hash__(self):
        return hash(self._points)

    def __repr__(self):
        return f"PointSet({[(p.x, p.y) for p in self._points]})"

    def orient_idx(self, i: int, j: int, k: int) -> int:
        return orient(self._points[i], self._points[j], self._points[k])

    def subset(self, indices: Sequence[int]) -> "PointSet":
        """Sub point set over the given indices, in ascending index order."""
        return PointSet(self._points[i] for i in sorted(indices))

    def edge_id(self, e: Edge) -> int:
        return e.a * len(self) + e.b

    def crossing_sets(self) -> dict[int, frozenset[int]]:
        """For each edge id, the set of edge ids it properly crosses.

        Computed lazily once per point set; used by the search oracle for
        O(1)-ish incremental crossing checks.
        """
        if self._cross_sets is None:
            n = len(self)
            all_edges = [Edge(a, b) for a in range(n) for b in range(a + 1, n)]
            crossing: dict[int, set[int]] = {self.edge_id(e): set() for e in all_edges}
            for i, e1 in enumerate(all_edges):
                for e2 in all_edges[i + 1:]:
                    if segments_cross(self, e1, e2):
                        crossing[self.edge_id(e1)].add(self.edge_id(e2))
                        crossing[self.edge_id(e2)].add(self.edge_id(e1))
            self._cross_sets = {k: frozenset(v) for k, v in crossing.items()}
        return self._cross_sets

    def to_json(self) -> dict:
        return {"points": [[p.x, p.y] for p in self._points]}

    @classmethod
    def from_json(cls, data: dict) -> "PointSet":
        return cls((int(x), int(y)) for x, y in data["points"])


def segments_cross(s: PointSet, e1: Edge, e2: Edge) -> bool:
    """True iff the open segments properly cross (interiors intersect).

    Edges sharing an endpoint never cross; e1 == e2 returns False.
    General position rules out collinear overlaps, so the pure sign test
    is exact.
    """
    if e1 == e2 or e1.shares_endpoint(e2):
        return False
    n = len(s)
    for e in (e1, e2):
        if e.b >= n:
            raise IndexError(f"edge {e} out of range for {n} points")
    p1, p2 = s[e1.a], s[e1.b]
    q1, q2 = s[e2.a], s[e2.b]
    d1 = orient(p1, p2, q1)
    d2 = orient(p1, p2, q2)
    d3 = orient(q1, q2, p1)
    d4 = orient(q1, q2, p2)
    return d1 != d2 and d3 != d4


def convex_hull(s: PointSet) -> list[int]:
    """Indices of hull vertices in counter-clockwise order.

    Monotone chain; output rotated to start at the smallest hull index so
    the result is a canonical function of the point set.
    """
    n = len(s)
    if n < 3:
        raise ValueError("convex hull requires at least 3 points")
    if s._hull is not None:
        return list(s._hull)
    order = sorted(range(n), key=lambda i: (s[i].x, s[i].y))
    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and orient(s[lower[-2]], s[lower[-1]], s[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and orient(s[upper[-2]], s[upper[-1]], s[i]) <= 0:
            upper.pop()
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    start = hull.index(min(hull))
    hull = hull[start:] + hull[:start]
    s._hull = tuple(hull)
    return list(hull)


def is_convex_position(s: PointSet) -> bool:
    return len(s) >= 3 and len(convex_hull(s)) == len(s)


def hull_position(s: PointSet) -> dict[int, int]:
    """Map point index -> position along the hull order (convex sets)."""
    hull = convex_hull(s)
    if len(hull) != len(s):
        raise ValueError("point set is not in convex position")
    return {idx: pos for pos, idx in enumerate(hull)}


def angular_sort(s: PointSet, center: int, subset: Sequence[int]) -> list[int]:
    """Sort subset counter-clockwise by angle around a hull-vertex center.

    The returned order starts at the clockwise angular extreme, so the whole
    subset spans a salient (< pi) interval and the first/last entries are
    the two extremes. Raises ValueError if center is not a hull vertex of
    {center} + subset (the span would exceed pi and no such order exists).
    """
    pts = [i for i in subset if i != center]
    if len(pts) <= 1:
        return pts
    c = s[center]

    def cmp(i: int, j: int) -> int:
        return -orient(c, s[i], s[j])

    out = sorted(pts, key=cmp_to_key(cmp))
    for a, b in zip(out, out[1:]):
        if orient(c, s[a], s[b]) != 1:
            raise ValueError("center is not a hull vertex of the combined set")
    if orient(c, s[out[0]], s[out[-1]]) != 1:
        raise ValueError("center is not a hull vertex of the combined set")
    return out


def polar_order(s: PointSet, center: int, subset: Sequence[int]) -> list[int]:
    """Full-circle CCW order of subset around center, starting at +x axis.

    Unlike angular_sort this supports interior centers (span up to 2*pi).
    """
    c = s[center]
    upper: list[int] = []
    lower: list[int] = []
    for i in subset:
        if i == center:
            continue
        dx, dy = s[i].x - c.x, s[i].y - c.y
        if dy > 0 or (dy == 0 and dx > 0):
            upper.append(i)
        else:
            lower.append(i)

    def cmp(i: int, j: int) -> int:
        return -orient(c, s[i], s[j])

    upper.sort(key=cmp_to_key(cmp))
    lower.sort(key=cmp_to_key(cmp))
    return upper + lower


def edge_depth(s: PointSet, e: Edge) -> int:
    """Smaller of the two open half-plane point counts of an edge.

    The two counts always sum to n - 2 in general position; hull edges are
    exactly the edges of depth 0.
    """
    n = len(s)
    if e.b >= n:
        raise IndexError(f"edge {e} out of range for {n} points")
    left = 0
    right = 0
    pa, pb = s[e.a], s[e.b]
    for i in range(n):
        if i == e.a or i == e.b:
            continue
        if orient(pa, pb, s[i]) > 0:
            left += 1
        else:
            right += 1
    return min(left, right)


def visible_hull_vertices(s: PointSet, apex: int, cell: Sequence[int]) -> list[int]:
    """Hull vertices of the cell visible from an outside apex point.

    A hull vertex q is visible iff segment (apex, q) does not properly cross
    any hull edge of the cell. Returned in CCW angular order around the apex;
    the two angular extremes are always present.
    """
    if apex in cell:
        raise ValueError("apex must not belong to the cell")
    if len(cell) == 1:
        return list(cell)
    ordered = angular_sort(s, apex, cell)
    if len(cell) == 2:
        return ordered
    sub_indices = sorted(cell)
    sub = s.subset(sub_indices)
    back = {pos: idx for pos, idx in enumerate(sub_indices)}
    hull_local = convex_hull(sub)
    hull_global = [back[h] for h in hull_local]
    hull_edges = [
        Edge(hull_global[i], hull_global[(i + 1) % len(hull_global)])
        for i in range(len(hull_global))
    ]
    visible = []
    for q in ordered:
        if q not in hull_global:
            continue
        probe = Edge(apex, q)
        if not any(segments_cross(s, probe, he) for he in hull_edges):
            visible.append(q)
    return visible
