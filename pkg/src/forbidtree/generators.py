"""Seeded, reproducible point-set generators.

All randomness flows through random.Random(seed) (Mersenne Twister), so a
seed fully determines the output on every platform.
"""
from __future__ import annotations

import math
import random

from .geometry import GeneralPositionError, PointSet, convex_hull

CONVEX_RADIUS = 10**6
RANDOM_SPAN = 10**6
_MAX_ATTEMPTS = 200


class GenerationError(RuntimeError):
    """Raised when a valid point set cannot be produced within the attempt cap."""


def convex_points(n: int, seed: int = 1, radius: int = CONVEX_RADIUS) -> PointSet:
    """n integer points in convex position on a large circle.

    Angles are a jittered regular n-gon; rounding to integers can break
    convexity or general position, so candidates are re-validated and the
    jitter re-drawn until a valid set appears.
    """
    if n < 3:
        raise ValueError("convex position requires n >= 3")
    rng = random.Random(seed)
    spacing = 2 * math.pi / n
    for _ in range(_MAX_ATTEMPTS):
        coords = []
        for i in range(n):
            theta = spacing * i + rng.uniform(-0.3, 0.3) * spacing
            coords.append((round(radius * math.cos(theta)), round(radius * math.sin(theta))))
        try:
            s = PointSet(coords)
        except GeneralPositionError:
            continue
        if len(convex_hull(s)) == n:
            return s
    raise GenerationError(f"no convex general-position set after {_MAX_ATTEMPTS} attempts")


def random_points(n: int, seed: int = 1, span: int = RANDOM_SPAN) -> PointSet:
    """n integer points in general position, uniform in a box, by rejection."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    pts: list[tuple[int, int]] = []
    rejected = 0
    while len(pts) < n:
        cand = (rng.randint(-span, span), rng.randint(-span, span))
        if _degenerate(pts, cand):
            rejected += 1
            if rejected > _MAX_ATTEMPTS * n:
                raise GenerationError("rejection sampling failed to reach general position")
            continue
        pts.append(cand)
    return PointSet(pts)


def _degenerate(pts: list[tuple[int, int]], cand: tuple[int, int]) -> bool:
    if cand in pts:
        return True
    cx, cy = cand
    for i in range(len(pts)):
        ax, ay = pts[i]
        for j in range(i + 1, len(pts)):
            bx, by = pts[j]
            if (bx - ax) * (cy - ay) == (by - ay) * (cx - ax):
                return True
    return False
