"""Exact and Monte Carlo area of a union of equal disks.

The exact routine decomposes the union boundary into circle arcs: for each
circle, the arcs not strictly inside any other disk survive, and each
counterclockwise arc from phi1 to phi2 on circle (c, R) contributes

    (R^2*(phi2 - phi1) + R*(c_x*(sin phi2 - sin phi1)
                            - c_y*(cos phi2 - cos phi1))) / 2

by Green's theorem.  Summing contributions over all surviving arcs gives the
union area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import InputError
from .geometry import EPS, Point, TWO_PI, require_finite
from .prng import double_block


@dataclass(frozen=True)
class DiskSet:
    """Equal-radius disks given by their centers; duplicates permitted."""

    radius: float
    centers: tuple[Point, ...]

    def __post_init__(self) -> None:
        require_finite(self.radius, what="radius")
        if self.radius <= 0.0:
            raise InputError("disk radius must be positive")
        for p in self.centers:
            require_finite(p[0], p[1], what="disk center")
        object.__setattr__(self, "centers", tuple(Point(p[0], p[1]) for p in self.centers))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]], radius: float = 1.0) -> "DiskSet":
        return cls(radius, tuple(Point(float(x), float(y)) for x, y in pairs))

    def __len__(self) -> int:
        return len(self.centers)

    def centers_array(self) -> np.ndarray:
        if not self.centers:
            return np.empty((0, 2), dtype=float)
        return np.array(self.centers, dtype=float)

    def bbox(self, pad: float = 0.0) -> tuple[float, float, float, float]:
        if not self.centers:
            return (0.0, 0.0, 0.0, 0.0)
        xs = [p[0] for p in self.centers]
        ys = [p[1] for p in self.centers]
        m = self.radius + pad
        return (min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m)

    def subset(self, indices: Iterable[int]) -> "DiskSet":
        return DiskSet(self.radius, tuple(self.centers[i] for i in indices))


def _uncovered_arcs(intervals: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Complement on the circle of a union of (start, length) angle intervals.

    Returns (phi1, phi2) arcs with phi2 > phi1; phi2 may exceed 2*pi for the
    single arc that wraps through zero.
    """
    if not intervals:
        return [(0.0, TWO_PI)]
    parts: list[list[float]] = []
    for s, length in intervals:
        s = s % TWO_PI
        e = s + length
        if e <= TWO_PI:
            parts.append([s, e])
        else:
            parts.append([s, TWO_PI])
            parts.append([0.0, e - TWO_PI])
    parts.sort()
    merged = [parts[0]]
    for s, e in parts[1:]:
        if s <= merged[-1][1] + 1e-15:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    gaps = []
    for (s0, e0), (s1, e1) in zip(merged, merged[1:]):
        if s1 - e0 > 1e-15:
            gaps.append((e0, s1))
    wrap = (TWO_PI - merged[-1][1]) + merged[0][0]
    if wrap > 1e-15:
        gaps.append((merged[-1][1], merged[0][0] + TWO_PI))
    return gaps


def _arc_contribution(cx: float, cy: float, r: float, p1: float, p2: float) -> float:
    return 0.5 * (r * r * (p2 - p1)
                  + r * (cx * (math.sin(p2) - math.sin(p1))
                         - cy * (math.cos(p2) - math.cos(p1))))


def exact_union_area(disks: DiskSet) -> float:
    """Exact area of the union; empty input gives 0 by convention."""
    if len(disks) == 0:
        return 0.0
    r = disks.radius
    centers = sorted(set(disks.centers))  # coincident circles collapse
    n = len(centers)
    if n == 1:
        return math.pi * r * r
    pts = np.array(centers, dtype=float)
    total = 0.0
    for i in range(n):
        dx = pts[:, 0] - pts[i, 0]
        dy = pts[:, 1] - pts[i, 1]
        d = np.hypot(dx, dy)
        near = np.nonzero((d > 0.0) & (d < 2.0 * r))[0]
        if near.size == 0:
            total += math.pi * r * r
            continue
        alpha = np.arctan2(dy[near], dx[near])
        beta = np.arccos(np.clip(d[near] / (2.0 * r), -1.0, 1.0))
        intervals = [(float(a - b), float(2.0 * b)) for a, b in zip(alpha, beta)]
        arcs = _uncovered_arcs(intervals)
        if not arcs:
            continue
        # midpoint classification: drop arcs strictly inside some other disk
        mids = np.array([(0.5 * (p1 + p2)) for p1, p2 in arcs])
        mx = pts[i, 0] + r * np.cos(mids)
        my = pts[i, 1] + r * np.sin(mids)
        dist2 = (mx[:, None] - pts[None, :, 0]) ** 2 + (my[:, None] - pts[None, :, 1]) ** 2
        dist2[:, i] = np.inf
        covered = (dist2 < (r - EPS) ** 2).any(axis=1)
        for keep, (p1, p2) in zip(~covered, arcs):
            if keep:
                total += _arc_contribution(pts[i, 0], pts[i, 1], r, p1, p2)
    return float(total)


class MCEstimate(NamedTuple):
    area: float
    stderr: float


def monte_carlo_union_area(disks: DiskSet, samples: int, seed: int) -> MCEstimate:
    """Hit-or-miss estimate over the bounding box; deterministic given seed.

    Sample k uses stream draws 2k and 2k+1 for x and y.
    """
    if samples < 1:
        raise InputError("samples must be >= 1")
    if len(disks) == 0:
        return MCEstimate(0.0, 0.0)
    xmin, ymin, xmax, ymax = disks.bbox()
    w = xmax - xmin
    h = ymax - ymin
    box = w * h
    pts = disks.centers_array()
    r2 = disks.radius * disks.radius
    hits = 0
    chunk = 1 << 17
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        u = double_block(seed, 2 * done, 2 * m)
        xs = xmin + w * u[0::2]
        ys = ymin + h * u[1::2]
        covered = np.zeros(m, dtype=bool)
        for base in range(0, len(pts), 64):
            blk = pts[base:base + 64]
            d2 = (xs[:, None] - blk[None, :, 0]) ** 2 + (ys[:, None] - blk[None, :, 1]) ** 2
            covered |= (d2 <= r2).any(axis=1)
        hits += int(covered.sum())
        done += m
    p = hits / samples
    return MCEstimate(box * p, box * math.sqrt(max(p * (1.0 - p), 0.0) / samples))


def scaled_union_area(disks: DiskSet, r: float) -> float:
    """Union area after scaling every radius by r in [0, 1], centers fixed."""
    require_finite(r, what="scale factor")
    if r < 0.0 or r > 1.0:
        raise InputError("scale factor must lie in [0, 1]")
    if r == 0.0 or len(disks) == 0:
        return 0.0
    return exact_union_area(DiskSet(disks.radius * r, disks.centers))
