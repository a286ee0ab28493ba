"""Instance generators, all deterministic in their arguments."""

from __future__ import annotations

import math

from .errors import InputError
from .geometry import Point, SQRT3, require_finite
from .prng import SplitMix64
from .union_area import DiskSet


def gen_spirograph(n: int, epsilon: float, seed: int = 0) -> DiskSet:
    """n unit disks with centers equally spaced on a circle of radius 1 - epsilon.

    Every disk contains the origin; as epsilon -> 0 and n grows the union
    approaches area 4*pi while no two disks can be selected together with one
    colour.  ``seed`` is accepted for interface symmetry and unused.
    """
    if n < 3:
        raise InputError("spirograph needs n >= 3")
    require_finite(epsilon, what="epsilon")
    if not 0.0 < epsilon < 1.0:
        raise InputError("epsilon must lie in (0, 1)")
    r = 1.0 - epsilon
    return DiskSet(1.0, tuple(
        Point(r * math.cos(2.0 * math.pi * k / n), r * math.sin(2.0 * math.pi * k / n))
        for k in range(n)))


def gen_random(n: int, box_side: float, seed: int) -> DiskSet:
    """n unit disks with centers uniform in [0, box_side]^2."""
    if n < 1:
        raise InputError("need n >= 1")
    require_finite(box_side, what="box side")
    if box_side <= 0.0:
        raise InputError("box side must be positive")
    rng = SplitMix64(seed)
    return DiskSet(1.0, tuple(
        Point(rng.uniform(0.0, box_side), rng.uniform(0.0, box_side)) for _ in range(n)))


def gen_clustered(n: int, clusters: int, box_side: float, spread: float,
                  seed: int) -> DiskSet:
    """n unit disks scattered uniformly around ``clusters`` random cluster centers."""
    if n < 1 or clusters < 1:
        raise InputError("need n >= 1 and clusters >= 1")
    require_finite(box_side, spread, what="cluster parameter")
    if box_side <= 0.0 or spread < 0.0:
        raise InputError("box side must be positive and spread non-negative")
    rng = SplitMix64(seed)
    hubs = [Point(rng.uniform(0.0, box_side), rng.uniform(0.0, box_side))
            for _ in range(clusters)]
    centers = []
    for k in range(n):
        hub = hubs[k % clusters]
        centers.append(Point(hub[0] + rng.uniform(-spread, spread),
                             hub[1] + rng.uniform(-spread, spread)))
    return DiskSet(1.0, tuple(centers))


def gen_chain(n: int, spacing: float, start: Point = Point(0.0, 0.0)) -> DiskSet:
    """n unit disks in a row, consecutive centers ``spacing`` apart."""
    if n < 1:
        raise InputError("need n >= 1")
    require_finite(spacing, what="spacing")
    if spacing <= 0.0:
        raise InputError("spacing must be positive")
    return DiskSet(1.0, tuple(Point(start[0] + k * spacing, start[1]) for k in range(n)))


def enclosing_triangle_side(disks: DiskSet) -> float:
    """Side of an upright equilateral triangle that contains every disk."""
    if len(disks) == 0:
        raise InputError("need at least one disk")
    xmin, ymin, xmax, ymax = disks.bbox(pad=0.05)
    return (xmax - xmin) + 2.0 * (ymax - ymin) / SQRT3


def gen_depth_reduction(disks: DiskSet) -> DiskSet:
    """Shift disk i into cell i of a lattice whose side covers the whole input.

    The original set has a point of depth k exactly when a lattice of side
    ``enclosing_triangle_side(disks)`` can be positioned to contain lattice
    points in k of the shifted disks.
    """
    side = enclosing_triangle_side(disks)
    return DiskSet(disks.radius, tuple(
        Point(c[0] + i * side, c[1]) for i, c in enumerate(disks.centers)))
