"""End-to-end solvers: position a lattice, select one disk per in-union
lattice point, colour by lattice colour.

Same-coloured selected disks are disjoint by construction: the same-colour
sublattice distance minus two disk radii is at least the disjointness
threshold for every lattice used here.  Coverage reports carry both the true
union area of the selection and the per-cell accounting that underlies the
guarantees.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .arrangement import max_distinct_translate_depth, translate_to_cell
from .bounds import bound_table, kcolour_guarantee, alpha_k
from .errors import InputError, VerificationError
from .geometry import Circle, EPS, Point, circle_polygon_intersection_area
from .lattice import (LatticePoint, LoeschianColouring, SquareLattice, TriLattice,
                      ONE_COLOUR_SIDE, THREE_COLOUR_SIDE, TWO_COLOUR_SIDE,
                      loeschian_decompose)
from .union_area import DiskSet, exact_union_area

THREADS_ENV = "DISKPACK_THREADS"


@dataclass(frozen=True)
class LatticeInfo:
    kind: str
    side: float
    offset: Point


@dataclass(frozen=True)
class Assignment:
    labels: tuple[Optional[int], ...]
    k: int
    method: str
    lattice: Optional[LatticeInfo]

    @property
    def selected_count(self) -> int:
        return sum(1 for c in self.labels if c is not None)

    def selected_indices(self) -> list[int]:
        return [i for i, c in enumerate(self.labels) if c is not None]


@dataclass(frozen=True)
class CoverageReport:
    union_area: float
    selected_union_area: float
    ratio: float
    guarantee: float
    lattice_points_hit: int
    lattice_offset: Optional[Point]
    positioning_depth: Optional[int] = None
    cell_area_bound: Optional[float] = None


@dataclass(frozen=True)
class OffsetSampling:
    """Candidate offsets for the weight-maximizing solver: a grid over the
    fundamental cell plus the positioning candidates of the count solver."""

    grid_resolution: int = 256
    include_arrangement_candidates: bool = True

    def __post_init__(self) -> None:
        if self.grid_resolution < 1:
            raise InputError("grid resolution must be >= 1")


def _method_guarantee(method: str, k: int) -> float:
    table = bound_table()
    if method == "basic3" or method == "weighted3":
        return table.c3_basic
    if method == "rado1":
        return table.c1_lb
    if method == "square2":
        return table.c2_basic
    if method.startswith("loeschian"):
        return kcolour_guarantee(k)
    return 0.0


def _empty_result(method: str, k: int) -> tuple[Assignment, CoverageReport]:
    assignment = Assignment(labels=(), k=k, method=method, lattice=None)
    report = CoverageReport(0.0, 0.0, 1.0, _method_guarantee(method, k), 0, None)
    return assignment, report


def _covering_disks(disks: DiskSet, p: Point) -> list[int]:
    lim = (disks.radius + EPS) ** 2
    return [i for i, c in enumerate(disks.centers)
            if (c[0] - p[0]) ** 2 + (c[1] - p[1]) ** 2 <= lim]


def _select_by_cell_overlap(disks: DiskSet, lattice, points: Sequence[LatticePoint],
                            cell_polygon: Callable[[LatticePoint], Sequence[Point]],
                            colour_of: Callable[[LatticePoint], int]):
    """Pick, for every lattice point inside the union, the containing disk with
    the largest intersection with the point's cell (lowest index on ties)."""
    labels: list[Optional[int]] = [None] * len(disks)
    hits = 0
    cell_sum = 0.0
    for lp in points:
        cover = _covering_disks(disks, lp.position)
        if not cover:
            continue
        hits += 1
        poly = cell_polygon(lp)
        best_idx = -1
        best_area = -1.0
        for i in cover:
            area = circle_polygon_intersection_area(
                Circle(disks.centers[i], disks.radius), poly)
            if area > best_area + 1e-12:
                best_area = area
                best_idx = i
        labels[best_idx] = colour_of(lp)
        cell_sum += best_area
    return labels, hits, cell_sum


def _finish(disks: DiskSet, labels, hits, cell_sum, method, k, info,
            union_area=None, depth=None) -> tuple[Assignment, CoverageReport]:
    assignment = Assignment(tuple(labels), k, method, info)
    a = exact_union_area(disks) if union_area is None else union_area
    a_c = exact_union_area(disks.subset(assignment.selected_indices())) \
        if assignment.selected_count else 0.0
    ratio = a_c / a if a > 0.0 else 1.0
    report = CoverageReport(a, a_c, ratio, _method_guarantee(method, k), hits,
                            info.offset if info else None, depth, cell_sum)
    return assignment, report


def _solve_positioned_tri(disks: DiskSet, side: float, method: str, k: int,
                          colour_fn: Callable[[int, int], int]):
    if len(disks) == 0:
        return _empty_result(method, k)
    base = TriLattice(side)
    copies = translate_to_cell(disks, base)
    witness = max_distinct_translate_depth(copies, base)
    lat = TriLattice(side, offset=witness.point)
    points = lat.points_in_box(disks.bbox(pad=EPS))
    labels, hits, cell_sum = _select_by_cell_overlap(
        disks, lat, points,
        cell_polygon=lambda lp: lat.voronoi_cell_at(lp.i, lp.j).vertices(),
        colour_of=lambda lp: colour_fn(lp.i, lp.j))
    info = LatticeInfo("triangular", side, witness.point)
    return _finish(disks, labels, hits, cell_sum, method, k, info,
                   depth=witness.distinct_translates)


def solve_basic_3colour(disks: DiskSet) -> tuple[Assignment, CoverageReport]:
    """3-colour selection on the side 4*sqrt(3)/3 lattice, count-maximizing
    positioning; same-coloured selections are pairwise disjoint."""
    return _solve_positioned_tri(disks, THREE_COLOUR_SIDE, "basic3", 3,
                                 lambda i, j: (i - j) % 3)


def solve_rado_1colour(disks: DiskSet) -> tuple[Assignment, CoverageReport]:
    """Single-colour selection on the side-4 lattice; all selections disjoint."""
    return _solve_positioned_tri(disks, ONE_COLOUR_SIDE, "rado1", 1,
                                 lambda i, j: 0)


def solve_square_2colour(disks: DiskSet) -> tuple[Assignment, CoverageReport]:
    """2-colour selection on the checkerboard square lattice of side 2*sqrt(2)."""
    if len(disks) == 0:
        return _empty_result("square2", 2)
    base = SquareLattice(TWO_COLOUR_SIDE)
    copies = translate_to_cell(disks, base)
    witness = max_distinct_translate_depth(copies, base)
    lat = SquareLattice(TWO_COLOUR_SIDE, offset=witness.point)
    points = lat.points_in_box(disks.bbox(pad=EPS))
    labels, hits, cell_sum = _select_by_cell_overlap(
        disks, lat, points,
        cell_polygon=lambda lp: lat.voronoi_cell(lp.position),
        colour_of=lambda lp: lp.colour)
    info = LatticeInfo("square", TWO_COLOUR_SIDE, witness.point)
    return _finish(disks, labels, hits, cell_sum, "square2", 2, info,
                   depth=witness.distinct_translates)


def solve_kcolour(disks: DiskSet, k: int) -> tuple[Assignment, CoverageReport]:
    """k-colour selection for Loeschian k via the scaled sublattice colouring.

    Disks go to the Voronoi cell holding their center; one disk per occupied
    cell is kept (center closest to the lattice point, lowest index on ties).
    k = 1 falls back to the side-4 construction, whose guarantee dominates
    the scaling-based bound and whose scale factor would be negative here.
    """
    if loeschian_decompose(k) is None:
        raise InputError(
            f"k={k} is not Loeschian: no integers a, b give a^2 + a*b + b^2 = k")
    if k == 1:
        assignment, report = solve_rado_1colour(disks)
        return assignment, report
    if len(disks) == 0:
        return _empty_result(f"loeschian{k}", k)
    lat = TriLattice(alpha_k(k))
    colouring = LoeschianColouring(k)
    cells: dict[tuple[int, int], int] = {}
    for idx, c in enumerate(disks.centers):
        ij = lat.nearest(c)
        cur = cells.get(ij)
        if cur is None:
            cells[ij] = idx
        else:
            q = lat.point(*ij)
            d_new = (c[0] - q[0]) ** 2 + (c[1] - q[1]) ** 2
            cc = disks.centers[cur]
            d_cur = (cc[0] - q[0]) ** 2 + (cc[1] - q[1]) ** 2
            if d_new < d_cur - 1e-15:
                cells[ij] = idx
    labels: list[Optional[int]] = [None] * len(disks)
    for (i, j), idx in cells.items():
        labels[idx] = colouring.colour(i, j)
    info = LatticeInfo("triangular", lat.side, lat.offset)
    return _finish(disks, labels, len(cells), None, f"loeschian{k}", k, info)


def _weight_at_offset(disks: DiskSet, offset: Point,
                      bbox) -> tuple[float, list[tuple[LatticePoint, int, float]]]:
    """Total cell-overlap weight of the lattice at this offset, with the
    chosen disk and its overlap for every in-union lattice point."""
    lat = TriLattice(THREE_COLOUR_SIDE, offset=offset)
    total = 0.0
    picks: list[tuple[LatticePoint, int, float]] = []
    for lp in lat.points_in_box(bbox):
        cover = _covering_disks(disks, lp.position)
        if not cover:
            continue
        poly = lat.voronoi_cell_at(lp.i, lp.j).vertices()
        best_idx = -1
        best_area = -1.0
        for i in cover:
            area = circle_polygon_intersection_area(
                Circle(disks.centers[i], disks.radius), poly)
            if area > best_area + 1e-12:
                best_area = area
                best_idx = i
        total += best_area
        picks.append((lp, best_idx, best_area))
    return total, picks


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise InputError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    return max(n, 1)


def solve_weighted_3colour(disks: DiskSet,
                           sampling: OffsetSampling | None = None
                           ) -> tuple[Assignment, CoverageReport]:
    """3-colour selection at the candidate offset maximizing the total
    cell-overlap weight; always at least as heavy as the count solver's
    offset, which is always among the candidates."""
    if sampling is None:
        sampling = OffsetSampling()
    if len(disks) == 0:
        return _empty_result("weighted3", 3)
    base = TriLattice(THREE_COLOUR_SIDE)
    copies = translate_to_cell(disks, base)
    witness = max_distinct_translate_depth(copies, base)

    offsets: list[Point] = [witness.point]
    if sampling.include_arrangement_candidates:
        from .arrangement import _pair_intersections
        centers = np.array([tc.circle.center for tc in copies], dtype=float)
        radii = np.array([tc.circle.radius for tc in copies], dtype=float)
        verts = _pair_intersections(centers, radii)
        for x, y in verts:
            a, b = base.affine(x, y)
            if 0.0 <= a < 1.0 and 0.0 <= b < 1.0:
                offsets.append(Point(float(x), float(y)))
        for x, y in centers:
            offsets.append(base.wrap_to_cell(Point(float(x), float(y)))[0])
    g = sampling.grid_resolution
    for jj in range(g):
        for ii in range(g):
            offsets.append(base.point_from_affine((ii + 0.5) / g, (jj + 0.5) / g))

    bbox = disks.bbox(pad=EPS)
    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            weights = list(pool.map(lambda o: _weight_at_offset(disks, o, bbox)[0],
                                    offsets))
    else:
        weights = [_weight_at_offset(disks, o, bbox)[0] for o in offsets]
    best = max(range(len(offsets)),
               key=lambda t: (weights[t], -offsets[t][0], -offsets[t][1]))
    best_offset = offsets[best]

    lat = TriLattice(THREE_COLOUR_SIDE, offset=best_offset)
    total, picks = _weight_at_offset(disks, best_offset, bbox)
    labels: list[Optional[int]] = [None] * len(disks)
    for lp, idx, _ in picks:
        labels[idx] = (lp.i - lp.j) % 3
    info = LatticeInfo("triangular", THREE_COLOUR_SIDE, best_offset)
    assignment, report = _finish(disks, labels, len(picks), total,
                                 "weighted3", 3, info)
    return assignment, report


def verify(disks: DiskSet, assignment: Assignment) -> CoverageReport:
    """Recompute areas and check validity; raises on same-colour overlap."""
    if len(assignment.labels) != len(disks):
        raise InputError("assignment length does not match the disk set")
    for c in assignment.labels:
        if c is not None and not (0 <= c < assignment.k):
            raise VerificationError(f"colour {c} outside 0..{assignment.k - 1}")
    by_colour: dict[int, list[int]] = {}
    for i, c in enumerate(assignment.labels):
        if c is not None:
            by_colour.setdefault(c, []).append(i)
    threshold = 2.0 * disks.radius - 1e-8
    for c, idxs in by_colour.items():
        for a in range(len(idxs)):
            for b in range(a + 1, len(idxs)):
                i, j = idxs[a], idxs[b]
                p, q = disks.centers[i], disks.centers[j]
                if math.hypot(p[0] - q[0], p[1] - q[1]) < threshold:
                    raise VerificationError(
                        f"disks {i} and {j} share colour {c} but overlap")
    a = exact_union_area(disks)
    a_c = exact_union_area(disks.subset(assignment.selected_indices())) \
        if assignment.selected_count else 0.0
    ratio = a_c / a if a > 0.0 else 1.0
    return CoverageReport(a, a_c, ratio,
                          _method_guarantee(assignment.method, assignment.k),
                          assignment.selected_count,
                          assignment.lattice.offset if assignment.lattice else None)
