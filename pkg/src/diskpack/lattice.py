"""Positioned point lattices: triangular and square, with colourings and cells.

Both lattice kinds expose the same surface: basis vectors ``u``/``v``, a
half-open fundamental cell spanned by them at ``offset``, ``wrap_to_cell``,
``points_in_box`` and Voronoi-cell accessors.  Orientation is fixed (u along
+x); translation is the only degree of freedom.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InputError
from .geometry import Point, RegularHexagon, SQRT3, require_finite

# default sides: 4*sqrt(3)/3 gives 3-colourable selections, 4 gives pairwise
# disjoint ones, 2*sqrt(2) the checkerboard 2-colouring
THREE_COLOUR_SIDE = 4.0 * SQRT3 / 3.0
ONE_COLOUR_SIDE = 4.0
TWO_COLOUR_SIDE = 2.0 * math.sqrt(2.0)


class LatticePoint(NamedTuple):
    i: int
    j: int
    position: Point
    colour: int


def _frac(a: float) -> tuple[int, float]:
    i = math.floor(a)
    f = a - i
    if f >= 1.0:  # guard against floating fold-over
        i += 1
        f -= 1.0
    return i, f


@dataclass(frozen=True)
class TriLattice:
    """Triangular lattice with basis u = (side, 0), v = (side/2, side*sqrt(3)/2)."""

    side: float
    offset: Point = Point(0.0, 0.0)
    colours: int = 3

    def __post_init__(self) -> None:
        require_finite(self.side, self.offset[0], self.offset[1], what="lattice parameter")
        if self.side <= 0.0:
            raise InputError("lattice side must be positive")

    @property
    def u(self) -> Point:
        return Point(self.side, 0.0)

    @property
    def v(self) -> Point:
        return Point(self.side / 2.0, self.side * SQRT3 / 2.0)

    @property
    def cell_area(self) -> float:
        """Area of the fundamental parallelogram (two lattice triangles)."""
        return self.side * self.side * SQRT3 / 2.0

    def colour(self, i: int, j: int) -> int:
        # all six neighbours of (i, j) get the other two colours
        return (i - j) % 3

    def point(self, i: int, j: int) -> Point:
        return Point(self.offset[0] + i * self.side + j * self.side / 2.0,
                     self.offset[1] + j * self.side * SQRT3 / 2.0)

    def affine(self, x: float, y: float) -> tuple[float, float]:
        """Coordinates (a, b) with p = offset + a*u + b*v."""
        b = (y - self.offset[1]) / (self.side * SQRT3 / 2.0)
        a = (x - self.offset[0]) / self.side - b / 2.0
        return a, b

    def affine_array(self, xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        b = (ys - self.offset[1]) / (self.side * SQRT3 / 2.0)
        a = (xs - self.offset[0]) / self.side - b / 2.0
        return a, b

    def wrap_to_cell(self, p: Point) -> tuple[Point, tuple[int, int]]:
        """Reduce p to the half-open fundamental cell; p = cell_point + i*u + j*v."""
        require_finite(p[0], p[1])
        a, b = self.affine(p[0], p[1])
        i, fa = _frac(a)
        j, fb = _frac(b)
        return self.point_from_affine(fa, fb), (i, j)

    def point_from_affine(self, a: float, b: float) -> Point:
        return Point(self.offset[0] + a * self.side + b * self.side / 2.0,
                     self.offset[1] + b * self.side * SQRT3 / 2.0)

    def nearest(self, p: Point) -> tuple[int, int]:
        """Index of the lattice point nearest to p; ties broken by smallest (i, j)."""
        a, b = self.affine(p[0], p[1])
        i0 = math.floor(a)
        j0 = math.floor(b)
        best = None
        for j in range(j0 - 1, j0 + 3):
            for i in range(i0 - 1, i0 + 3):
                q = self.point(i, j)
                d = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
                key = (d, i, j)
                if best is None or key < best:
                    best = key
        return best[1], best[2]

    def points_in_box(self, bbox: tuple[float, float, float, float]) -> list[LatticePoint]:
        """All lattice points with position inside the closed bbox (xmin, ymin, xmax, ymax)."""
        xmin, ymin, xmax, ymax = bbox
        require_finite(xmin, ymin, xmax, ymax, what="bbox bound")
        if xmax < xmin or ymax < ymin:
            return []
        vy = self.side * SQRT3 / 2.0
        jmin = math.floor((ymin - self.offset[1]) / vy) - 1
        jmax = math.ceil((ymax - self.offset[1]) / vy) + 1
        out = []
        for j in range(jmin, jmax + 1):
            y = self.offset[1] + j * vy
            if y < ymin or y > ymax:
                continue
            xoff = self.offset[0] + j * self.side / 2.0
            imin = math.ceil((xmin - xoff) / self.side - 1e-12)
            imax = math.floor((xmax - xoff) / self.side + 1e-12)
            for i in range(imin, imax + 1):
                x = xoff + i * self.side
                out.append(LatticePoint(i, j, Point(x, y), self.colour(i, j)))
        return out

    def voronoi_cell(self, p: Point) -> RegularHexagon:
        """Voronoi cell of a lattice point: regular hexagon of side side/sqrt(3)."""
        a, b = self.affine(p[0], p[1])
        if abs(a - round(a)) > 1e-6 or abs(b - round(b)) > 1e-6:
            raise InputError("voronoi_cell expects a lattice point")
        return RegularHexagon(p, self.side / SQRT3)

    def voronoi_cell_at(self, i: int, j: int) -> RegularHexagon:
        return RegularHexagon(self.point(i, j), self.side / SQRT3)


@dataclass(frozen=True)
class SquareLattice:
    """Axis-aligned square lattice with a checkerboard 2-colouring."""

    side: float
    offset: Point = Point(0.0, 0.0)
    colours: int = 2

    def __post_init__(self) -> None:
        require_finite(self.side, self.offset[0], self.offset[1], what="lattice parameter")
        if self.side <= 0.0:
            raise InputError("lattice side must be positive")

    @property
    def u(self) -> Point:
        return Point(self.side, 0.0)

    @property
    def v(self) -> Point:
        return Point(0.0, self.side)

    @property
    def cell_area(self) -> float:
        return self.side * self.side

    def colour(self, i: int, j: int) -> int:
        return (i + j) % 2

    def point(self, i: int, j: int) -> Point:
        return Point(self.offset[0] + i * self.side, self.offset[1] + j * self.side)

    def affine(self, x: float, y: float) -> tuple[float, float]:
        return (x - self.offset[0]) / self.side, (y - self.offset[1]) / self.side

    def affine_array(self, xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return (xs - self.offset[0]) / self.side, (ys - self.offset[1]) / self.side

    def wrap_to_cell(self, p: Point) -> tuple[Point, tuple[int, int]]:
        require_finite(p[0], p[1])
        a, b = self.affine(p[0], p[1])
        i, fa = _frac(a)
        j, fb = _frac(b)
        return self.point_from_affine(fa, fb), (i, j)

    def point_from_affine(self, a: float, b: float) -> Point:
        return Point(self.offset[0] + a * self.side, self.offset[1] + b * self.side)

    def nearest(self, p: Point) -> tuple[int, int]:
        a, b = self.affine(p[0], p[1])
        i0 = math.floor(a)
        j0 = math.floor(b)
        best = None
        for j in (j0, j0 + 1):
            for i in (i0, i0 + 1):
                q = self.point(i, j)
                d = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
                key = (d, i, j)
                if best is None or key < best:
                    best = key
        return best[1], best[2]

    def points_in_box(self, bbox: tuple[float, float, float, float]) -> list[LatticePoint]:
        xmin, ymin, xmax, ymax = bbox
        require_finite(xmin, ymin, xmax, ymax, what="bbox bound")
        if xmax < xmin or ymax < ymin:
            return []
        jmin = math.ceil((ymin - self.offset[1]) / self.side - 1e-12)
        jmax = math.floor((ymax - self.offset[1]) / self.side + 1e-12)
        imin = math.ceil((xmin - self.offset[0]) / self.side - 1e-12)
        imax = math.floor((xmax - self.offset[0]) / self.side + 1e-12)
        return [LatticePoint(i, j, self.point(i, j), self.colour(i, j))
                for j in range(jmin, jmax + 1) for i in range(imin, imax + 1)]

    def voronoi_cell(self, p: Point) -> tuple[Point, Point, Point, Point]:
        """Voronoi cell of a lattice point: axis-aligned square, counterclockwise."""
        h = self.side / 2.0
        x, y = p
        return (Point(x - h, y - h), Point(x + h, y - h),
                Point(x + h, y + h), Point(x - h, y + h))


Lattice = TriLattice | SquareLattice


def loeschian_decompose(k: int) -> tuple[int, int] | None:
    """Smallest (a, b) with a^2 + a*b + b^2 == k, or None if k is not Loeschian."""
    if not isinstance(k, int) or k <= 0:
        raise InputError("k must be a positive integer")
    for a in range(math.isqrt(k) + 1):
        disc = 4 * k - 3 * a * a
        if disc < 0:
            break
        r = math.isqrt(disc)
        if r * r != disc:
            continue
        if (r - a) % 2 != 0:
            continue
        b = (r - a) // 2
        if b >= 0 and a * a + a * b + b * b == k:
            return a, b
    return None


class LoeschianColouring:
    """k-colouring of lattice indices by residues modulo a sublattice of index k.

    The sublattice is generated by (a, b) and its 60-degree rotation
    (-b, a+b); each residue class is itself a triangular lattice whose side
    is sqrt(k) times the base side.  Residues are put in Hermite normal form
    so the colour map is O(1) and deterministic.
    """

    def __init__(self, k: int):
        decomp = loeschian_decompose(k)
        if decomp is None:
            raise InputError(
                f"k={k} is not Loeschian (no integers a, b with a^2+ab+b^2=k)")
        self.k = k
        self.a, self.b = decomp
        a, b = decomp
        g, x0, y0 = _egcd(b, a + b)
        self._g = g                      # smallest positive j-step in the sublattice
        self._p = k // g                 # i-period once j is reduced
        w2_first = x0 * a - y0 * b       # i-component of the generator with j-step g
        self._q = w2_first % self._p

    def colour(self, i: int, j: int) -> int:
        j_mod = j % self._g
        t = (j - j_mod) // self._g
        i_mod = (i - t * self._q) % self._p
        return j_mod * self._p + i_mod


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y == g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y
