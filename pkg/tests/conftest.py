"""Shared oracles and instance builders for the test suite."""

from __future__ import annotations

import math

import numpy as np
import pytest

from diskpack import (EPS, SplitMix64, gen_clustered, gen_random,
                      gen_spirograph)


def grid_depth_oracle(circles, resolution=900, bbox=None):
    """Max coverage depth over a dense grid (closed disks, same EPS)."""
    centers = np.array([c.center for c in circles], dtype=float)
    radii = np.array([c.radius for c in circles], dtype=float)
    if bbox is None:
        xmin = (centers[:, 0] - radii).min()
        xmax = (centers[:, 0] + radii).max()
        ymin = (centers[:, 1] - radii).min()
        ymax = (centers[:, 1] + radii).max()
    else:
        xmin, ymin, xmax, ymax = bbox
    xs = np.linspace(xmin, xmax, resolution)
    ys = np.linspace(ymin, ymax, resolution)
    best = 0
    lim2 = (radii + EPS) ** 2
    for y in ys:
        d2 = (xs[:, None] - centers[None, :, 0]) ** 2 + (y - centers[None, :, 1]) ** 2
        best = max(best, int((d2 <= lim2[None, :]).sum(axis=1).max()))
    return best


def grid_distinct_oracle(copies, lattice, resolution=800):
    """Max distinct-translate count over a grid covering the fundamental cell."""
    centers = np.array([tc.circle.center for tc in copies], dtype=float)
    radii = np.array([tc.circle.radius for tc in copies], dtype=float)
    ids = sorted({tc.translate_id for tc in copies})
    id_index = {t: k for k, t in enumerate(ids)}
    groups = np.array([id_index[tc.translate_id] for tc in copies])
    lim2 = (radii + EPS) ** 2
    best = 0
    n_groups = len(ids)
    group_cols = [np.nonzero(groups == g)[0] for g in range(n_groups)]
    aa = np.linspace(0.0, 1.0, resolution, endpoint=False)
    ox, oy = lattice.offset
    ux, uy = lattice.u
    vx, vy = lattice.v
    for b in aa:
        px = ox + aa * ux + b * vx
        py = oy + aa * uy + b * vy
        d2 = ((px[:, None] - centers[None, :, 0]) ** 2
              + (py[:, None] - centers[None, :, 1]) ** 2)
        memb = d2 <= lim2[None, :]
        counts = np.zeros(resolution, dtype=np.int64)
        for cols in group_cols:
            counts += memb[:, cols].any(axis=1)
        best = max(best, int(counts.max()))
    return best


def quick_corpus(count=40, max_n=40, seed=1000):
    """Small deterministic mix of random, clustered and spirograph instances."""
    out = []
    rng = SplitMix64(seed)
    for k in range(count):
        kind = k % 5
        if kind == 4:
            n = 3 + rng.randrange(30)
            eps = 0.3 * rng.next_double() + 0.005
            out.append(gen_spirograph(n, eps))
        elif kind == 3:
            n = 2 + rng.randrange(max_n - 1)
            out.append(gen_clustered(n, 1 + rng.randrange(4),
                                     4.0 + 10.0 * rng.next_double(),
                                     0.5 + 2.0 * rng.next_double(),
                                     seed + k))
        else:
            n = 1 + rng.randrange(max_n)
            box = max(3.0, 1.8 * math.sqrt(n) * (0.7 + rng.next_double()))
            out.append(gen_random(n, box, seed + k))
    return out


@pytest.fixture(scope="session")
def small_corpus():
    return quick_corpus()
