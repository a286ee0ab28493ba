import math
import time

import pytest

from diskpack import (Circle, DiskSet, InputError, Point, SplitMix64,
                      THREE_COLOUR_SIDE, TranslatedCircle, TriLattice,
                      exact_union_area, gen_random, gen_spirograph, max_depth,
                      max_distinct_translate_depth, translate_to_cell)
from conftest import grid_depth_oracle, grid_distinct_oracle


LAT = TriLattice(THREE_COLOUR_SIDE)


class TestTranslateToCell:
    def test_centroid_disk(self):
        centroid = Point((LAT.u[0] + LAT.v[0]) / 2.0, (LAT.u[1] + LAT.v[1]) / 2.0)
        copies = translate_to_cell(DiskSet(1.0, (centroid,)), LAT)
        assert 1 <= len(copies) <= 4
        assert any(tc.translate_id == (0, 0) for tc in copies)

    def test_corner_disk_four_copies(self):
        copies = translate_to_cell(DiskSet(1.0, (Point(0.0, 0.0),)), LAT)
        assert len(copies) == 4
        assert sorted(tc.translate_id for tc in copies) == \
            [(-1, -1), (-1, 0), (0, -1), (0, 0)]

    def test_at_most_four_copies_each(self):
        for seed in range(6):
            ds = gen_random(60, 12.0, seed)
            copies = translate_to_cell(ds, LAT)
            assert len(copies) <= 4 * len(ds)
            per_disk = {}
            for tc in copies:
                per_disk.setdefault(tc.source_disk, []).append(tc.translate_id)
            for disk, ids in per_disk.items():
                assert 1 <= len(ids) <= 4
                assert len(set(ids)) == len(ids)

    def test_nonunit_rejected(self):
        with pytest.raises(InputError):
            translate_to_cell(DiskSet(0.5, (Point(0, 0),)), LAT)


class TestMaxDistinctTranslateDepth:
    def test_empty_rejected(self):
        with pytest.raises(InputError):
            max_distinct_translate_depth([], LAT)

    def test_single_circle(self):
        w = max_distinct_translate_depth(
            [TranslatedCircle(Circle(Point(1.0, 1.0), 1.0), (0, 0), 0)], LAT)
        assert w.distinct_translates == 1
        assert math.dist(w.point, Point(1.0, 1.0)) <= 1.0 + 1e-9

    def test_same_circle_two_translates(self):
        circ = Circle(Point(1.0, 1.0), 1.0)
        w = max_distinct_translate_depth(
            [TranslatedCircle(circ, (0, 0), 0), TranslatedCircle(circ, (2, 5), 1)], LAT)
        assert w.distinct_translates == 2
        assert set(w.per_translate_counts) == {(0, 0), (2, 5)}

    def test_three_circles_against_grid_oracle(self):
        tcs = [TranslatedCircle(Circle(Point(0.0, 0.0), 1.0), (0, 0), 0),
               TranslatedCircle(Circle(Point(1.0, 0.0), 1.0), (1, 0), 1),
               TranslatedCircle(Circle(Point(0.5, 0.8), 1.0), (0, 1), 2)]
        w = max_distinct_translate_depth(tcs, LAT)
        assert w.distinct_translates == 3
        assert grid_distinct_oracle(tcs, LAT, resolution=400) == 3
        assert w.distinct_translates == len(
            [c for c in w.per_translate_counts.values() if c > 0])

    def test_witness_point_covered_by_counted_circles(self):
        ds = gen_random(25, 8.0, 3)
        copies = translate_to_cell(ds, LAT)
        w = max_distinct_translate_depth(copies, LAT)
        for tid in w.per_translate_counts:
            hits = [tc for tc in copies if tc.translate_id == tid
                    and math.dist(tc.circle.center, w.point) <= 1.0 + 1e-9]
            assert hits

    def test_matches_grid_oracle_small_instances(self):
        for seed in range(12):
            rng = SplitMix64(seed)
            n = 2 + rng.randrange(8)
            ds = gen_random(n, 5.0, seed + 500)
            copies = translate_to_cell(ds, LAT)
            w = max_distinct_translate_depth(copies, LAT)
            assert w.distinct_translates == grid_distinct_oracle(copies, LAT,
                                                                 resolution=420)

    def test_positioning_lower_bound(self, small_corpus):
        for ds in small_corpus:
            a = exact_union_area(ds)
            copies = translate_to_cell(ds, LAT)
            w = max_distinct_translate_depth(copies, LAT)
            assert w.distinct_translates >= math.ceil(a / LAT.cell_area - 1e-9)

    def test_order_independent(self):
        ds = gen_random(18, 7.0, 11)
        copies = translate_to_cell(ds, LAT)
        w1 = max_distinct_translate_depth(copies, LAT)
        w2 = max_distinct_translate_depth(list(reversed(copies)), LAT)
        assert w1.point == w2.point
        assert w1.distinct_translates == w2.distinct_translates


class TestMaxDepth:
    def test_empty_rejected(self):
        with pytest.raises(InputError):
            max_depth([])

    def test_disjoint_circles(self):
        circles = [Circle(Point(4.0 * k, 0.0), 1.0) for k in range(6)]
        _, depth = max_depth(circles)
        assert depth == 1

    def test_spirograph_common_point(self):
        ds = gen_spirograph(50, 0.01)
        circles = [Circle(c, 1.0) for c in ds.centers]
        pt, depth = max_depth(circles)
        assert depth == 50
        assert math.hypot(pt[0], pt[1]) < 0.05

    def test_matches_grid_oracle(self):
        for seed in range(10):
            rng = SplitMix64(seed + 40)
            n = 2 + rng.randrange(9)
            ds = gen_random(n, 4.5, seed + 40)
            circles = [Circle(c, 1.0) for c in ds.centers]
            _, depth = max_depth(circles)
            assert depth == grid_depth_oracle(circles, resolution=700)

    def test_nested_circles(self):
        circles = [Circle(Point(0.0, 0.0), 3.0), Circle(Point(0.1, 0.0), 1.0)]
        _, depth = max_depth(circles)
        assert depth == 2


def test_runtime_scales_subquadratically_smoke():
    # loose smoke check, not a strict assertion of the exponent
    ds250 = gen_random(250, 24.0, 1)
    ds500 = gen_random(500, 34.0, 2)
    t0 = time.perf_counter()
    max_distinct_translate_depth(translate_to_cell(ds250, LAT), LAT)
    t250 = time.perf_counter() - t0
    t0 = time.perf_counter()
    max_distinct_translate_depth(translate_to_cell(ds500, LAT), LAT)
    t500 = time.perf_counter() - t0
    assert t500 < 16.0 * max(t250, 0.01)
