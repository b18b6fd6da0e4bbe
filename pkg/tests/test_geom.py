import math
import random

import pytest

from jampack.geometry import (DEFAULT_TOL, GeometryError, Tolerances,
                              apply_rigid, chord_step,
                              circle_circle_intersections, dist,
                              reflect_across_horizontal,
                              reflect_across_vertical)


def test_tolerances_defaults():
    t = Tolerances()
    assert t.tangency_rel == 1e-9
    assert t.solver_abs == 1e-12
    assert t.angle_slack == 1e-9


def test_tolerances_validation():
    with pytest.raises(ValueError):
        Tolerances(tangency_rel=-1.0)
    with pytest.raises(ValueError):
        Tolerances(solver_abs=0.0)
    with pytest.raises(ValueError):
        Tolerances(tangency_rel=1e-13, solver_abs=1e-12)


def test_intersections_symmetric_equal_circles():
    pts = circle_circle_intersections((0, 0), 2, (2, 0), 2)
    assert len(pts) == 2
    got = sorted(pts, key=lambda p: p[1])
    assert got[0] == pytest.approx((1, -math.sqrt(3)), abs=1e-12)
    assert got[1] == pytest.approx((1, math.sqrt(3)), abs=1e-12)


def test_intersections_disjoint():
    assert circle_circle_intersections((0, 0), 1, (4, 0), 1) == []


def test_intersections_external_tangency():
    pts = circle_circle_intersections((0, 0), 2, (4, 0), 2)
    assert len(pts) == 1
    assert pts[0] == pytest.approx((2, 0), abs=1e-12)


def test_intersections_internal_tangency():
    pts = circle_circle_intersections((0, 0), 3, (1, 0), 2)
    assert len(pts) == 1
    assert pts[0] == pytest.approx((3, 0), abs=1e-12)


def test_intersections_coincident_centers_rejected():
    with pytest.raises(GeometryError):
        circle_circle_intersections((1, 1), 2, (1, 1), 3)


def test_intersections_bad_radius_rejected():
    with pytest.raises(GeometryError):
        circle_circle_intersections((0, 0), -1, (1, 0), 1)


def test_intersections_nonfinite_rejected():
    with pytest.raises(GeometryError):
        circle_circle_intersections((math.nan, 0), 1, (1, 0), 1)


def test_intersections_residuals_randomized():
    rnd = random.Random(12345)
    checked = 0
    for _ in range(2000):
        c1 = (rnd.uniform(-5, 5), rnd.uniform(-5, 5))
        c2 = (rnd.uniform(-5, 5), rnd.uniform(-5, 5))
        r1 = rnd.uniform(0.1, 4)
        r2 = rnd.uniform(0.1, 4)
        if dist(c1, c2) < 1e-6:
            continue
        for p in circle_circle_intersections(c1, r1, c2, r2):
            assert abs(dist(p, c1) - r1) <= 1e-9
            assert abs(dist(p, c2) - r2) <= 1e-9
            checked += 1
    assert checked > 1000


def test_chord_step_flat_curve():
    assert chord_step(lambda x: 0.0, 0.0, 2.0) == pytest.approx(2.0, abs=1e-10)
    assert chord_step(lambda x: 0.0, 3.5, 1.0) == pytest.approx(4.5, abs=1e-10)


def test_chord_step_against_grid_oracle():
    # independent oracle: scan for the sign change on a fine grid, then bisect
    def curve(x):
        return 2.0 * math.sqrt(3.0) + (2.0 - math.sqrt(3.0)) * math.exp(-0.05 * x)

    def oracle(x0, chord):
        y0 = curve(x0)

        def g(x):
            return math.hypot(x - x0, curve(x) - y0) - chord

        x = x0
        while g(x + 1e-4) < 0:
            x += 1e-4
        lo, hi = x, x + 1e-4
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            if g(lo) * g(mid) <= 0:
                hi = mid
            else:
                lo = mid
        return 0.5 * (lo + hi)

    got = chord_step(curve, 0.0, 2.0)
    assert got == pytest.approx(oracle(0.0, 2.0), abs=1e-10)


def test_chord_step_monotone_in_chord():
    rnd = random.Random(99)
    for _ in range(200):
        scale = rnd.uniform(0.1, 3.0)
        rate = rnd.uniform(0.05, 1.0)
        x0 = rnd.uniform(0, 5)

        def curve(x, s=scale, k=rate):
            return s * math.exp(-k * x)

        prev = x0
        for chord in (0.5, 1.0, 2.0):
            nxt = chord_step(curve, x0, chord)
            assert nxt > prev
            prev = nxt


def test_chord_step_rejects_bad_input():
    with pytest.raises(GeometryError):
        chord_step(lambda x: 0.0, 0.0, -1.0)
    with pytest.raises(GeometryError):
        chord_step(lambda x: x * x, 1.0, 0.5)  # increasing curve


def test_reflections_trivial():
    assert reflect_across_vertical((1, 2), 3) == (5, 2)
    assert reflect_across_horizontal((1, 2), 0) == (1, -2)


def test_reflections_are_involutions():
    rnd = random.Random(7)
    for _ in range(1000):
        p = (rnd.uniform(-10, 10), rnd.uniform(-10, 10))
        x0 = rnd.uniform(-10, 10)
        y0 = rnd.uniform(-10, 10)
        ulp = 4 * math.ulp(max(abs(p[0]), abs(p[1]), abs(2 * x0),
                               abs(2 * y0), 1.0))
        q = reflect_across_vertical(reflect_across_vertical(p, x0), x0)
        assert abs(q[0] - p[0]) <= ulp and q[1] == p[1]
        q = reflect_across_horizontal(reflect_across_horizontal(p, y0), y0)
        assert q[0] == p[0] and abs(q[1] - p[1]) <= ulp


def test_apply_rigid_trivial():
    p = apply_rigid((1, 0), math.pi / 2, (0, 0))
    assert p == pytest.approx((0, 1), abs=1e-12)


def test_rigid_motions_preserve_distances():
    rnd = random.Random(31)
    for _ in range(1000):
        p = (rnd.uniform(-5, 5), rnd.uniform(-5, 5))
        q = (rnd.uniform(-5, 5), rnd.uniform(-5, 5))
        theta = rnd.uniform(0, 2 * math.pi)
        t = (rnd.uniform(-5, 5), rnd.uniform(-5, 5))
        d0 = dist(p, q)
        d1 = dist(apply_rigid(p, theta, t), apply_rigid(q, theta, t))
        assert abs(d1 - d0) <= 1e-12 * max(1.0, d0)
