import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antipodal import (
    DegenerateHullError,
    PointSet,
    VacuousMarginError,
    boundary_band,
    circle_config,
    convex_hull,
    diameter,
    pair_counts,
    random_disk_config,
    ratio_margin,
    read_points,
    write_points,
)
from antipodal.generators import arc_center_config
from antipodal.geometry import distance_to_boundary

from oracles import diameter_brute, gift_wrap_hull, pair_counts_brute, point_in_hull

SQUARE_PLUS_CENTER = PointSet.from_points(
    [(0.0, 0.0), (0.5, 0.0), (0.5, 0.5), (0.0, 0.5), (0.25, 0.25)]
)


# ---------------------------------------------------------------------------
# pair_counts
# ---------------------------------------------------------------------------

def test_pair_counts_two_points_at_distance_one():
    ps = PointSet.from_points([(0.0, 0.0), (1.0, 0.0)])
    c = pair_counts(ps, 0.1)
    assert (c.neighbors, c.antipodes) == (0, 1)  # threshold inclusive: 1 >= 0.9


def test_pair_counts_three_collinear():
    ps = PointSet.from_points([(0.0, 0.0), (0.5, 0.0), (1.0, 0.0)])
    c = pair_counts(ps, 0.1)
    assert (c.neighbors, c.antipodes) == (0, 1)


def test_pair_counts_circle_2000_against_brute_force():
    ps = circle_config(2000)
    c = pair_counts(ps, 0.01)
    # frozen from the pure-python oracle; lattice quantization puts the
    # neighbor count 5.8% under the continuum value eps*n^2/pi, while the
    # antipode count sits within 0.6% of sqrt(2 eps)*n^2/pi
    assert (c.neighbors, c.antipodes) == (12000, 181000)
    near, far = pair_counts_brute(ps.points, 0.01)
    assert (near, far) == (c.neighbors, c.antipodes)
    assert abs(far - math.sqrt(2 * 0.01) * 2000**2 / math.pi) / far < 0.05


def test_pair_counts_rejects_bad_epsilon():
    ps = PointSet.from_points([(0.0, 0.0), (1.0, 0.0)])
    for eps in (0.0, 0.5, 0.7, -0.1, float("nan")):
        with pytest.raises(ValueError):
            pair_counts(ps, eps)


def test_pair_counts_rejects_nonfinite_coordinates():
    with pytest.raises(ValueError):
        PointSet.from_points([(0.0, 0.0), (float("inf"), 0.0)])


def test_pair_counts_needs_two_points():
    with pytest.raises(ValueError):
        pair_counts(PointSet.from_points([(0.0, 0.0)]), 0.1)


@st.composite
def points_and_safe_epsilon(draw):
    n = draw(st.integers(4, 30))
    gen = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    pts = gen.random((n, 2)) * 0.8 - 0.4
    eps = draw(st.floats(0.02, 0.45))
    d = np.sqrt(
        ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1)[
            np.triu_indices(n, 1)
        ]
    )
    # keep both thresholds clear of every pairwise distance so that rigid
    # motions cannot flip any inclusion decision
    if min(np.abs(d - eps).min(), np.abs(d - (1 - eps)).min()) < 1e-6:
        eps = float(np.clip(eps + 3e-6, 0.02, 0.45))
    return pts, eps


@given(points_and_safe_epsilon(), st.floats(0, 2 * math.pi), st.floats(-5, 5), st.floats(-5, 5))
@settings(max_examples=60, deadline=None)
def test_pair_counts_rigid_motion_invariance(pe, theta, tx, ty):
    pts, eps = pe
    d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1)[np.triu_indices(len(pts), 1)])
    if min(np.abs(d - eps).min(), np.abs(d - (1 - eps)).min()) < 1e-7:
        return  # degenerate draw, thresholds not separable
    rot = np.array([[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]])
    moved = pts @ rot.T + np.array([tx, ty])
    a = pair_counts(PointSet(pts), eps)
    b = pair_counts(PointSet(moved), eps)
    assert (a.neighbors, a.antipodes) == (b.neighbors, b.antipodes)


@given(st.integers(0, 2**32 - 1), st.floats(0.01, 0.2), st.floats(0.21, 0.45))
@settings(max_examples=40, deadline=None)
def test_pair_counts_monotone_in_epsilon(seed, eps1, eps2):
    gen = np.random.default_rng(seed)
    ps = PointSet(gen.random((25, 2)))
    a = pair_counts(ps, eps1)
    b = pair_counts(ps, eps2)
    assert a.neighbors <= b.neighbors
    assert a.antipodes <= b.antipodes


def test_pair_counts_sum_bounded_by_total_pairs():
    ps = random_disk_config(300, seed=5)
    c = pair_counts(ps, 0.3)
    assert c.neighbors + c.antipodes <= 300 * 299 // 2


# ---------------------------------------------------------------------------
# diameter
# ---------------------------------------------------------------------------

def test_diameter_equilateral_triangle():
    s = 0.7
    ps = PointSet.from_points([(0, 0), (s, 0), (s / 2, s * math.sqrt(3) / 2)])
    assert diameter(ps) == pytest.approx(s, rel=1e-12)


@pytest.mark.parametrize("n", [2, 4, 10, 1000])
def test_diameter_circle_even_n(n):
    assert abs(diameter(circle_config(n)) - 1.0) < 1e-12


def test_diameter_matches_brute_force():
    ps = random_disk_config(500, seed=1)
    d = diameter(ps)
    assert 0 < d <= 1
    assert d == pytest.approx(diameter_brute(ps.points), rel=1e-12)


# ---------------------------------------------------------------------------
# convex_hull
# ---------------------------------------------------------------------------

def test_hull_square_plus_center():
    hull = convex_hull(SQUARE_PLUS_CENTER)
    assert hull.m == 4
    assert sorted(map(tuple, hull.vertices)) == [
        (0.0, 0.0),
        (0.0, 0.5),
        (0.5, 0.0),
        (0.5, 0.5),
    ]


def test_hull_circle_points_all_on_hull():
    hull = convex_hull(circle_config(100))
    assert hull.m == 100


def test_hull_matches_gift_wrapping_oracle():
    ps = random_disk_config(200, seed=7)
    hull = convex_hull(ps)
    expected = gift_wrap_hull(ps.points)
    assert sorted(map(tuple, hull.vertices)) == sorted(expected)


def test_hull_contains_every_point_and_permutation_invariant():
    ps = random_disk_config(150, seed=3)
    hull = convex_hull(ps)
    for x, y in ps.points:
        assert point_in_hull([tuple(v) for v in hull.vertices], x, y)
    perm = np.random.default_rng(0).permutation(ps.n)
    hull2 = convex_hull(PointSet(ps.coords[perm]))
    assert sorted(map(tuple, hull.vertices)) == sorted(map(tuple, hull2.vertices))


def test_hull_perimeter_is_edge_sum():
    hull = convex_hull(random_disk_config(60, seed=9))
    v = hull.vertices
    w = np.roll(v, -1, axis=0)
    assert hull.perimeter == pytest.approx(
        float(np.hypot(*(w - v).T).sum()), rel=1e-12
    )


def test_hull_collinear_is_distinct_error():
    ps = PointSet.from_points([(0, 0), (0.3, 0.3), (0.7, 0.7), (1, 1)])
    with pytest.raises(DegenerateHullError):
        convex_hull(ps)


def test_hull_needs_three_points():
    with pytest.raises(ValueError):
        convex_hull(PointSet.from_points([(0, 0), (1, 1)]))


# ---------------------------------------------------------------------------
# boundary_band
# ---------------------------------------------------------------------------

def test_boundary_band_keeps_hull_vertices():
    ps = random_disk_config(80, seed=11)
    hull = convex_hull(ps)
    band = boundary_band(ps, hull, 0.01)
    kept = {tuple(p) for p in band.coords}
    for v in hull.vertices:
        assert tuple(v) in kept


def test_boundary_band_excludes_deep_center():
    hull = convex_hull(SQUARE_PLUS_CENTER)
    band = boundary_band(SQUARE_PLUS_CENTER, hull, 0.1)
    assert band.n == 4  # the center sits 0.25 from the boundary
    assert (0.25, 0.25) not in {tuple(p) for p in band.coords}


def test_boundary_band_arc_center_keeps_everything():
    ps = arc_center_config(1000, 0.01)
    hull = convex_hull(ps)
    band = boundary_band(ps, hull, 0.01)
    assert band.n == ps.n
    # ... because the cluster is tiny: the whole configuration hugs the hull
    assert float(distance_to_boundary(hull, ps.coords).max()) <= 0.01


# ---------------------------------------------------------------------------
# ratio_margin
# ---------------------------------------------------------------------------

def test_margin_zero_when_no_neighbors():
    from antipodal.geometry import PairCounts

    assert ratio_margin(PairCounts(0, 5, 0.02)) == 0.0
    assert ratio_margin(PairCounts(0, 1, 0.1)) == 0.0


def test_margin_circle_2000():
    c = pair_counts(circle_config(2000), 0.01)
    m = ratio_margin(c)
    assert m == pytest.approx(1.422739906932164, rel=1e-12)  # frozen oracle value
    assert abs(m - math.sqrt(math.log(100.0) / 2.0)) / m < 0.10


def test_margin_vacuous_is_an_error():
    from antipodal.geometry import PairCounts

    with pytest.raises(VacuousMarginError):
        ratio_margin(PairCounts(3, 0, 0.05))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def test_point_io_roundtrip(tmp_path):
    ps = random_disk_config(50, seed=2)
    path = tmp_path / "pts.txt"
    write_points(path, ps)
    back = read_points(path)
    assert np.array_equal(back.coords, ps.coords)


def test_point_io_skips_comments_and_blanks(tmp_path):
    path = tmp_path / "pts.txt"
    path.write_text("# header comment\n0.25 -0.5\n\n# more\n0.125 0.375\n")
    ps = read_points(path)
    assert ps.points == [(0.25, -0.5), (0.125, 0.375)]


def test_point_io_rejects_malformed_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0.1 0.2 0.3\n")
    with pytest.raises(ValueError):
        read_points(path)
