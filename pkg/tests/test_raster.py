import math

import numpy as np
import pytest

from tricomplex.algebra import SliceSpec
from tricomplex.raster import (
    Window2D,
    Window3D,
    hausdorff_directed,
    hausdorff_discrete,
    hausdorff_naive,
    rasterize2d,
    rasterize3d,
    scan2d,
    scan3d,
)
from tricomplex.sets import (
    diamond_boundary_distance,
    diamond_member,
    hyperbrot_member,
    m_p,
    octahedron_boundary_distance,
    octahedron_member,
    perplexbrot_member,
)

PRINCIPAL = SliceSpec(("1", "j1", "j2"))


# ---------------------------------------------------------------- windows

def test_window_geometry():
    w = Window2D(-1.0, 1.0, -0.5, 0.5, 8, 4)
    assert w.dx == pytest.approx(0.25)
    assert w.dy == pytest.approx(0.25)
    assert w.cell_diag == pytest.approx(math.hypot(0.25, 0.25))
    xs = w.x_centers()
    assert xs[0] == pytest.approx(-1.0 + 0.125)
    assert xs[-1] == pytest.approx(1.0 - 0.125)
    assert len(xs) == 8
    v = Window3D(-1, 1, -1, 1, 0, 2, 4, 4, 4)
    assert v.dz == pytest.approx(0.5)
    assert v.cell_diag == pytest.approx(math.sqrt(0.5**2 + 0.5**2 + 0.5**2))


def test_window_validation():
    with pytest.raises(ValueError):
        Window2D(1.0, -1.0, 0.0, 1.0, 4, 4)
    with pytest.raises(ValueError):
        Window2D(0.0, 1.0, 0.0, 1.0, 0, 4)
    with pytest.raises(ValueError):
        Window3D(0, 1, 0, 1, 1, 1, 4, 4, 4)
    # single-cell windows are legal (smallest serializable rasters)
    assert Window2D(0.0, 1.0, 0.0, 1.0, 1, 1).cell_diag == pytest.approx(math.sqrt(2))
    Window3D(0, 1, 0, 1, 0, 1, 1, 1, 1)


# ------------------------------------------------------------ scan semantics

def test_single_step_escape_marking():
    # centers (+-1, +-1) have norm sqrt(2), not above the p=3 radius: bounded
    r = scan2d("multibrot-complex", 3, Window2D(-2, 2, -2, 2, 2, 2), max_iter=1)
    assert r.escape.tolist() == [[0, 0], [0, 0]]
    assert r.inside().all()
    # far from the origin every first iterate already exceeds the radius
    far = scan2d("multibrot-complex", 3, Window2D(10, 11, 10, 11, 16, 16), max_iter=5)
    assert (far.escape == 1).all()


def test_far_volume_escapes_at_index_one():
    r = scan3d(PRINCIPAL, 3, Window3D(10, 11, 10, 11, 10, 11, 8, 8, 8), max_iter=5)
    assert (r.escape == 1).all()
    assert r.escape.shape == (8, 8, 8)


def test_scan2d_rejects_unknown_kind():
    with pytest.raises(ValueError):
        scan2d("mandelbrot", 2, Window2D(-1, 1, -1, 1, 4, 4), 10)


def test_raster_metadata():
    w = Window2D(-1, 1, -1, 1, 8, 6)
    r = scan2d("hyperbrot", 3, w, 25)
    assert r.window == w
    assert r.p == 3
    assert r.max_iter == 25
    assert r.kind == "hyperbrot"
    assert r.escape.shape == (6, 8)
    assert r.escape.dtype == np.uint32
    assert np.array_equal(r.inside(), r.escape == 0)


def test_multibrot_real_axis_row_ends_near_interval_bounds():
    # a 1024-cell row sampled exactly on the real axis: the inside segment
    # must end within 2 cells of +-m_3.  (Rows at y = +-dy/2, the closest an
    # even-resolution full scan gets to the axis, genuinely pick up bounded
    # off-axis points out to about +-0.394, so only y = 0 sees the interval.)
    n = 1024
    dy = 3.0 / n
    w = Window2D(-1.5, 1.5, -dy / 2, dy / 2, n, 1)
    assert w.y_centers()[0] == 0.0
    row = scan2d("multibrot-complex", 3, w, 1000).inside()[0]
    xs = w.x_centers()
    inside_x = xs[row]
    m = m_p(3)
    assert inside_x.min() == pytest.approx(-m, abs=2 * w.dx)
    assert inside_x.max() == pytest.approx(m, abs=2 * w.dx)
    # the inside set is a single contiguous segment on this row
    hits = np.flatnonzero(row)
    assert np.array_equal(hits, np.arange(hits[0], hits[-1] + 1))


def test_hyperbrot_scan_matches_diamond_up_to_boundary_cells():
    w = Window2D(-1, 1, -1, 1, 128, 128)
    r = scan2d("hyperbrot", 3, w, 10_000)
    m = m_p(3)
    want = diamond_member(w.x_centers()[None, :], w.y_centers()[:, None], m)
    want = np.broadcast_to(want, r.inside().shape)
    differ = r.inside() != want
    if differ.any():
        yy, xx = np.nonzero(differ)
        d = diamond_boundary_distance(w.x_centers()[xx], w.y_centers()[yy], m)
        assert np.max(d) <= w.cell_diag


def test_perplexbrot_scan_matches_octahedron_up_to_boundary_voxels():
    w = Window3D(-1, 1, -1, 1, -1, 1, 48, 48, 48)
    r = scan3d(PRINCIPAL, 3, w, 10_000)
    m = m_p(3)
    want = octahedron_member(
        w.x_centers()[None, None, :],
        w.y_centers()[None, :, None],
        w.z_centers()[:, None, None],
        m,
    )
    differ = r.inside() != np.broadcast_to(want, r.inside().shape)
    if differ.any():
        zz, yy, xx = np.nonzero(differ)
        d = octahedron_boundary_distance(
            w.x_centers()[xx], w.y_centers()[yy], w.z_centers()[zz], m
        )
        assert np.max(d) <= w.cell_diag


def test_larger_power_gives_larger_octahedron():
    w = Window3D(-1, 1, -1, 1, -1, 1, 32, 32, 32)
    small = scan3d(PRINCIPAL, 3, w, 500).inside()
    large = scan3d(PRINCIPAL, 9, w, 500).inside()
    assert large.sum() > small.sum()
    assert (large & small).sum() == small.sum()  # nested


def test_slice_spec_accepts_plain_tuple():
    w = Window3D(-1, 1, -1, 1, -1, 1, 16, 16, 16)
    a = scan3d(("1", "j1", "j2"), 3, w, 200)
    b = scan3d(PRINCIPAL, 3, w, 200)
    assert np.array_equal(a.escape, b.escape)
    assert a.spec == b.spec


# -------------------------------------------------------------- determinism

def test_worker_count_never_changes_a_2d_scan():
    w = Window2D(-1.2, 0.9, -1.1, 1.3, 193, 127)
    base = scan2d("multibrot-complex", 3, w, 150, workers=1)
    for workers in (4, 16):
        again = scan2d("multibrot-complex", 3, w, 150, workers=workers)
        assert np.array_equal(base.escape, again.escape)


def test_worker_count_never_changes_a_3d_scan():
    w = Window3D(-1, 1, -0.9, 1.1, -1.05, 0.95, 33, 17, 9)
    base = scan3d(PRINCIPAL, 3, w, 100, workers=1)
    for workers in (2, 5):
        again = scan3d(PRINCIPAL, 3, w, 100, workers=workers)
        assert np.array_equal(base.escape, again.escape)


# ---------------------------------------------------------------- hausdorff

def _diamond_raster(half, window):
    return rasterize2d(lambda x, y: diamond_member(x, y, half), window)


def test_hausdorff_of_identical_rasters_is_zero():
    w = Window2D(-1, 1, -1, 1, 64, 64)
    r = _diamond_raster(0.7, w)
    assert hausdorff_discrete(r, r) == 0.0
    v = Window3D(-1, 1, -1, 1, -1, 1, 16, 16, 16)
    s = rasterize3d(lambda x, y, z: octahedron_member(x, y, z, 0.7), v)
    assert hausdorff_discrete(s, s) == 0.0


def test_directed_distances_are_asymmetric_and_h_is_their_max():
    w = Window2D(-1, 1, -1, 1, 64, 64)
    big = _diamond_raster(0.9, w)
    small = _diamond_raster(0.3, w)
    d_big_small = hausdorff_directed(big, small)
    d_small_big = hausdorff_directed(small, big)
    assert d_small_big == 0.0  # nested: every small cell is a big cell
    assert d_big_small > 0.4
    assert hausdorff_discrete(big, small) == max(d_big_small, d_small_big)


def test_distance_transform_matches_naive_scan():
    w = Window2D(-1.1, 1.0, -0.9, 1.2, 48, 40)
    a = _diamond_raster(0.8, w)
    b = _diamond_raster(0.35, w)
    assert hausdorff_discrete(a, b) == pytest.approx(hausdorff_naive(a, b), abs=1e-9)
    v = Window3D(-1, 1.1, -1.2, 1, -0.9, 1, 20, 24, 18)
    c = rasterize3d(lambda x, y, z: octahedron_member(x, y, z, 0.75), v)
    d = rasterize3d(lambda x, y, z: octahedron_member(x, y, z, 0.3), v)
    assert hausdorff_discrete(c, d) == pytest.approx(hausdorff_naive(c, d), abs=1e-9)


def test_naive_scan_refuses_large_rasters():
    w = Window2D(-1, 1, -1, 1, 80, 80)
    r = _diamond_raster(0.5, w)
    with pytest.raises(ValueError):
        hausdorff_naive(r, r)


def test_hausdorff_requires_nonempty_and_matching_rasters():
    w = Window2D(-1, 1, -1, 1, 32, 32)
    full = _diamond_raster(0.5, w)
    empty = rasterize2d(lambda x, y: np.zeros(np.broadcast(x, y).shape, bool), w)
    with pytest.raises(ValueError):
        hausdorff_discrete(full, empty)
    with pytest.raises(ValueError):
        hausdorff_discrete(empty, full)
    other = _diamond_raster(0.5, Window2D(-1, 1, -1, 1, 16, 16))
    with pytest.raises(ValueError):
        hausdorff_discrete(full, other)
    three_d = rasterize3d(
        lambda x, y, z: octahedron_member(x, y, z, 0.5),
        Window3D(-1, 1, -1, 1, -1, 1, 8, 8, 8),
    )
    with pytest.raises(ValueError):
        hausdorff_discrete(full, three_d)


def test_hausdorff_against_exact_limit_value():
    # moderate-resolution version of the limit comparison: unit diamond vs
    # the p=3 hyperbrot, both rasterized analytically
    w = Window2D(-1.1, 1.1, -1.1, 1.1, 256, 256)
    unit = _diamond_raster(1.0, w)
    hp = rasterize2d(lambda x, y: hyperbrot_member(x, y, 3), w)
    h = hausdorff_discrete(unit, hp)
    assert h == pytest.approx(1.0 - m_p(3), abs=w.cell_diag)


def test_escape_scan_agrees_with_analytic_raster_via_hausdorff():
    w = Window2D(-1.1, 1.1, -1.1, 1.1, 128, 128)
    scanned = scan2d("hyperbrot", 3, w, 10_000)
    analytic = rasterize2d(lambda x, y: hyperbrot_member(x, y, 3), w)
    assert hausdorff_discrete(scanned, analytic) <= w.cell_diag
