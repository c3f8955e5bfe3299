import math

import numpy as np
import pytest

from tricomplex import backends
from tricomplex.algebra import SliceSpec
from tricomplex.dynamics import split4_batch
from tricomplex.raster import Window2D, Window3D, scan2d, scan3d
from tricomplex.realroots import PolyParams

HAVE_COMPILED = "compiled" in backends.names()
needs_compiled = pytest.mark.skipif(
    not HAVE_COMPILED, reason="compiled extension not built"
)

R2_P3 = PolyParams.for_power(3).escape_radius ** 2


def test_backend_registry():
    assert "python" in backends.names()
    assert backends.get("python").NAME == "python"
    assert backends.get(None) is backends.get(backends.default_name())
    with pytest.raises(ValueError):
        backends.get("fortran")


def test_set_default_round_trip():
    original = backends.default_name()
    try:
        backends.set_default("python")
        assert backends.default_name() == "python"
    finally:
        backends.set_default(original)
    assert backends.default_name() == original


@needs_compiled
def test_compiled_backend_is_the_default_when_present():
    assert backends.default_name() == "compiled"
    assert backends.get("compiled").NAME == "compiled"


@needs_compiled
def test_escape_batches_are_bit_identical():
    rng = np.random.default_rng(16)
    py = backends.get("python")
    cc = backends.get("compiled")

    cr = rng.uniform(-1.5, 1.5, 4000)
    ci = rng.uniform(-1.5, 1.5, 4000)
    for p in (2, 3, 5, 8):
        r2 = PolyParams.for_power(p).escape_radius ** 2
        ia, fa = py.complex_escape(cr, ci, p, 120, r2)
        ib, fb = cc.complex_escape(cr, ci, p, 120, r2)
        assert np.array_equal(ia, ib)
        assert np.array_equal(fa, fb)  # bitwise, including the norms

    a = rng.uniform(-1.2, 1.2, 4000)
    b = rng.uniform(-1.2, 1.2, 4000)
    ia, fa = py.hyper_escape(a, b, 3, 120, R2_P3)
    ib, fb = cc.hyper_escape(a, b, 3, 120, R2_P3)
    assert np.array_equal(ia, ib)
    assert np.array_equal(fa, fb)

    coeffs = rng.uniform(-0.8, 0.8, (2000, 8))
    qr, qi = split4_batch(coeffs)
    ia, fa = py.quad_escape(qr, qi, 3, 100, R2_P3)
    ib, fb = cc.quad_escape(qr, qi, 3, 100, R2_P3)
    assert np.array_equal(ia, ib)
    assert np.array_equal(fa, fb)


@needs_compiled
def test_real_escape_is_bit_identical():
    py = backends.get("python")
    cc = backends.get("compiled")
    for c in np.linspace(-1.3, 1.3, 1001):
        assert py.real_escape(float(c), 3, 300, R2_P3) == cc.real_escape(
            float(c), 3, 300, R2_P3
        )


@needs_compiled
def test_grid_kernels_are_bit_identical():
    py = backends.get("python")
    cc = backends.get("compiled")
    xs = np.linspace(-1.4, 1.4, 57)
    ys = np.linspace(-1.2, 1.2, 43)
    for kernel in ("complex_grid", "hyper_grid"):
        out_py = np.zeros((43, 57), dtype=np.uint32)
        out_cc = np.zeros((43, 57), dtype=np.uint32)
        getattr(py, kernel)(xs, ys, 3, 150, R2_P3, out_py)
        getattr(cc, kernel)(xs, ys, 3, 150, R2_P3, out_cc)
        assert np.array_equal(out_py, out_cc), kernel

    zs = np.linspace(-1.0, 1.0, 11)
    unit_parts = []
    for quad in SliceSpec(("1", "j1", "j2")).axis_quads():
        unit_parts.append(np.array([q.real for q in quad.parts]))
        unit_parts.append(np.array([q.imag for q in quad.parts]))
    out_py = np.zeros((11, 43, 57), dtype=np.uint32)
    out_cc = np.zeros((11, 43, 57), dtype=np.uint32)
    py.quad_grid(xs, ys, zs, *unit_parts, 3, 80, R2_P3, out_py)
    cc.quad_grid(xs, ys, zs, *unit_parts, 3, 80, R2_P3, out_cc)
    assert np.array_equal(out_py, out_cc)


@needs_compiled
def test_scans_are_backend_independent():
    w = Window2D(-1.5, 1.5, -1.5, 1.5, 96, 80)
    a = scan2d("multibrot-complex", 3, w, 200, backend="python")
    b = scan2d("multibrot-complex", 3, w, 200, backend="compiled")
    assert np.array_equal(a.escape, b.escape)

    v = Window3D(-1, 1, -1, 1, -1, 1, 20, 20, 20)
    c = scan3d(("1", "j1", "j2"), 5, v, 120, backend="python")
    d = scan3d(("1", "j1", "j2"), 5, v, 120, backend="compiled")
    assert np.array_equal(c.escape, d.escape)


def test_python_backend_handles_empty_batches():
    py = backends.get("python")
    idx, fn2 = py.complex_escape(np.empty(0), np.empty(0), 3, 10, R2_P3)
    assert idx.shape == (0,) and fn2.shape == (0,)


def test_final_norm_squared_is_consistent():
    # fn2 for an escaping complex parameter is the squared modulus of the
    # first iterate past the radius
    py = backends.get("python")
    idx, fn2 = py.complex_escape(np.array([2.0]), np.array([0.0]), 3, 10, R2_P3)
    assert idx[0] == 1
    assert fn2[0] == 4.0
    # 1.3 itself sits inside the radius sqrt(2); the second iterate leaves
    z = 1.3 * (1.3 * 1.3) + 1.3
    idx2, fn22 = py.complex_escape(np.array([1.3]), np.array([0.0]), 3, 10, R2_P3)
    assert idx2[0] == 2
    assert fn22[0] == z * z
