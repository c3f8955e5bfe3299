"""Escape-time kernels, numpy implementation.

This module is the portable fallback for the compiled extension
``tricomplex._kernels``; both expose the same functions and are kept
bit-identical by freezing the floating-point operation order:

* powers use right-to-left binary exponentiation; a complex square is
  (br*br - bi*bi, 2*(br*bi)); a complex product is
  (ar*br - ai*bi, ar*bi + ai*br);
* squared norms accumulate left to right: complex x*x + y*y, hyperbolic
  (u*u + v*v) * 0.5, quad (((s1 + s2) + s3) + s4) * 0.25;
* escape is the first index m (1-based) with squared norm strictly
  greater than r2; 0 means no escape within max_iter.

Grid kernels take precomputed center-coordinate arrays and write escape
indexes into caller-supplied uint32 arrays, so tiling cannot change results.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def _pow_complex(br, bi, p):
    """Elementwise (br + i bi)**p by binary exponentiation, frozen order."""
    rr = np.ones_like(br)
    ri = np.zeros_like(bi)
    e = p
    while True:
        if e & 1:
            rr, ri = rr * br - ri * bi, rr * bi + ri * br
        e >>= 1
        if not e:
            break
        br, bi = br * br - bi * bi, 2.0 * (br * bi)
    return rr, ri


def _pow_real(b, p):
    r = np.ones_like(b)
    e = p
    while True:
        if e & 1:
            r = r * b
        e >>= 1
        if not e:
            break
        b = b * b
    return r


def _as_f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def complex_escape(cr, ci, p, max_iter, r2):
    """Escape indexes and final squared norms for a batch of complex parameters."""
    cr = _as_f64(cr).ravel()
    ci = _as_f64(ci).ravel()
    n = cr.size
    idx = np.zeros(n, dtype=np.uint32)
    fn2 = np.zeros(n, dtype=np.float64)
    if n == 0:
        return idx, fn2
    alive = np.arange(n)
    acr, aci = cr.copy(), ci.copy()
    zr = np.zeros(n)
    zi = np.zeros(n)
    n2 = np.zeros(n)
    for m in range(1, max_iter + 1):
        zr, zi = _pow_complex(zr, zi, p)
        zr = zr + acr
        zi = zi + aci
        n2 = zr * zr + zi * zi
        esc = n2 > r2
        if esc.any():
            hit = alive[esc]
            idx[hit] = m
            fn2[hit] = n2[esc]
            keep = ~esc
            alive = alive[keep]
            zr, zi, n2 = zr[keep], zi[keep], n2[keep]
            acr, aci = acr[keep], aci[keep]
            if alive.size == 0:
                return idx, fn2
    fn2[alive] = n2
    return idx, fn2


def hyper_escape(a, b, p, max_iter, r2):
    """Escape data for hyperbolic parameters a + b j, iterated componentwise.

    Internally runs the two conjugated real orbits with constants a - b and
    a + b; the squared norm of the hyperbolic state is (u*u + v*v) * 0.5.
    """
    a = _as_f64(a).ravel()
    b = _as_f64(b).ravel()
    n = a.size
    idx = np.zeros(n, dtype=np.uint32)
    fn2 = np.zeros(n, dtype=np.float64)
    if n == 0:
        return idx, fn2
    alive = np.arange(n)
    cu = a - b
    cv = a + b
    u = np.zeros(n)
    v = np.zeros(n)
    n2 = np.zeros(n)
    for m in range(1, max_iter + 1):
        u = _pow_real(u, p) + cu
        v = _pow_real(v, p) + cv
        n2 = (u * u + v * v) * 0.5
        esc = n2 > r2
        if esc.any():
            hit = alive[esc]
            idx[hit] = m
            fn2[hit] = n2[esc]
            keep = ~esc
            alive = alive[keep]
            u, v, n2 = u[keep], v[keep], n2[keep]
            cu, cv = cu[keep], cv[keep]
            if alive.size == 0:
                return idx, fn2
    fn2[alive] = n2
    return idx, fn2


def quad_escape(qr, qi, p, max_iter, r2):
    """Escape data for tricomplex parameters given as idempotent quads.

    qr, qi: float64 arrays of shape (4, n), the real and imaginary parts of
    the four complex components.  The squared tricomplex norm is
    (((s1 + s2) + s3) + s4) * 0.25 with sk = |q_k|^2.
    """
    qr = _as_f64(qr).reshape(4, -1)
    qi = _as_f64(qi).reshape(4, -1)
    n = qr.shape[1]
    idx = np.zeros(n, dtype=np.uint32)
    fn2 = np.zeros(n, dtype=np.float64)
    if n == 0:
        return idx, fn2
    alive = np.arange(n)
    cqr, cqi = qr.copy(), qi.copy()
    zr = np.zeros((4, n))
    zi = np.zeros((4, n))
    n2 = np.zeros(n)
    for m in range(1, max_iter + 1):
        zr, zi = _pow_complex(zr, zi, p)
        zr = zr + cqr
        zi = zi + cqi
        s = zr * zr + zi * zi
        n2 = (((s[0] + s[1]) + s[2]) + s[3]) * 0.25
        esc = n2 > r2
        if esc.any():
            hit = alive[esc]
            idx[hit] = m
            fn2[hit] = n2[esc]
            keep = ~esc
            alive = alive[keep]
            zr, zi, n2 = zr[:, keep], zi[:, keep], n2[keep]
            cqr, cqi = cqr[:, keep], cqi[:, keep]
            if alive.size == 0:
                return idx, fn2
    fn2[alive] = n2
    return idx, fn2


def real_escape(c, p, max_iter, r2):
    """Escape index of the real orbit x <- x**p + c from 0; scalar, 0 if bounded."""
    c = float(c)
    x = 0.0
    for m in range(1, max_iter + 1):
        b = x
        e = p
        y = 1.0
        while True:
            if e & 1:
                y = y * b
            e >>= 1
            if not e:
                break
            b = b * b
        x = y + c
        if x * x > r2:
            return m
    return 0


def complex_grid(xs, ys, p, max_iter, r2, out):
    """Fill out[j, i] with the escape index of parameter (xs[i], ys[j])."""
    xs = _as_f64(xs)
    ys = _as_f64(ys)
    cr = np.tile(xs, ys.size)
    ci = np.repeat(ys, xs.size)
    idx, _ = complex_escape(cr, ci, p, max_iter, r2)
    out[:, :] = idx.reshape(ys.size, xs.size)


def hyper_grid(xs, ys, p, max_iter, r2, out):
    """Fill out[j, i] with the escape index of hyperbolic parameter xs[i] + ys[j] j."""
    xs = _as_f64(xs)
    ys = _as_f64(ys)
    a = np.tile(xs, ys.size)
    b = np.repeat(ys, xs.size)
    idx, _ = hyper_escape(a, b, p, max_iter, r2)
    out[:, :] = idx.reshape(ys.size, xs.size)


def quad_grid(xs, ys, zs, u1r, u1i, u2r, u2i, u3r, u3i, p, max_iter, r2, out):
    """Fill out[k, j, i] for parameters xs[i]*U1 + ys[j]*U2 + zs[k]*U3.

    U1, U2, U3 are given by the quad components of the three axis units
    (u*r, u*i: float64 arrays of length 4); out has shape (zs, ys, xs).
    """
    xs = _as_f64(xs)
    ys = _as_f64(ys)
    zs = _as_f64(zs)
    nx, ny, nz = xs.size, ys.size, zs.size
    x = np.tile(xs, ny * nz)
    y = np.tile(np.repeat(ys, nx), nz)
    z = np.repeat(zs, nx * ny)
    n = nx * ny * nz
    qr = np.empty((4, n))
    qi = np.empty((4, n))
    for k in range(4):
        qr[k] = (x * u1r[k] + y * u2r[k]) + z * u3r[k]
        qi[k] = (x * u1i[k] + y * u2i[k]) + z * u3i[k]
    idx, _ = quad_escape(qr, qi, p, max_iter, r2)
    out[:, :, :] = idx.reshape(nz, ny, nx)
