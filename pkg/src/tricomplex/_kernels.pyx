# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Escape-time kernels, compiled implementation.

Mirrors ``tricomplex._kernels_py`` exactly: same functions, same frozen
floating-point operation order (see that module's docstring), built with
-ffp-contract=off so results are bit-identical to the numpy fallback.
"""

import numpy as np

NAME = "compiled"


cdef inline void _cpow(double br, double bi, int p, double* outr, double* outi) noexcept nogil:
    cdef double rr = 1.0
    cdef double ri = 0.0
    cdef double t
    cdef int e = p
    while True:
        if e & 1:
            t = rr * br - ri * bi
            ri = rr * bi + ri * br
            rr = t
        e >>= 1
        if not e:
            break
        t = br * br - bi * bi
        bi = 2.0 * (br * bi)
        br = t
    outr[0] = rr
    outi[0] = ri


cdef inline double _rpow(double b, int p) noexcept nogil:
    cdef double r = 1.0
    cdef int e = p
    while True:
        if e & 1:
            r = r * b
        e >>= 1
        if not e:
            break
        b = b * b
    return r


cdef inline unsigned int _complex_escape_one(double cr, double ci, int p, int max_iter,
                                             double r2, double* fn2) noexcept nogil:
    cdef double zr = 0.0
    cdef double zi = 0.0
    cdef double wr, wi
    cdef double n2 = 0.0
    cdef int m
    for m in range(1, max_iter + 1):
        _cpow(zr, zi, p, &wr, &wi)
        zr = wr + cr
        zi = wi + ci
        n2 = zr * zr + zi * zi
        if n2 > r2:
            fn2[0] = n2
            return <unsigned int> m
    fn2[0] = n2
    return 0


cdef inline unsigned int _hyper_escape_one(double a, double b, int p, int max_iter,
                                           double r2, double* fn2) noexcept nogil:
    cdef double cu = a - b
    cdef double cv = a + b
    cdef double u = 0.0
    cdef double v = 0.0
    cdef double n2 = 0.0
    cdef int m
    for m in range(1, max_iter + 1):
        u = _rpow(u, p) + cu
        v = _rpow(v, p) + cv
        n2 = (u * u + v * v) * 0.5
        if n2 > r2:
            fn2[0] = n2
            return <unsigned int> m
    fn2[0] = n2
    return 0


cdef inline unsigned int _quad_escape_one(const double* cqr, const double* cqi, int p,
                                          int max_iter, double r2, double* fn2) noexcept nogil:
    cdef double zr[4]
    cdef double zi[4]
    cdef double wr, wi, s1, s2, s3, s4
    cdef double n2 = 0.0
    cdef int m, k
    for k in range(4):
        zr[k] = 0.0
        zi[k] = 0.0
    for m in range(1, max_iter + 1):
        for k in range(4):
            _cpow(zr[k], zi[k], p, &wr, &wi)
            zr[k] = wr + cqr[k]
            zi[k] = wi + cqi[k]
        s1 = zr[0] * zr[0] + zi[0] * zi[0]
        s2 = zr[1] * zr[1] + zi[1] * zi[1]
        s3 = zr[2] * zr[2] + zi[2] * zi[2]
        s4 = zr[3] * zr[3] + zi[3] * zi[3]
        n2 = (((s1 + s2) + s3) + s4) * 0.25
        if n2 > r2:
            fn2[0] = n2
            return <unsigned int> m
    fn2[0] = n2
    return 0


def complex_escape(cr, ci, int p, int max_iter, double r2):
    """Escape indexes and final squared norms for a batch of complex parameters."""
    cdef double[::1] vcr = np.ascontiguousarray(cr, dtype=np.float64).ravel()
    cdef double[::1] vci = np.ascontiguousarray(ci, dtype=np.float64).ravel()
    cdef Py_ssize_t n = vcr.shape[0]
    idx = np.zeros(n, dtype=np.uint32)
    fn2 = np.zeros(n, dtype=np.float64)
    cdef unsigned int[::1] vidx = idx
    cdef double[::1] vfn2 = fn2
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            vidx[i] = _complex_escape_one(vcr[i], vci[i], p, max_iter, r2, &vfn2[i])
    return idx, fn2


def hyper_escape(a, b, int p, int max_iter, double r2):
    """Escape data for hyperbolic parameters a + b j, conjugated componentwise form."""
    cdef double[::1] va = np.ascontiguousarray(a, dtype=np.float64).ravel()
    cdef double[::1] vb = np.ascontiguousarray(b, dtype=np.float64).ravel()
    cdef Py_ssize_t n = va.shape[0]
    idx = np.zeros(n, dtype=np.uint32)
    fn2 = np.zeros(n, dtype=np.float64)
    cdef unsigned int[::1] vidx = idx
    cdef double[::1] vfn2 = fn2
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            vidx[i] = _hyper_escape_one(va[i], vb[i], p, max_iter, r2, &vfn2[i])
    return idx, fn2


def quad_escape(qr, qi, int p, int max_iter, double r2):
    """Escape data for tricomplex parameters given as (4, n) idempotent quads."""
    cdef double[:, ::1] vqr = np.ascontiguousarray(qr, dtype=np.float64).reshape(4, -1)
    cdef double[:, ::1] vqi = np.ascontiguousarray(qi, dtype=np.float64).reshape(4, -1)
    cdef Py_ssize_t n = vqr.shape[1]
    idx = np.zeros(n, dtype=np.uint32)
    fn2 = np.zeros(n, dtype=np.float64)
    cdef unsigned int[::1] vidx = idx
    cdef double[::1] vfn2 = fn2
    cdef double cqr[4]
    cdef double cqi[4]
    cdef Py_ssize_t i
    cdef int k
    with nogil:
        for i in range(n):
            for k in range(4):
                cqr[k] = vqr[k, i]
                cqi[k] = vqi[k, i]
            vidx[i] = _quad_escape_one(cqr, cqi, p, max_iter, r2, &vfn2[i])
    return idx, fn2


def real_escape(double c, int p, int max_iter, double r2):
    """Escape index of the real orbit x <- x**p + c from 0; 0 if bounded."""
    cdef double x = 0.0
    cdef int m
    cdef int res = 0
    with nogil:
        for m in range(1, max_iter + 1):
            x = _rpow(x, p) + c
            if x * x > r2:
                res = m
                break
    return res


def complex_grid(double[::1] xs, double[::1] ys, int p, int max_iter, double r2,
                 unsigned int[:, ::1] out):
    """Fill out[j, i] with the escape index of parameter (xs[i], ys[j])."""
    cdef Py_ssize_t i, j
    cdef double fn2
    with nogil:
        for j in range(ys.shape[0]):
            for i in range(xs.shape[0]):
                out[j, i] = _complex_escape_one(xs[i], ys[j], p, max_iter, r2, &fn2)


def hyper_grid(double[::1] xs, double[::1] ys, int p, int max_iter, double r2,
               unsigned int[:, ::1] out):
    """Fill out[j, i] with the escape index of hyperbolic parameter xs[i] + ys[j] j."""
    cdef Py_ssize_t i, j
    cdef double fn2
    with nogil:
        for j in range(ys.shape[0]):
            for i in range(xs.shape[0]):
                out[j, i] = _hyper_escape_one(xs[i], ys[j], p, max_iter, r2, &fn2)


def quad_grid(double[::1] xs, double[::1] ys, double[::1] zs,
              double[::1] u1r, double[::1] u1i, double[::1] u2r, double[::1] u2i,
              double[::1] u3r, double[::1] u3i,
              int p, int max_iter, double r2, unsigned int[:, :, ::1] out):
    """Fill out[k, j, i] for parameters xs[i]*U1 + ys[j]*U2 + zs[k]*U3."""
    cdef Py_ssize_t i, j, k
    cdef int t
    cdef double x, y, z, fn2
    cdef double cqr[4]
    cdef double cqi[4]
    with nogil:
        for k in range(zs.shape[0]):
            z = zs[k]
            for j in range(ys.shape[0]):
                y = ys[j]
                for i in range(xs.shape[0]):
                    x = xs[i]
                    for t in range(4):
                        cqr[t] = (x * u1r[t] + y * u2r[t]) + z * u3r[t]
                        cqi[t] = (x * u1i[t] + y * u2i[t]) + z * u3i[t]
                    out[k, j, i] = _quad_escape_one(cqr, cqi, p, max_iter, r2, &fn2)
