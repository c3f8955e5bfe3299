"""Escape-time iteration of Q(eta) = eta^p + c across the number tower.

An orbit starts at 0 and escapes at the first index m (1-based, so the first
iterate is c itself) whose norm exceeds the escape radius 2^(1/(p-1)); an
orbit that stays at or below the radius forever is bounded.  Hot paths live
in the kernel backends and work on the idempotent components; the direct
table-multiplication route is kept alongside as an independent cross-check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import backends
from .algebra import Hyperbolic, Tricomplex, norm3, split4, tpow
from .realroots import PolyParams

__all__ = [
    "OrbitResult",
    "HyperState",
    "orbit",
    "orbit_many",
    "orbit_complex",
    "orbit_hyper",
    "hyper_trajectory",
    "t_conjugate",
    "rotate_param",
    "monotone_check",
    "orbit_max_norm",
    "split4_batch",
]


@dataclass(frozen=True, slots=True)
class OrbitResult:
    escaped: bool
    escape_index: int | None
    final_norm: float
    iterations_run: int


@dataclass(frozen=True, slots=True)
class HyperState:
    """An R^2 state (x, y) standing for the hyperbolic number x + y j."""

    x: float
    y: float

    def diamond_mul(self, other: "HyperState") -> "HyperState":
        return HyperState(
            self.x * other.x + self.y * other.y,
            self.y * other.x + self.x * other.y,
        )

    def diamond_pow(self, p: int) -> "HyperState":
        result = HyperState(1.0, 0.0)
        base = self
        e = p
        while e:
            if e & 1:
                result = result.diamond_mul(base)
            e >>= 1
            if e:
                base = base.diamond_mul(base)
        return result

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y)


def t_conjugate(x: float, y: float) -> tuple[float, float]:
    """The linear map T(x, y) = (x - y, x + y) that diagonalizes the j action."""
    return (x - y, x + y)


def _result(idx: int, fn2: float, max_iter: int) -> OrbitResult:
    escaped = idx > 0
    return OrbitResult(
        escaped=escaped,
        escape_index=int(idx) if escaped else None,
        final_norm=math.sqrt(fn2),
        iterations_run=int(idx) if escaped else max_iter,
    )


def split4_batch(coeffs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized split4 of an (n, 8) coefficient array -> (4, n) re and im parts.

    Mirrors algebra.split4 operation for operation so scalar and batch paths
    agree bitwise.
    """
    c = np.asarray(coeffs, dtype=np.float64).reshape(-1, 8).T
    x0, x1, x2, x3, x4, x5, x6, x7 = c
    z1re, z1im, z2re, z2im = x0 + x7, x1 + x4, x2 - x3, x5 - x6
    w1re, w1im, w2re, w2im = x0 - x7, x1 - x4, x2 + x3, x5 + x6
    qr = np.stack([z1re + z2im, z1re - z2im, w1re + w2im, w1re - w2im])
    qi = np.stack([z1im - z2re, z1im + z2re, w1im - w2re, w1im + w2re])
    return qr, qi


def orbit(
    c: Tricomplex,
    params: PolyParams,
    max_iter: int,
    method: str = "split",
    backend=None,
) -> OrbitResult:
    """Escape-time orbit of a tricomplex parameter.

    method "split" runs four independent complex orbits over the idempotent
    components (the fast path); method "direct" iterates with the full
    table product.  Both test the same tricomplex norm, reconstructed on the
    split path as sqrt((|q1|^2 + |q2|^2 + |q3|^2 + |q4|^2)/4), so the escape
    decisions agree (up to rounding at exact-threshold ties).
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    p = params.p
    r2 = params.escape_radius * params.escape_radius
    if method == "split":
        q = split4(c)
        qr = np.array([[z.real] for z in q.parts])
        qi = np.array([[z.imag] for z in q.parts])
        kern = backends.get(backend) if isinstance(backend, (str, type(None))) else backend
        idx, fn2 = kern.quad_escape(qr, qi, p, max_iter, r2)
        return _result(int(idx[0]), float(fn2[0]), max_iter)
    if method == "direct":
        eta = Tricomplex.zero()
        n2 = 0.0
        for m in range(1, max_iter + 1):
            eta = tpow(eta, p) + c
            x = eta.coeffs
            n2 = x[0] * x[0]
            for k in range(1, 8):
                n2 += x[k] * x[k]
            if n2 > r2:
                return _result(m, n2, max_iter)
        return _result(0, n2, max_iter)
    raise ValueError(f"unknown method {method!r}; use 'split' or 'direct'")


def orbit_many(
    coeffs: np.ndarray,
    p: int,
    max_iter: int,
    method: str = "split",
    backend=None,
) -> tuple[np.ndarray, np.ndarray]:
    """Batch orbit of (n, 8) tricomplex coefficients -> (escape indexes, final norm^2).

    Index 0 means bounded within max_iter.  The "direct" method iterates with
    the structure-tensor product (an einsum over the unit table) and exists as
    the independent route for equivalence checks against "split".
    """
    coeffs = np.asarray(coeffs, dtype=np.float64).reshape(-1, 8)
    params = PolyParams.for_power(p)
    r2 = params.escape_radius * params.escape_radius
    if method == "split":
        qr, qi = split4_batch(coeffs)
        kern = backends.get(backend) if isinstance(backend, (str, type(None))) else backend
        return kern.quad_escape(qr, qi, p, max_iter, r2)
    if method == "direct":
        return _direct_escape_many(coeffs, p, max_iter, r2)
    raise ValueError(f"unknown method {method!r}; use 'split' or 'direct'")


def _direct_escape_many(coeffs, p, max_iter, r2):
    from .algebra import structure_tensor

    tensor = structure_tensor()

    def table_mul(a, b):
        return np.einsum("rck,nr,nc->nk", tensor, a, b)

    def table_pow(z, e):
        result = np.zeros_like(z)
        result[:, 0] = 1.0
        base = z
        while e:
            if e & 1:
                result = table_mul(result, base)
            e >>= 1
            if e:
                base = table_mul(base, base)
        return result

    n = coeffs.shape[0]
    idx = np.zeros(n, dtype=np.uint32)
    fn2 = np.zeros(n, dtype=np.float64)
    if n == 0:
        return idx, fn2
    alive = np.arange(n)
    c = coeffs.copy()
    eta = np.zeros_like(c)
    n2 = np.zeros(n)
    for m in range(1, max_iter + 1):
        eta = table_pow(eta, p) + c
        n2 = (eta * eta).sum(axis=1)
        esc = n2 > r2
        if esc.any():
            hit = alive[esc]
            idx[hit] = m
            fn2[hit] = n2[esc]
            keep = ~esc
            alive, eta, c, n2 = alive[keep], eta[keep], c[keep], n2[keep]
            if alive.size == 0:
                return idx, fn2
    fn2[alive] = n2
    return idx, fn2


def orbit_complex(
    c: complex,
    p: int,
    max_iter: int,
    backend=None,
) -> OrbitResult:
    """Escape-time orbit of an ordinary complex parameter."""
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    params = PolyParams.for_power(p)
    r2 = params.escape_radius * params.escape_radius
    kern = backends.get(backend) if isinstance(backend, (str, type(None))) else backend
    idx, fn2 = kern.complex_escape(
        np.array([complex(c).real]), np.array([complex(c).imag]), p, max_iter, r2
    )
    return _result(int(idx[0]), float(fn2[0]), max_iter)


def orbit_hyper(
    a: float,
    b: float,
    p: int,
    max_iter: int,
    method: str = "conjugate",
    backend=None,
) -> OrbitResult:
    """Escape-time orbit of the hyperbolic parameter a + b j (odd p > 2).

    method "conjugate" runs the two T-conjugated real orbits with constants
    a - b and a + b (the fast path); method "diamond" iterates the R^2 power
    map directly.  Both use the hyperbolic norm sqrt(x^2 + y^2), so the
    escape decisions agree.
    """
    if not isinstance(p, int) or isinstance(p, bool) or p <= 2 or p % 2 == 0:
        raise ValueError(f"hyperbolic orbits need an odd power > 2, got {p!r}")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    params = PolyParams.for_power(p)
    r2 = params.escape_radius * params.escape_radius
    if method == "conjugate":
        kern = backends.get(backend) if isinstance(backend, (str, type(None))) else backend
        idx, fn2 = kern.hyper_escape(
            np.array([float(a)]), np.array([float(b)]), p, max_iter, r2
        )
        return _result(int(idx[0]), float(fn2[0]), max_iter)
    if method == "diamond":
        state = HyperState(0.0, 0.0)
        const = HyperState(float(a), float(b))
        n2 = 0.0
        for m in range(1, max_iter + 1):
            w = state.diamond_pow(p)
            state = HyperState(w.x + const.x, w.y + const.y)
            n2 = state.x * state.x + state.y * state.y
            if n2 > r2:
                return _result(m, n2, max_iter)
        return _result(0, n2, max_iter)
    raise ValueError(f"unknown method {method!r}; use 'conjugate' or 'diamond'")


def hyper_trajectory(a: float, b: float, p: int, n: int) -> list[HyperState]:
    """First n iterates of the R^2 power map with constant (a, b), diamond route."""
    const = HyperState(float(a), float(b))
    state = HyperState(0.0, 0.0)
    out = []
    for _ in range(n):
        w = state.diamond_pow(p)
        state = HyperState(w.x + const.x, w.y + const.y)
        out.append(state)
    return out


def rotate_param(c: complex, p: int, k: int) -> complex:
    """Rotate a parameter by 2*pi*k/(p-1); exact for quarter-turn multiples.

    The escape-time sets for z^p + c are invariant under this rotation group
    of order p - 1.  k is reduced mod p - 1.
    """
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ValueError(f"power must be an integer >= 2, got {p!r}")
    c = complex(c)
    order = p - 1
    k = k % order
    if k == 0:
        return c
    num = 4 * k
    if num % order == 0:
        quarter = (num // order) % 4
        if quarter == 1:
            return complex(-c.imag, c.real)
        if quarter == 2:
            return -c
        if quarter == 3:
            return complex(c.imag, -c.real)
        return c
    return c * cmath.exp(2j * math.pi * k / order)


def monotone_check(c: float, p: int, n: int) -> bool:
    """True iff the first n real iterates of x^p + c from 0 never decrease.

    For 0 < c the exact sequence is strictly increasing (it either converges
    to the smallest fixed point above 0 or diverges); in doubles a converging
    orbit eventually stalls at the attracting fixed point, where increments
    drop below float resolution, so a stall (next == x) counts as monotone
    and only a strict decrease refutes.  Iterates beyond 1e30 are treated as
    divergent-and-increasing to dodge float overflow.
    """
    c = float(c)
    if not c > 0.0:
        raise ValueError(f"monotone_check needs c > 0, got {c}")
    from .realroots import real_pow

    x = 0.0
    for _ in range(n):
        nxt = real_pow(x, p) + c
        if nxt < x:
            return False
        if nxt == x:
            return True
        x = nxt
        if x > 1e30:
            return True
    return True


def orbit_max_norm(c: float, p: int, n: int) -> float:
    """Max |x_m| over the first n real iterates of x^p + c from 0 (test utility)."""
    from .realroots import real_pow

    x = 0.0
    worst = 0.0
    for _ in range(n):
        x = real_pow(x, p) + c
        worst = max(worst, abs(x))
        if worst > 1e30:
            return worst
    return worst
