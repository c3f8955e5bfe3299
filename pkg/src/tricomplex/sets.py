"""Closed-form membership oracles, limit constants, and conjecture probes.

For odd p > 2 the escape-time sets have exact descriptions:

* the real axis slice of the Multibrot set is the interval [-m_p, m_p] with
  m_p = (p-1)/p^(p/(p-1));
* the Hyperbrot is the filled diamond |x| + |y| <= m_p;
* the principal 3D slice on (1, j1, j2) is the regular octahedron
  |x| + |y| + |z| <= m_p;
* the Hausdorff distance from the unit diamond (octahedron) to the order-p
  one is exactly 1 - m_p.

Boundary points are members (closed sets).  For even p the analogous
statements are conjectural; ``conjecture_probe`` measures them numerically
and reports, without asserting.

Membership functions accept scalars or numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backends
from .algebra import Tricomplex, split3
from .realroots import PolyParams

__all__ = [
    "DiamondSpec",
    "OctahedronSpec",
    "ConjectureSpec",
    "ConjectureProbeReport",
    "m_p",
    "real_axis_member",
    "diamond_member",
    "octahedron_member",
    "hyperbrot_member",
    "perplexbrot_member",
    "slice_union_member",
    "hausdorff_limit",
    "discus_contains",
    "diamond_boundary_distance",
    "octahedron_boundary_distance",
    "locate_real_boundary",
    "probe_real_interval",
    "conjecture_probe",
]


def _check_power(p: int, odd_only: bool = False) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ValueError(f"power must be an integer >= 2, got {p!r}")
    if odd_only and (p == 2 or p % 2 == 0):
        raise ValueError(f"this set is characterized for odd powers > 2, got {p}")
    return p


def m_p(p: int) -> float:
    """The interval half-width (p-1)/p^(p/(p-1))."""
    _check_power(p)
    return (p - 1) / p ** (p / (p - 1))


def real_axis_member(c, p: int):
    """Whether the real parameter c keeps the orbit bounded: |c| <= m_p (odd p > 2)."""
    _check_power(p, odd_only=True)
    return abs(c) <= m_p(p)


def diamond_member(x, y, half_diag: float):
    """|x| + |y| <= half_diag."""
    return abs(x) + abs(y) <= half_diag


def octahedron_member(x, y, z, half_diag: float):
    """|x| + |y| + |z| <= half_diag."""
    return (abs(x) + abs(y)) + abs(z) <= half_diag


def hyperbrot_member(x, y, p: int):
    """Membership in the order-p Hyperbrot diamond (odd p > 2)."""
    _check_power(p, odd_only=True)
    return diamond_member(x, y, m_p(p))


def perplexbrot_member(x, y, z, p: int):
    """Membership in the order-p Perplexbrot octahedron (odd p > 2)."""
    _check_power(p, odd_only=True)
    return octahedron_member(x, y, z, m_p(p))


def slice_union_member(x, y, z, p: int):
    """Octahedron membership assembled from diamond cross sections.

    The 3D slice is the union over heights y of the translated intersections
    (diamond - y*j) with (diamond + y*j); pointwise that reads: (x, y+z) and
    (x, y-z) both in the Hyperbrot diamond.  Must agree with
    perplexbrot_member everywhere.
    """
    _check_power(p, odd_only=True)
    m = m_p(p)
    return np.logical_and(
        diamond_member(x, y + z, m),
        diamond_member(x, y - z, m),
    )


def hausdorff_limit(p: int) -> float:
    """Exact Hausdorff distance 1 - m_p between the unit diamond and the order-p one.

    The same value holds one dimension up, between the unit octahedron and
    the order-p octahedron.
    """
    _check_power(p, odd_only=True)
    return 1.0 - m_p(p)


def discus_contains(c: Tricomplex, p: int) -> bool:
    """Whether c lies in the closed discus: both split3 component norms <= radius.

    Every parameter with a bounded orbit lies in this set.
    """
    _check_power(p)
    r = PolyParams.for_power(p).escape_radius
    pair = split3(c)
    return pair.comp1.norm() <= r and pair.comp2.norm() <= r


@dataclass(frozen=True, slots=True)
class DiamondSpec:
    """The analytic Hyperbrot: diamond centered on the real axis."""

    center_x: float
    half_diag: float

    @classmethod
    def for_power(cls, p: int) -> "DiamondSpec":
        _check_power(p, odd_only=True)
        return cls(center_x=0.0, half_diag=m_p(p))


@dataclass(frozen=True, slots=True)
class OctahedronSpec:
    """The analytic Perplexbrot: regular octahedron with vertices on the axes."""

    half_diag: float
    edge: float

    @classmethod
    def for_power(cls, p: int) -> "OctahedronSpec":
        _check_power(p, odd_only=True)
        m = m_p(p)
        return cls(half_diag=m, edge=math.sqrt(2.0) * m)


@dataclass(frozen=True, slots=True)
class ConjectureSpec:
    """Conjectured even-power values: real interval and Hyperbrot square."""

    p: int
    t_p: float
    l_p: float
    interval_lo: float
    interval_hi: float

    @classmethod
    def for_power(cls, p: int) -> "ConjectureSpec":
        _check_power(p)
        if p % 2:
            raise ValueError(f"conjecture constants are for even powers, got {p}")
        root = p ** (1.0 / (p - 1))
        two_p = (2 * p) ** (1.0 / (p - 1))
        return cls(
            p=p,
            t_p=((1.0 - two_p) * p - 1.0) / (2.0 * p * root),
            l_p=((two_p + 1.0) * p - 1.0) / (p * root),
            interval_lo=-(2.0 ** (1.0 / (p - 1))),
            interval_hi=m_p(p),
        )


@dataclass(frozen=True, slots=True)
class ConjectureProbeReport:
    """Numerically observed even-power quantities next to the conjectured ones.

    Exploratory output only; nothing here is a correctness guarantee.
    """

    spec: ConjectureSpec
    interval_lo_observed: float
    interval_hi_observed: float
    center_observed: float
    diag_observed: float
    vertical_half_observed: float
    sample_agreement: float
    metzler_diag_readings: tuple[float, float] | None
    notes: tuple[str, ...]


def _real_escapes(c: float, p: int, max_iter: int, r2: float, kern) -> bool:
    return kern.real_escape(float(c), p, max_iter, r2) > 0


def locate_real_boundary(
    p: int,
    max_iter: int = 10**5,
    tol: float = 1e-6,
    backend=None,
) -> float:
    """Positive real-axis boundary of bounded parameters, by bisection on escape."""
    _check_power(p)
    kern = backends.get(backend) if isinstance(backend, (str, type(None))) else backend
    r = PolyParams.for_power(p).escape_radius
    r2 = r * r
    lo, hi = 0.0, 1.0
    while not _real_escapes(hi, p, max_iter, r2, kern):
        hi *= 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _real_escapes(mid, p, max_iter, r2, kern):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def probe_real_interval(
    p: int,
    max_iter: int = 10**5,
    tol: float = 1e-6,
    backend=None,
) -> tuple[float, float]:
    """Observed [lo, hi] of the bounded real parameters, by bisection on escape."""
    _check_power(p)
    kern = backends.get(backend) if isinstance(backend, (str, type(None))) else backend
    r = PolyParams.for_power(p).escape_radius
    r2 = r * r
    hi_end = locate_real_boundary(p, max_iter, tol, kern)
    lo, hi = -1.0, 0.0
    while not _real_escapes(lo, p, max_iter, r2, kern):
        lo *= 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _real_escapes(mid, p, max_iter, r2, kern):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), hi_end


def conjecture_probe(
    p: int,
    n_samples: int = 20000,
    max_iter: int = 10**5,
    backend=None,
    seed: int = 0,
) -> ConjectureProbeReport:
    """Measure the even-power real interval and Hyperbrot square numerically.

    Brackets the real-axis endpoints by bisection (tolerance 1e-3 or finer),
    probes the vertical half-extent of the Hyperbrot at the observed center,
    and samples n_samples random hyperbolic parameters against the conjectured
    square (skipping a 1e-3 band around its boundary, where escape times
    blow up).  Non-normative: the report states observations, nothing more.
    """
    spec = ConjectureSpec.for_power(p)
    kern = backends.get(backend) if isinstance(backend, (str, type(None))) else backend
    tol = 1e-4
    lo, hi = probe_real_interval(p, max_iter, tol, kern)
    center = 0.5 * (lo + hi)
    diag = hi - lo

    # vertical extent of the Hyperbrot at the observed center: bisect on b
    r = PolyParams.for_power(p).escape_radius
    r2 = r * r

    def hyper_escapes(a: float, b: float) -> bool:
        idx, _ = kern.hyper_escape(np.array([a]), np.array([b]), p, max_iter, r2)
        return int(idx[0]) > 0

    b_lo, b_hi = 0.0, 1.0
    while not hyper_escapes(center, b_hi):
        b_hi *= 2.0
    while b_hi - b_lo > tol:
        mid = 0.5 * (b_lo + b_hi)
        if hyper_escapes(center, mid):
            b_hi = mid
        else:
            b_lo = mid
    vertical_half = 0.5 * (b_lo + b_hi)

    # random square-membership agreement, away from the conjectured boundary
    rng = np.random.default_rng(seed)
    half = spec.l_p / 2.0
    margin = 0.2 * half
    a = rng.uniform(spec.t_p - half - margin, spec.t_p + half + margin, n_samples)
    b = rng.uniform(-half - margin, half + margin, n_samples)
    l1 = np.abs(a - spec.t_p) + np.abs(b)
    decisive = np.abs(l1 - half) > 1e-3
    idx, _ = kern.hyper_escape(a[decisive], b[decisive], p, min(max_iter, 2048), r2)
    in_square = l1[decisive] <= half
    agreement = float(np.mean(in_square == (idx == 0))) if decisive.any() else 1.0

    readings = (2.25, 2.0 * 0.25) if p == 2 else None
    notes = [
        "non-normative probe: observations only, no correctness guarantee",
        f"conjectured real interval [{spec.interval_lo:.6f}, {spec.interval_hi:.6f}]"
        f" vs observed [{lo:.6f}, {hi:.6f}]",
        f"conjectured square center {spec.t_p:.6f}, diagonal {spec.l_p:.6f}"
        f" vs observed center {center:.6f}, diagonal {diag:.6f}",
    ]
    if readings is not None:
        notes.append(
            "cited order-2 square diagonal '2 1/4' read as 2.25 or as 2*(1/4) = 0.5; "
            f"observed diagonal {diag:.6f}"
        )
    return ConjectureProbeReport(
        spec=spec,
        interval_lo_observed=lo,
        interval_hi_observed=hi,
        center_observed=center,
        diag_observed=diag,
        vertical_half_observed=vertical_half,
        sample_agreement=agreement,
        metzler_diag_readings=readings,
        notes=tuple(notes),
    )


def diamond_boundary_distance(x, y, half_diag: float):
    """Euclidean distance from (x, y) to the diamond's boundary |x| + |y| = half_diag.

    Works from either side of the boundary; accepts scalars or arrays.
    """
    m = float(half_diag)
    a = np.abs(np.asarray(x, dtype=np.float64))
    b = np.abs(np.asarray(y, dtype=np.float64))
    # fold into the first quadrant; the nearest boundary piece is the segment
    # from (m, 0) to (0, m)
    t = np.clip(((a - m) * -m + b * m) / (2.0 * m * m), 0.0, 1.0)
    px = m - t * m
    py = t * m
    d = np.hypot(a - px, b - py)
    return d if d.ndim else float(d)


def octahedron_boundary_distance(x, y, z, half_diag: float):
    """Euclidean distance from (x, y, z) to the boundary |x| + |y| + |z| = half_diag."""
    m = float(half_diag)
    q = np.stack(
        [
            np.abs(np.asarray(x, dtype=np.float64)),
            np.abs(np.asarray(y, dtype=np.float64)),
            np.abs(np.asarray(z, dtype=np.float64)),
        ]
    )
    s = q.sum(axis=0) - m
    proj = q - s / 3.0
    on_face = (proj >= 0.0).all(axis=0)
    d_face = np.abs(s) / math.sqrt(3.0)

    verts = np.array([[m, 0.0, 0.0], [0.0, m, 0.0], [0.0, 0.0, m]])
    d_edge = None
    for i, j in ((0, 1), (1, 2), (2, 0)):
        av = verts[i].reshape(3, *([1] * (q.ndim - 1)))
        bv = verts[j].reshape(3, *([1] * (q.ndim - 1)))
        e = bv - av
        t = np.clip(((q - av) * e).sum(axis=0) / (e * e).sum(axis=0), 0.0, 1.0)
        closest = av + t * e
        d = np.sqrt(((q - closest) ** 2).sum(axis=0))
        d_edge = d if d_edge is None else np.minimum(d_edge, d)

    out = np.where(on_face, d_face, d_edge)
    return out if out.ndim else float(out)
