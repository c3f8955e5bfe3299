"""Self-check suites: every library invariant rerun as a pass/fail row.

Each suite draws its own seeded RNG, so runs are reproducible; rows carry the
expected value, the observed value, and the tolerance that decided the pass
flag.  ``run_suite("all")`` concatenates every suite.  The conjecture rows
for powers 4 and 6 are observational: they always pass and exist to report
the measured interval against the conjectured formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backends
from .algebra import (
    IdempotentPair3,
    IdempotentQuad,
    Tricomplex,
    UNIT_NAMES,
    UNIT_PRODUCT_INDEX,
    UNIT_PRODUCT_SIGN,
    join3,
    join4,
    mul,
    norm3,
    norm3_from_pair,
    split3,
    split4,
)
from .dynamics import (
    hyper_trajectory,
    orbit_many,
    orbit_max_norm,
    rotate_param,
    t_conjugate,
)
from .realroots import PolyParams, classify, eval_R, real_pow, refine_bounds
from .sets import (
    ConjectureSpec,
    conjecture_probe,
    diamond_boundary_distance,
    diamond_member,
    hausdorff_limit,
    m_p,
    octahedron_boundary_distance,
    octahedron_member,
    perplexbrot_member,
    real_axis_member,
    slice_union_member,
)
from .raster import (
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

__all__ = ["CheckRow", "SUITE_NAMES", "run_suite"]

SUITE_NAMES = ("algebra", "roots", "dynamics", "sets", "raster")


@dataclass(frozen=True, slots=True)
class CheckRow:
    name: str
    expected: object
    observed: object
    tolerance: object
    passed: bool


def _row(name, expected, observed, tolerance, passed) -> CheckRow:
    return CheckRow(name, expected, observed, tolerance, bool(passed))


def _random_tricomplex(rng) -> Tricomplex:
    return Tricomplex(*rng.uniform(-1.0, 1.0, 8))


# ---------------------------------------------------------------- algebra

def algebra_suite(seed: int = 0) -> list[CheckRow]:
    rng = np.random.default_rng(seed)
    rows = []

    exact = 0
    for i in range(8):
        for j in range(8):
            got = mul(Tricomplex.unit(UNIT_NAMES[i]), Tricomplex.unit(UNIT_NAMES[j]))
            want = [0.0] * 8
            want[UNIT_PRODUCT_INDEX[i][j]] = float(UNIT_PRODUCT_SIGN[i][j])
            exact += list(got.coeffs) == want
    rows.append(_row("algebra/unit_table_closure", 64, exact, 0, exact == 64))

    n = 100_000
    worst3 = 0.0
    worst4 = 0.0
    worst_norm = 0.0
    for _ in range(n):
        a = _random_tricomplex(rng)
        b = _random_tricomplex(rng)
        ref = mul(a, b)
        scale = 1.0 + norm3(a) * norm3(b)

        sa, sb = split3(a), split3(b)
        via3 = join3(IdempotentPair3(sa.comp1 * sb.comp1, sa.comp2 * sb.comp2))
        err3 = max(abs(x - y) for x, y in zip(ref.coeffs, via3.coeffs))
        worst3 = max(worst3, err3 / scale)

        qa, qb = split4(a), split4(b)
        via4 = join4(IdempotentQuad(*(x * y for x, y in zip(qa.parts, qb.parts))))
        err4 = max(abs(x - y) for x, y in zip(ref.coeffs, via4.coeffs))
        worst4 = max(worst4, err4 / scale)

        err_n = abs(norm3(a) - norm3_from_pair(sa)) / (1.0 + norm3(a))
        worst_norm = max(worst_norm, err_n)
    rows.append(_row("algebra/split3_homomorphism_100k", 0.0, worst3, 1e-12, worst3 <= 1e-12))
    rows.append(_row("algebra/split4_homomorphism_100k", 0.0, worst4, 1e-12, worst4 <= 1e-12))
    rows.append(_row("algebra/norm_formula_identity_100k", 0.0, worst_norm, 1e-12, worst_norm <= 1e-12))

    comm_bad = 0
    worst_assoc = 0.0
    for _ in range(2000):
        a = _random_tricomplex(rng)
        b = _random_tricomplex(rng)
        c = _random_tricomplex(rng)
        if mul(a, b).coeffs != mul(b, a).coeffs:
            comm_bad += 1
        left = mul(mul(a, b), c)
        right = mul(a, mul(b, c))
        scale = 1.0 + norm3(a) * norm3(b) * norm3(c)
        err = max(abs(x - y) for x, y in zip(left.coeffs, right.coeffs))
        worst_assoc = max(worst_assoc, err / scale)
    rows.append(_row("algebra/commutativity_exact_2k", 0, comm_bad, 0, comm_bad == 0))
    rows.append(_row("algebra/associativity_2k", 0.0, worst_assoc, 1e-10, worst_assoc <= 1e-10))

    g3 = Tricomplex.from_coeffs([0.5, 0, 0, 0, 0, 0, 0, 0.5])
    g3c = Tricomplex.from_coeffs([0.5, 0, 0, 0, 0, 0, 0, -0.5])
    zd = max(abs(v) for v in mul(g3, g3c).coeffs)
    rows.append(_row("algebra/zero_divisor_exact", 0.0, zd, 0, zd == 0.0))
    return rows


# ------------------------------------------------------------------ roots

def roots_suite(seed: int = 0) -> list[CheckRow]:
    rng = np.random.default_rng(seed)
    rows = []
    for p in (3, 5, 7, 9):
        params = PolyParams.for_power(p)
        m, w1, w2 = params.m_p, params.w1, params.w2

        worst_crit = 0.0
        for c in rng.uniform(-2.0, 2.0, 1000):
            c = float(c)
            worst_crit = max(
                worst_crit,
                abs(eval_R(p, c, w1) - (m + c)),
                abs(eval_R(p, c, w2) - (-m + c)),
            )
        rows.append(_row(f"roots/p{p}/critical_values_1k", 0.0, worst_crit, 1e-12, worst_crit <= 1e-12))

        sign_bad = 0
        widest = 0.0
        for c in rng.uniform(-0.95 * m, 0.95 * m, 1000):
            report = refine_bounds(p, float(c), classify(p, float(c)))
            a1, a2, a3 = (r.value for r in report.roots)
            for t in (0.1, 0.35, 0.65, 0.9):
                if eval_R(p, float(c), a1 + t * (w1 - a1)) <= 0.0:
                    sign_bad += 1
                if eval_R(p, float(c), w2 + t * (a3 - w2)) >= 0.0:
                    sign_bad += 1
            widest = max(widest, max(r.bracket_hi - r.bracket_lo for r in report.roots))
        rows.append(_row(f"roots/p{p}/interior_sign_structure_1k", 0, sign_bad, 0, sign_bad == 0))
        rows.append(_row(f"roots/p{p}/bracket_width_1k", 0.0, widest, 1e-13, widest <= 1e-13))

        worst_sym = 0.0
        for c in rng.uniform(-2.0, 2.0, 1000):
            c = float(c)
            fwd = [r.value for r in classify(p, c).roots]
            rev = [-r.value for r in reversed(classify(p, -c).roots)]
            worst_sym = max(worst_sym, max(abs(x - y) for x, y in zip(fwd, rev)))
        rows.append(_row(f"roots/p{p}/odd_symmetry_1k", 0.0, worst_sym, 1e-12, worst_sym <= 1e-12))
    return rows


# --------------------------------------------------------------- dynamics

def _discus_samples(rng, n: int, p: int) -> np.ndarray:
    """n random tricomplex coefficient rows inside the closed discus."""
    radius = PolyParams.for_power(p).escape_radius
    coeffs = rng.uniform(-1.0, 1.0, (n, 8))
    pairs = [split3(Tricomplex(*row)) for row in coeffs]
    outer = np.array([max(q.comp1.norm(), q.comp2.norm()) for q in pairs])
    outer[outer == 0.0] = 1.0
    scale = radius * rng.uniform(0.0, 1.0, n) / outer
    return coeffs * scale[:, None]


def dynamics_suite(seed: int = 0) -> list[CheckRow]:
    rng = np.random.default_rng(seed)
    kern = backends.get()
    rows = []

    p = 3
    params = PolyParams.for_power(p)
    radius = params.escape_radius
    coeffs = _discus_samples(rng, 10_000, p)
    idx_s, fn2_s = orbit_many(coeffs, p, 100, method="split")
    idx_d, fn2_d = orbit_many(coeffs, p, 100, method="direct")
    differ = idx_s != idx_d
    near_tie = (
        (np.abs(np.sqrt(fn2_s) - radius) <= 1e-9)
        | (np.abs(np.sqrt(fn2_d) - radius) <= 1e-9)
    )
    bad = int(np.count_nonzero(differ & ~near_tie))
    rows.append(_row("dynamics/p3/split_vs_direct_10k", 0, bad, "ties 1e-09", bad == 0))

    for p in (3, 5):
        params = PolyParams.for_power(p)
        radius = params.escape_radius
        r2 = radius * radius
        re = rng.uniform(-1.5, 1.5, 10_000)
        im = rng.uniform(-1.5, 1.5, 10_000)
        base_idx, base_fn2 = kern.complex_escape(re, im, p, 200, r2)
        agree = 0
        decisive = 0
        for k in range(1, p - 1):
            rot = np.array([rotate_param(complex(a, b), p, k) for a, b in zip(re, im)])
            rot_idx, rot_fn2 = kern.complex_escape(rot.real, rot.imag, p, 200, r2)
            mask = (np.abs(np.sqrt(base_fn2) - radius) > 1e-6) & (
                np.abs(np.sqrt(rot_fn2) - radius) > 1e-6
            )
            decisive += int(np.count_nonzero(mask))
            agree += int(np.count_nonzero((base_idx == rot_idx) & mask))
        frac = agree / decisive
        rows.append(_row(f"dynamics/p{p}/rotation_escape_10k", 1.0, frac, 1e-3, frac >= 0.999))

    p = 3
    worst_conj = 0.0
    for _ in range(1000):
        a = float(rng.uniform(-1.5, 1.5))
        b = float(rng.uniform(-1.5, 1.5))
        path = hyper_trajectory(a, b, p, 50)
        u = v = 0.0
        cu, cv = a - b, a + b
        for state in path:
            u = real_pow(u, p) + cu
            v = real_pow(v, p) + cv
            tu, tv = t_conjugate(state.x, state.y)
            ref = max(abs(u), abs(v))
            if ref > 1e8 or not math.isfinite(ref):
                break
            err = max(abs(tu - u), abs(tv - v)) / (1.0 + ref)
            worst_conj = max(worst_conj, err)
    rows.append(_row("dynamics/p3/conjugation_50_steps_1k", 0.0, worst_conj, 1e-10, worst_conj <= 1e-10))

    worst_excess = -math.inf
    for p in (3, 5):
        radius = PolyParams.for_power(p).escape_radius
        cs = np.append(rng.uniform(0.0, m_p(p), 99), m_p(p))
        for c in cs:
            worst_excess = max(worst_excess, orbit_max_norm(float(c), p, 10_000) - radius)
    rows.append(_row("dynamics/real_orbit_bounded_10k_iter", "<= radius", worst_excess, 0, worst_excess <= 0.0))
    return rows


# ------------------------------------------------------------------- sets

def sets_suite(seed: int = 0) -> list[CheckRow]:
    rng = np.random.default_rng(seed)
    kern = backends.get()
    rows = []

    for p in (3, 5, 7, 9):
        m = m_p(p)
        grid = np.linspace(-1.0, 1.0, 2001)
        keep = np.abs(np.abs(grid) - m) > 1e-3
        params = PolyParams.for_power(p)
        r2 = params.escape_radius * params.escape_radius
        bad = 0
        for c in grid[keep]:
            bounded = kern.real_escape(float(c), p, 100_000, r2) == 0
            if bounded != real_axis_member(float(c), p):
                bad += 1
        rows.append(_row(f"sets/p{p}/real_axis_oracle_2001", 0, bad, "band 1e-03", bad == 0))

    for p in (3, 5, 7):
        m = m_p(p)
        w = Window2D(-1.0, 1.0, -1.0, 1.0, 512, 512)
        r = scan2d("hyperbrot", p, w, 10_000)
        x = w.x_centers()[None, :]
        y = w.y_centers()[:, None]
        analytic = diamond_member(x, y, m)
        in_band = np.abs(np.abs(x) + np.abs(y) - m) <= 1e-3
        bad = int(np.count_nonzero((r.inside() != analytic) & ~in_band))
        rows.append(_row(f"sets/p{p}/diamond_oracle_512", 0, bad, "band 1e-03", bad == 0))

    pts = rng.uniform(-1.5, 1.5, (1_000_000, 3))
    for p in (3, 5):
        union = slice_union_member(pts[:, 0], pts[:, 1], pts[:, 2], p)
        perplex = perplexbrot_member(pts[:, 0], pts[:, 1], pts[:, 2], p)
        bad = int(np.count_nonzero(union != perplex))
        rows.append(_row(f"sets/p{p}/slice_union_equiv_1m", 0, bad, 0, bad == 0))

    m3 = m_p(3)
    apex_ok = bool(perplexbrot_member(0.0, 0.0, m3, 3)) and not bool(
        perplexbrot_member(0.0, 0.0, m3 + 1e-9, 3)
    )
    rows.append(_row("sets/p3/octahedron_apex", True, apex_ok, 1e-9, apex_ok))

    w = Window2D(-1.1, 1.1, -1.1, 1.1, 256, 256)
    unit = rasterize2d(lambda x, y: diamond_member(x, y, 1.0), w)
    r3 = scan2d("hyperbrot", 3, w, 10_000)
    h = hausdorff_discrete(unit, r3)
    lim = hausdorff_limit(3)
    rows.append(_row("sets/p3/hausdorff_limit_res256", lim, h, w.cell_diag, abs(h - lim) <= w.cell_diag))

    probe2 = conjecture_probe(2, seed=seed)
    err_lo = abs(probe2.interval_lo_observed - (-2.0))
    err_hi = abs(probe2.interval_hi_observed - 0.25)
    rows.append(_row("sets/p2/real_interval_[-2,0.25]", 0.0, max(err_lo, err_hi), 1e-3, max(err_lo, err_hi) <= 1e-3))
    rows.append(_row(
        "sets/p2/square_samples_agree", 1.0, probe2.sample_agreement, 1e-3,
        probe2.sample_agreement >= 0.999,
    ))
    for p in (4, 6):
        spec = ConjectureSpec.for_power(p)
        probe = conjecture_probe(p, seed=seed)
        rows.append(_row(
            f"sets/p{p}/conjectured_interval_reported",
            f"[{spec.interval_lo:.6f}, {spec.interval_hi:.6f}] (non-normative)",
            f"[{probe.interval_lo_observed:.6f}, {probe.interval_hi_observed:.6f}]",
            "reported only",
            True,
        ))
        rows.append(_row(
            f"sets/p{p}/conjectured_square_reported",
            f"center {spec.t_p:.6f}, diag {spec.l_p:.6f} (non-normative)",
            f"center {probe.center_observed:.6f}, diag {probe.diag_observed:.6f}, "
            f"agreement {probe.sample_agreement:.4f}",
            "reported only",
            True,
        ))
    return rows


# ----------------------------------------------------------------- raster

def raster_suite(seed: int = 0) -> list[CheckRow]:
    rows = []

    w = Window2D(-1.4, 1.4, -1.2, 1.2, 193, 127)
    base = scan2d("hyperbrot", 3, w, 300, workers=1).escape
    same = all(
        np.array_equal(base, scan2d("hyperbrot", 3, w, 300, workers=k).escape)
        for k in (4, 16)
    )
    rows.append(_row("raster/2d_worker_determinism", True, same, 0, same))

    w3 = Window3D(-1.0, 1.0, -1.0, 1.0, -1.0, 1.0, 32, 32, 32)
    base3 = scan3d(("1", "j1", "j2"), 3, w3, 200, workers=1).escape
    same3 = np.array_equal(base3, scan3d(("1", "j1", "j2"), 3, w3, 200, workers=5).escape)
    rows.append(_row("raster/3d_worker_determinism", True, same3, 0, same3))

    far2 = scan2d("multibrot-complex", 3, Window2D(10, 11, 10, 11, 16, 16), 50)
    far3 = scan3d(("1", "j1", "j2"), 3, Window3D(10, 11, 10, 11, 10, 11, 8, 8, 8), 50)
    all_one = bool((far2.escape == 1).all() and (far3.escape == 1).all())
    rows.append(_row("raster/far_window_all_escape_at_1", True, all_one, 0, all_one))

    m3 = m_p(3)
    w = Window2D(-1.0, 1.0, -1.0, 1.0, 256, 256)
    r = scan2d("hyperbrot", 3, w, 10_000)
    x = w.x_centers()[None, :]
    y = w.y_centers()[:, None]
    disagree = r.inside() != diamond_member(x, y, m3)
    dist = diamond_boundary_distance(np.broadcast_to(x, disagree.shape),
                                     np.broadcast_to(y, disagree.shape), m3)
    bad2 = int(np.count_nonzero(disagree & (dist > w.cell_diag)))
    rows.append(_row("raster/2d_disagreements_on_boundary_256", 0, bad2, w.cell_diag, bad2 == 0))

    w3 = Window3D(-1.0, 1.0, -1.0, 1.0, -1.0, 1.0, 48, 48, 48)
    r3 = scan3d(("1", "j1", "j2"), 3, w3, 10_000)
    x = w3.x_centers()[None, None, :]
    y = w3.y_centers()[None, :, None]
    z = w3.z_centers()[:, None, None]
    disagree3 = r3.inside() != octahedron_member(x, y, z, m3)
    dist3 = octahedron_boundary_distance(
        np.broadcast_to(x, disagree3.shape),
        np.broadcast_to(y, disagree3.shape),
        np.broadcast_to(z, disagree3.shape),
        m3,
    )
    bad3 = int(np.count_nonzero(disagree3 & (dist3 > w3.cell_diag)))
    rows.append(_row("raster/3d_disagreements_on_boundary_48", 0, bad3, w3.cell_diag, bad3 == 0))

    w = Window2D(-1.0, 1.0, -1.0, 1.0, 48, 48)
    big = rasterize2d(lambda xx, yy: diamond_member(xx, yy, 0.9), w)
    small = rasterize2d(lambda xx, yy: diamond_member(xx, yy, 0.4), w)
    err = abs(hausdorff_discrete(big, small) - hausdorff_naive(big, small))
    rows.append(_row("raster/edt_vs_naive_48", 0.0, err, 1e-9, err <= 1e-9))
    w3 = Window3D(-1.0, 1.0, -1.0, 1.0, -1.0, 1.0, 24, 24, 24)
    big3 = rasterize3d(lambda xx, yy, zz: octahedron_member(xx, yy, zz, 0.9), w3)
    small3 = rasterize3d(lambda xx, yy, zz: octahedron_member(xx, yy, zz, 0.4), w3)
    err3 = abs(hausdorff_discrete(big3, small3) - hausdorff_naive(big3, small3))
    rows.append(_row("raster/edt_vs_naive_24cube", 0.0, err3, 1e-9, err3 <= 1e-9))

    d_ab = hausdorff_directed(big, small)
    d_ba = hausdorff_directed(small, big)
    h = hausdorff_discrete(big, small)
    asym = d_ab != d_ba and h == max(d_ab, d_ba)
    rows.append(_row("raster/directed_asymmetry", True, asym, 0, asym))
    return rows


_SUITES = {
    "algebra": algebra_suite,
    "roots": roots_suite,
    "dynamics": dynamics_suite,
    "sets": sets_suite,
    "raster": raster_suite,
}


def run_suite(name: str, seed: int = 0) -> list[CheckRow]:
    """Run one named suite, or every suite with name "all"."""
    if name == "all":
        rows = []
        for suite in SUITE_NAMES:
            rows.extend(_SUITES[suite](seed))
        return rows
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    return _SUITES[name](seed)
