"""Real roots of R(x) = x^p - x + c for odd p > 2.

R has critical points w1 = -1/p^(1/(p-1)) < 0 < w2 = +1/p^(1/(p-1)) and is
increasing on (-inf, w1), decreasing on (w1, w2), increasing on (w2, inf).
Its critical values are R(w1) = m_p + c and R(w2) = -m_p + c with
m_p = (p-1)/p^(p/(p-1)), which makes the root structure a function of c
against the two thresholds -m_p and +m_p.  ``classify`` names the regime and
locates every real root; the located roots are the independent oracle used
elsewhere for real-axis membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

__all__ = [
    "PolyParams",
    "RootRecord",
    "RootReport",
    "BracketViolation",
    "eval_R",
    "classify",
    "refine_bounds",
    "real_pow",
]

# |c - (+-m_p)| at or below this counts as the exact double-root parameter
M_EQUALITY_TOL = 1e-12

# simple-root brackets are bisected until no wider than this (they typically
# end 1-2 ulp wide, far tighter)
BRACKET_WIDTH = 1e-13

_MAX_BISECT = 200


class BracketViolation(RuntimeError):
    """A located root fell outside an interval the theory guarantees."""


@dataclass(frozen=True, slots=True)
class PolyParams:
    """Constants of the family x^p - x + c shared across modules."""

    p: int
    w1: float
    w2: float
    m_p: float
    escape_radius: float

    @classmethod
    def for_power(cls, p: int) -> "PolyParams":
        if not isinstance(p, int) or isinstance(p, bool) or p < 2:
            raise ValueError(f"power must be an integer >= 2, got {p!r}")
        w2 = 1.0 / p ** (1.0 / (p - 1))
        return cls(
            p=p,
            w1=-w2,
            w2=w2,
            m_p=(p - 1) / p ** (p / (p - 1)),
            escape_radius=2.0 ** (1.0 / (p - 1)),
        )


@dataclass(frozen=True, slots=True)
class RootRecord:
    value: float
    multiplicity: int
    bracket_lo: float
    bracket_hi: float


@dataclass(frozen=True, slots=True)
class RootReport:
    regime: str  # ThreeSimple | DoubleAtW1 | DoubleAtW2 | OneNegative | OnePositive | CZero
    roots: tuple[RootRecord, ...]


def real_pow(x: float, p: int) -> float:
    """x**p for integer p >= 0 by binary exponentiation (same order as the kernels)."""
    r = 1.0
    b = x
    e = p
    while e:
        if e & 1:
            r = r * b
        e >>= 1
        if e:
            b = b * b
    return r


def eval_R(p: int, c: float, x: float) -> float:
    """R(x) = x^p - x + c."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ValueError(f"power must be an integer >= 2, got {p!r}")
    return real_pow(x, p) - x + c


def _require_odd(p: int) -> None:
    if not isinstance(p, int) or isinstance(p, bool) or p <= 2 or p % 2 == 0:
        raise ValueError(f"root classification needs an odd power > 2, got {p!r}")


def _bisect(p: int, c: float, lo: float, hi: float) -> RootRecord:
    """Shrink a sign-changing bracket to machine width and report the root."""
    f_lo = eval_R(p, c, lo)
    f_hi = eval_R(p, c, hi)
    if f_lo == 0.0:
        return RootRecord(lo, 1, lo, lo)
    if f_hi == 0.0:
        return RootRecord(hi, 1, hi, hi)
    if (f_lo > 0) == (f_hi > 0):
        raise BracketViolation(f"no sign change on [{lo}, {hi}] for p={p}, c={c}")
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = eval_R(p, c, mid)
        if f_mid == 0.0:
            return RootRecord(mid, 1, mid, mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return RootRecord(0.5 * (lo + hi), 1, lo, hi)


def _grown_a1(p: int, c: float, params: PolyParams) -> RootRecord:
    """The root left of w1: R(w1) >= 0 there; grow the left end until R < 0."""
    lo = -max(2.0, 2.0 * abs(c))
    for _ in range(_MAX_BISECT):
        if eval_R(p, c, lo) < 0.0:
            break
        lo *= 2.0
    return _bisect(p, c, lo, params.w1)


def _grown_a3(p: int, c: float, params: PolyParams) -> RootRecord:
    """The root right of w2: R(w2) <= 0 there; grow the right end until R > 0."""
    hi = max(2.0, 2.0 * abs(c))
    for _ in range(_MAX_BISECT):
        if eval_R(p, c, hi) > 0.0:
            break
        hi *= 2.0
    return _bisect(p, c, params.w2, hi)


def classify(p: int, c: float) -> RootReport:
    """Count, bracket, and locate the real roots of x^p - x + c.

    Regimes for odd p > 2 (m = m_p):
      c = 0        -> CZero: roots -1, 0, 1, all simple.
      |c| < m      -> ThreeSimple: a1 < w1 < a2 < w2 < a3.
      c = -m       -> DoubleAtW1: w1 twice, plus simple a3 > w2.
      c = +m       -> DoubleAtW2: simple a1 < w1, plus w2 twice.
      c < -m       -> OnePositive: single root a3 > w2.
      c > +m       -> OneNegative: single root a1 < w1.
    Double roots are reported at the closed-form points, never by iteration;
    equality with +-m is tested with absolute tolerance 1e-12.
    """
    _require_odd(p)
    c = float(c)
    params = PolyParams.for_power(p)
    m = params.m_p

    if c == 0.0:
        return RootReport(
            "CZero",
            (
                RootRecord(-1.0, 1, -1.0, -1.0),
                RootRecord(0.0, 1, 0.0, 0.0),
                RootRecord(1.0, 1, 1.0, 1.0),
            ),
        )
    if abs(c + m) <= M_EQUALITY_TOL:
        a3 = _grown_a3(p, c, params)
        return RootReport(
            "DoubleAtW1",
            (RootRecord(params.w1, 2, params.w1, params.w1), a3),
        )
    if abs(c - m) <= M_EQUALITY_TOL:
        a1 = _grown_a1(p, c, params)
        return RootReport(
            "DoubleAtW2",
            (a1, RootRecord(params.w2, 2, params.w2, params.w2)),
        )
    if abs(c) < m:
        a1 = _grown_a1(p, c, params)
        a2 = _bisect(p, c, params.w1, params.w2)
        a3 = _grown_a3(p, c, params)
        return RootReport("ThreeSimple", (a1, a2, a3))
    if c < 0.0:
        return RootReport("OnePositive", (_grown_a3(p, c, params),))
    return RootReport("OneNegative", (_grown_a1(p, c, params),))


def refine_bounds(p: int, c: float, report: RootReport) -> RootReport:
    """Tighten the outer-root bracket with the unit-interval bounds.

    For c in (-m_p, 0) the smallest root lies in (-1, w1); for c in (0, m_p)
    the largest root lies in (w2, 1).  Raises BracketViolation if a located
    root contradicts that (which would be a bug, not an input error).
    """
    _require_odd(p)
    c = float(c)
    params = PolyParams.for_power(p)
    if not abs(c) < params.m_p:
        raise ValueError(f"refine_bounds needs |c| < m_p = {params.m_p}, got c = {c}")
    if report.regime == "CZero":
        return report

    if c < 0.0:
        target, lo, hi = 0, -1.0, params.w1
    else:
        target, lo, hi = len(report.roots) - 1, params.w2, 1.0
    rec = report.roots[target]
    if not lo < rec.value < hi:
        raise BracketViolation(
            f"root {rec.value} outside ({lo}, {hi}) for p={p}, c={c}"
        )
    tightened = replace(
        rec,
        bracket_lo=max(rec.bracket_lo, lo),
        bracket_hi=min(rec.bracket_hi, hi),
    )
    roots = list(report.roots)
    roots[target] = tightened
    return RootReport(report.regime, tuple(roots))
