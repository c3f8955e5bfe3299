"""Arithmetic for the 8-dimensional commutative ring of tricomplex numbers.

A tricomplex number is written on the basis (1, i1, i2, i3, i4, j1, j2, j3)
with real coefficients x0..x7.  The ring is generated by three commuting
imaginary units i1, i2, i3 (each squaring to -1); the derived units are
j1 = i1*i2, j2 = i1*i3, j3 = i2*i3 and i4 = i1*i2*i3.  Multiplication is
commutative and has zero divisors.

Two decompositions make the ring computable componentwise:

* ``split3`` writes a number over the idempotents (1 + j3)/2 and (1 - j3)/2
  as a pair of bicomplex numbers; multiplication acts component by component.
* ``split4`` refines each bicomplex component over (1 + j1)/2 and (1 - j1)/2,
  giving four ordinary complex numbers.  The component order is frozen; see
  ``split4``.

Both splits are affine maps with coefficients +-1 and +-1/2, so ``join3`` and
``join4`` invert them exactly for representable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "UNIT_NAMES",
    "UNIT_PRODUCT_INDEX",
    "UNIT_PRODUCT_SIGN",
    "Tricomplex",
    "Bicomplex",
    "Hyperbolic",
    "IdempotentPair3",
    "IdempotentQuad",
    "SliceSpec",
    "mul",
    "mul_via_bicomplex",
    "tpow",
    "norm3",
    "norm3_from_pair",
    "split3",
    "join3",
    "split4",
    "join4",
    "embed_slice",
    "structure_tensor",
]

UNIT_NAMES = ("1", "i1", "i2", "i3", "i4", "j1", "j2", "j3")
_UNIT_INDEX = {name: k for k, name in enumerate(UNIT_NAMES)}

# Products of basis units: unit[r] * unit[c] = UNIT_PRODUCT_SIGN[r][c] *
# unit[UNIT_PRODUCT_INDEX[r][c]].  Derived from the generator relations
# (i1, i2, i3 commute, each squares to -1) and the definitions of j1, j2,
# j3, i4 above; tests re-derive every entry from bicomplex composition.
UNIT_PRODUCT_INDEX = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 5, 6, 7, 2, 3, 4),
    (2, 5, 0, 7, 6, 1, 4, 3),
    (3, 6, 7, 0, 5, 4, 1, 2),
    (4, 7, 6, 5, 0, 3, 2, 1),
    (5, 2, 1, 4, 3, 0, 7, 6),
    (6, 3, 4, 1, 2, 7, 0, 5),
    (7, 4, 3, 2, 1, 6, 5, 0),
)
UNIT_PRODUCT_SIGN = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, -1, 1, 1, -1, -1, -1, 1),
    (1, 1, -1, 1, -1, -1, 1, -1),
    (1, 1, 1, -1, -1, 1, -1, -1),
    (1, -1, -1, -1, -1, 1, 1, 1),
    (1, -1, -1, 1, 1, 1, -1, -1),
    (1, -1, 1, -1, 1, -1, 1, -1),
    (1, 1, -1, -1, 1, -1, -1, 1),
)


@dataclass(frozen=True, slots=True)
class Tricomplex:
    """A tricomplex number x0 + x1 i1 + x2 i2 + x3 i3 + x4 i4 + x5 j1 + x6 j2 + x7 j3."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0
    x4: float = 0.0
    x5: float = 0.0
    x6: float = 0.0
    x7: float = 0.0

    @classmethod
    def from_coeffs(cls, coeffs) -> "Tricomplex":
        return cls(*(float(c) for c in coeffs))

    @classmethod
    def zero(cls) -> "Tricomplex":
        return cls()

    @classmethod
    def one(cls) -> "Tricomplex":
        return cls(1.0)

    @classmethod
    def unit(cls, name: str) -> "Tricomplex":
        """Basis unit by name, e.g. Tricomplex.unit("j1")."""
        coeffs = [0.0] * 8
        coeffs[_UNIT_INDEX[name]] = 1.0
        return cls(*coeffs)

    @classmethod
    def from_real(cls, x: float) -> "Tricomplex":
        return cls(float(x))

    @classmethod
    def from_complex(cls, z: complex) -> "Tricomplex":
        """Embed a complex number on the (1, i1) plane."""
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def coeffs(self) -> tuple[float, ...]:
        return (self.x0, self.x1, self.x2, self.x3, self.x4, self.x5, self.x6, self.x7)

    def __add__(self, other: "Tricomplex") -> "Tricomplex":
        if not isinstance(other, Tricomplex):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return Tricomplex(*(a[k] + b[k] for k in range(8)))

    def __sub__(self, other: "Tricomplex") -> "Tricomplex":
        if not isinstance(other, Tricomplex):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return Tricomplex(*(a[k] - b[k] for k in range(8)))

    def __neg__(self) -> "Tricomplex":
        return Tricomplex(*(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Tricomplex):
            return mul(self, other)
        if isinstance(other, (int, float)):
            s = float(other)
            return Tricomplex(*(c * s for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "Tricomplex":
        return tpow(self, m)

    def norm(self) -> float:
        return norm3(self)

    def __str__(self) -> str:
        parts = [f"{self.x0:g}"]
        for coef, name in zip(self.coeffs[1:], UNIT_NAMES[1:]):
            sign = "-" if (coef < 0 or (coef == 0 and math.copysign(1, coef) < 0)) else "+"
            parts.append(f"{sign} {abs(coef):g} {name}")
        return " ".join(parts)


@dataclass(frozen=True, slots=True)
class Bicomplex:
    """A bicomplex number (z1re + z1im i1) + (z2re + z2im i1) i2."""

    z1re: float = 0.0
    z1im: float = 0.0
    z2re: float = 0.0
    z2im: float = 0.0

    @classmethod
    def from_complexes(cls, z1: complex, z2: complex) -> "Bicomplex":
        return cls(z1.real, z1.imag, z2.real, z2.imag)

    def __add__(self, other: "Bicomplex") -> "Bicomplex":
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(
            self.z1re + other.z1re,
            self.z1im + other.z1im,
            self.z2re + other.z2re,
            self.z2im + other.z2im,
        )

    def __mul__(self, other):
        if isinstance(other, Bicomplex):
            # (z1 + z2 i2)(w1 + w2 i2) = (z1 w1 - z2 w2) + (z1 w2 + z2 w1) i2
            z1 = complex(self.z1re, self.z1im)
            z2 = complex(self.z2re, self.z2im)
            w1 = complex(other.z1re, other.z1im)
            w2 = complex(other.z2re, other.z2im)
            u = z1 * w1 - z2 * w2
            v = z1 * w2 + z2 * w1
            return Bicomplex(u.real, u.imag, v.real, v.imag)
        if isinstance(other, (int, float)):
            s = float(other)
            return Bicomplex(self.z1re * s, self.z1im * s, self.z2re * s, self.z2im * s)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.z1re, -self.z1im, -self.z2re, -self.z2im)

    def norm(self) -> float:
        return math.sqrt(
            self.z1re * self.z1re
            + self.z1im * self.z1im
            + self.z2re * self.z2re
            + self.z2im * self.z2im
        )

    def split(self) -> tuple[complex, complex]:
        """Components over (1 + j1)/2 and (1 - j1)/2 as ordinary complex numbers."""
        e1 = complex(self.z1re + self.z2im, self.z1im - self.z2re)
        e2 = complex(self.z1re - self.z2im, self.z1im + self.z2re)
        return e1, e2

    @classmethod
    def join(cls, e1: complex, e2: complex) -> "Bicomplex":
        return cls(
            (e1.real + e2.real) * 0.5,
            (e1.imag + e2.imag) * 0.5,
            (e2.imag - e1.imag) * 0.5,
            (e1.real - e2.real) * 0.5,
        )

    def to_tricomplex(self) -> "Tricomplex":
        return Tricomplex(self.z1re, self.z1im, self.z2re, 0.0, 0.0, self.z2im, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Hyperbolic:
    """A hyperbolic (split-complex) number re + hy*j with j*j = +1."""

    re: float = 0.0
    hy: float = 0.0

    def __add__(self, other: "Hyperbolic") -> "Hyperbolic":
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.re + other.re, self.hy + other.hy)

    def __mul__(self, other):
        if isinstance(other, Hyperbolic):
            return Hyperbolic(
                self.re * other.re + self.hy * other.hy,
                self.re * other.hy + self.hy * other.re,
            )
        if isinstance(other, (int, float)):
            s = float(other)
            return Hyperbolic(self.re * s, self.hy * s)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.sqrt(self.re * self.re + self.hy * self.hy)

    def to_tricomplex(self, unit: str = "j1") -> "Tricomplex":
        """Embed on the (1, unit) plane; unit must be one of j1, j2, j3."""
        if unit not in ("j1", "j2", "j3"):
            raise ValueError(f"hyperbolic embedding needs a j unit, got {unit!r}")
        coeffs = [0.0] * 8
        coeffs[0] = self.re
        coeffs[_UNIT_INDEX[unit]] = self.hy
        return Tricomplex(*coeffs)


@dataclass(frozen=True, slots=True)
class IdempotentPair3:
    """Bicomplex components over the idempotents (1 + j3)/2 and (1 - j3)/2."""

    comp1: Bicomplex
    comp2: Bicomplex


@dataclass(frozen=True, slots=True)
class IdempotentQuad:
    """Complex components of the double idempotent split; see ``split4`` for order."""

    c1: complex
    c2: complex
    c3: complex
    c4: complex

    @property
    def parts(self) -> tuple[complex, complex, complex, complex]:
        return (self.c1, self.c2, self.c3, self.c4)


@dataclass(frozen=True, slots=True)
class SliceSpec:
    """Ordered triple of distinct basis units spanning a 3D slice of the ring."""

    units: tuple[str, str, str]

    def __post_init__(self):
        if len(self.units) != 3:
            raise ValueError("slice needs exactly three units")
        for u in self.units:
            if u not in _UNIT_INDEX:
                raise ValueError(f"unknown unit {u!r}; choose from {UNIT_NAMES}")
        if len(set(self.units)) != 3:
            raise ValueError(f"slice units must be distinct, got {self.units}")

    @property
    def indices(self) -> tuple[int, int, int]:
        return tuple(_UNIT_INDEX[u] for u in self.units)

    def axis_quads(self) -> tuple[IdempotentQuad, IdempotentQuad, IdempotentQuad]:
        """split4 of each axis unit (entries are exactly +-1 or +-1j)."""
        return tuple(split4(Tricomplex.unit(u)) for u in self.units)

    def __str__(self) -> str:
        return ",".join(self.units)


# unordered-pair schedule (k, i, j, sign) with i <= j; the pair term
# sign*(a_i b_j + a_j b_i) is invariant under swapping the operands and the
# accumulation order is fixed, so mul(a, b) == mul(b, a) exactly in floats
_PAIR_SCHEDULE = tuple(
    (UNIT_PRODUCT_INDEX[i][j], i, j, float(UNIT_PRODUCT_SIGN[i][j]))
    for i in range(8)
    for j in range(i, 8)
)


def mul(a: Tricomplex, b: Tricomplex) -> Tricomplex:
    """Product of two tricomplex numbers via the 8x8 signed unit table."""
    ca, cb = a.coeffs, b.coeffs
    out = [0.0] * 8
    for k, i, j, s in _PAIR_SCHEDULE:
        if i == j:
            out[k] += s * (ca[i] * cb[i])
        else:
            out[k] += s * (ca[i] * cb[j] + ca[j] * cb[i])
    return Tricomplex(*out)


def mul_via_bicomplex(a: Tricomplex, b: Tricomplex) -> Tricomplex:
    """Same product computed by composing two bicomplex multiplications.

    Writes a = z1 + z2 i3 with bicomplex z1, z2 and multiplies with
    (z1 + z2 i3)(w1 + w2 i3) = (z1 w1 - z2 w2) + (z1 w2 + z2 w1) i3.
    Kept as an independent route for cross-checking ``mul``.
    """
    az1, az2 = _bicomplex_halves(a)
    bz1, bz2 = _bicomplex_halves(b)
    u = az1 * bz1 + (-(az2 * bz2))
    v = az1 * bz2 + az2 * bz1
    return _from_bicomplex_halves(u, v)


def _bicomplex_halves(a: Tricomplex) -> tuple[Bicomplex, Bicomplex]:
    # a = (x0 + x1 i1 + x2 i2 + x5 j1) + (x3 + x6 i1 + x7 i2 + x4 j1) i3
    return (
        Bicomplex(a.x0, a.x1, a.x2, a.x5),
        Bicomplex(a.x3, a.x6, a.x7, a.x4),
    )


def _from_bicomplex_halves(u: Bicomplex, v: Bicomplex) -> Tricomplex:
    return Tricomplex(u.z1re, u.z1im, u.z2re, v.z1re, v.z2im, u.z2im, v.z1im, v.z2re)


def tpow(a: Tricomplex, m: int) -> Tricomplex:
    """m-th power by binary exponentiation; tpow(a, 0) is 1."""
    if m < 0:
        raise ValueError("negative powers are not defined here")
    result = Tricomplex.one()
    base = a
    e = m
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def norm3(a: Tricomplex) -> float:
    """Euclidean norm sqrt(x0^2 + ... + x7^2)."""
    c = a.coeffs
    s = c[0] * c[0]
    for k in range(1, 8):
        s += c[k] * c[k]
    return math.sqrt(s)


def norm3_from_pair(p: IdempotentPair3) -> float:
    """The same norm from the idempotent pair: sqrt(|comp1|^2 + |comp2|^2) / sqrt(2)."""
    n1 = p.comp1.norm()
    n2 = p.comp2.norm()
    return math.sqrt(n1 * n1 + n2 * n2) / math.sqrt(2.0)


def split3(a: Tricomplex) -> IdempotentPair3:
    """Bicomplex components over (1 + j3)/2 and (1 - j3)/2.

    a = comp1 * (1 + j3)/2 + comp2 * (1 - j3)/2, and products act
    componentwise on these pairs.
    """
    return IdempotentPair3(
        Bicomplex(a.x0 + a.x7, a.x1 + a.x4, a.x2 - a.x3, a.x5 - a.x6),
        Bicomplex(a.x0 - a.x7, a.x1 - a.x4, a.x2 + a.x3, a.x5 + a.x6),
    )


def join3(p: IdempotentPair3) -> Tricomplex:
    c1, c2 = p.comp1, p.comp2
    return Tricomplex(
        (c1.z1re + c2.z1re) * 0.5,
        (c1.z1im + c2.z1im) * 0.5,
        (c1.z2re + c2.z2re) * 0.5,
        (c2.z2re - c1.z2re) * 0.5,
        (c1.z1im - c2.z1im) * 0.5,
        (c1.z2im + c2.z2im) * 0.5,
        (c2.z2im - c1.z2im) * 0.5,
        (c1.z1re - c2.z1re) * 0.5,
    )


def split4(a: Tricomplex) -> IdempotentQuad:
    """Four complex components of the double idempotent split.

    Component order is frozen as (g3*g2, g3*g2', g3'*g2, g3'*g2') where
    g3 = (1 + j3)/2, g3' = (1 - j3)/2, g2 = (1 + j1)/2, g2' = (1 - j1)/2:
    c1, c2 split the first bicomplex component of ``split3``; c3, c4 split
    the second.  Multiplication in the ring is componentwise complex
    multiplication of these quads.
    """
    p = split3(a)
    e1, e2 = p.comp1.split()
    e3, e4 = p.comp2.split()
    return IdempotentQuad(e1, e2, e3, e4)


def join4(q: IdempotentQuad) -> Tricomplex:
    return join3(
        IdempotentPair3(
            Bicomplex.join(q.c1, q.c2),
            Bicomplex.join(q.c3, q.c4),
        )
    )


def embed_slice(s: SliceSpec | tuple[str, str, str], x: float, y: float, z: float) -> Tricomplex:
    """Place (x, y, z) on the three slice axes: x*units[0] + y*units[1] + z*units[2]."""
    if not isinstance(s, SliceSpec):
        s = SliceSpec(tuple(s))
    coeffs = [0.0] * 8
    ix, iy, iz = s.indices
    coeffs[ix] += float(x)
    coeffs[iy] += float(y)
    coeffs[iz] += float(z)
    return Tricomplex(*coeffs)


def structure_tensor():
    """(8, 8, 8) array T with unit[r] * unit[c] = sum_k T[r, c, k] unit[k].

    For batched products: mul_many(A, B) = einsum("rck,nr,nc->nk", T, A, B).
    """
    import numpy as np

    t = np.zeros((8, 8, 8))
    for r in range(8):
        for c in range(8):
            t[r, c, UNIT_PRODUCT_INDEX[r][c]] = UNIT_PRODUCT_SIGN[r][c]
    return t
