"""Möbius transformations and the normalization of four marked points.

The normal form puts the first point at infinity and the remaining three at
``e1, e2, e3`` with ``e1 + e2 + e3 = 0`` and ``max |e_j| = 1``.
"""

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DuplicatePoints
from .sphere import INF, as_point, as_points, chordal

DUPLICATE_TOL = 1e-12


@dataclass(frozen=True)
class MobiusMap:
    """z -> (a z + b) / (c z + d), stored with a d - b c = 1."""

    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def from_coefficients(cls, a, b, c, d):
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        det = a * d - b * c
        if det == 0:
            raise ValueError("singular Möbius map (ad - bc = 0)")
        s = cmath.sqrt(det)
        return cls(a / s, b / s, c / s, d / s)

    @classmethod
    def identity(cls):
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    def __call__(self, p):
        return mobius_apply(self, p)

    def compose(self, other):
        """self ∘ other"""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return MobiusMap.from_coefficients(a, b, c, d)

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


def _apply_scalar(T, p):
    p = as_point(p)
    if p == INF:
        return INF if T.c == 0 else as_point(T.a / T.c)
    num = T.a * p + T.b
    den = T.c * p + T.d
    if den == 0:
        return INF
    return as_point(num / den)


def mobius_apply(T, p):
    """Apply ``T`` to a sphere point or to an array of sphere points."""
    if np.ndim(p) == 0:
        return _apply_scalar(T, p)
    z = as_points(p)
    out = np.empty_like(z)
    inf = ~np.isfinite(z)
    out[inf] = INF if T.c == 0 else as_point(T.a / T.c)
    zf = z[~inf]
    den = T.c * zf + T.d
    num = T.a * zf + T.b
    with np.errstate(divide="ignore", invalid="ignore"):
        val = num / den
    val[den == 0] = INF
    out[~inf] = val
    return as_points(out).reshape(np.shape(p))


def mobius_invert(T):
    # det is 1, so the adjugate is the inverse
    return MobiusMap(T.d, -T.b, -T.c, T.a)


@dataclass(frozen=True)
class RootTriple:
    e1: complex
    e2: complex
    e3: complex
    # post-inversion, centred coordinate = scale * normalized coordinate
    scale: complex = 1 + 0j

    def as_array(self):
        return np.array([self.e1, self.e2, self.e3], dtype=np.complex128)

    def __iter__(self):
        return iter((self.e1, self.e2, self.e3))

    def min_separation(self):
        e = self.as_array()
        return min(abs(e[0] - e[1]), abs(e[0] - e[2]), abs(e[1] - e[2]))


def normalize_quadruple(a0, a1, a2, a3):
    """Return ``(T, roots)`` with ``T(a0) = inf`` and ``T(a_k) = e_k``.

    ``T`` inverts about ``a0`` (skipped when ``a0`` is infinite), centres the
    three images on their mean and divides by their largest modulus.
    """
    pts = [as_point(p) for p in (a0, a1, a2, a3)]
    for i in range(4):
        for j in range(i + 1, 4):
            if chordal(pts[i], pts[j]) <= DUPLICATE_TOL:
                raise DuplicatePoints(
                    f"points a{i} and a{j} coincide ({pts[i]!r}, {pts[j]!r})"
                )
    if pts[0] == INF:
        inv = MobiusMap.identity()
    else:
        inv = MobiusMap.from_coefficients(0, 1, 1, -pts[0])
    w = [_apply_scalar(inv, p) for p in pts[1:]]
    mean = (w[0] + w[1] + w[2]) / 3
    scale = max(abs(x - mean) for x in w)
    centre = MobiusMap.from_coefficients(1, -mean, 0, scale)
    T = centre.compose(inv)
    e = [(x - mean) / scale for x in w]
    roots = RootTriple(e[0], e[1], e[2], complex(scale))
    return T, roots
