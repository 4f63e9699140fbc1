"""Points of the Riemann sphere and the chordal metric.

A sphere point is a Python ``complex`` (or an element of a complex numpy
array).  The point at infinity has exactly one representation, ``INF``;
every non-finite input is folded onto it by :func:`as_point`.
"""

import math

import numpy as np

INF = complex(math.inf, 0.0)


def is_inf(p):
    """True where ``p`` is the point at infinity (works on arrays)."""
    if isinstance(p, np.ndarray):
        return ~np.isfinite(p)
    return not cmath_isfinite(p)


def cmath_isfinite(p):
    return math.isfinite(p.real) and math.isfinite(p.imag)


def as_point(p):
    """Canonical sphere point: finite complex, or ``INF``."""
    p = complex(p)
    if math.isnan(p.real) or math.isnan(p.imag):
        raise ValueError("NaN is not a point of the sphere")
    return p if cmath_isfinite(p) else INF


def as_points(arr):
    """Array version of :func:`as_point`; returns a new complex128 array."""
    out = np.array(arr, dtype=np.complex128, copy=True).reshape(-1)
    if np.isnan(out.real).any() or np.isnan(out.imag).any():
        raise ValueError("NaN is not a point of the sphere")
    out[~np.isfinite(out)] = INF
    return out


def to_sphere(w):
    """Inverse stereographic projection onto the unit sphere in R^3.

    Returns an array of shape ``(..., 3)``; infinity goes to the north pole.
    Chordal distance is the Euclidean distance between these images.
    """
    w = np.asarray(w, dtype=np.complex128)
    out = np.empty(w.shape + (3,))
    fin = np.isfinite(w)
    big = fin & (np.abs(w) > 1.0)
    small = fin & ~big
    ws = w[small]
    d = 1.0 + (ws.real**2 + ws.imag**2)
    out[small, 0] = 2 * ws.real / d
    out[small, 1] = 2 * ws.imag / d
    out[small, 2] = (d - 2.0) / d
    # for |w| > 1 work with u = 1/w to avoid overflow
    u = 1.0 / w[big]
    d = 1.0 + (u.real**2 + u.imag**2)
    out[big, 0] = 2 * u.real / d
    out[big, 1] = -2 * u.imag / d
    out[big, 2] = (2.0 - d) / d
    out[~fin] = (0.0, 0.0, 1.0)
    return out


def from_sphere(x):
    """Stereographic projection from the unit sphere back to the plane."""
    x = np.asarray(x, dtype=float)
    x = x / np.linalg.norm(x, axis=-1, keepdims=True)
    zeta = x[..., 0] + 1j * x[..., 1]
    north = x[..., 2] > 0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        # (1 + x3) / conj(zeta) equals zeta / (1 - x3) on the sphere and
        # avoids the cancellation in 1 - x3 near the north pole
        w = np.where(north, (1.0 + x[..., 2]) / np.conj(zeta), zeta / (1.0 - x[..., 2]))
    return np.where(north & (zeta == 0), INF, w)


def chordal(p, q):
    """Chordal distance 2|p-q| / sqrt((1+|p|^2)(1+|q|^2)), vectorized."""
    d = np.linalg.norm(to_sphere(p) - to_sphere(q), axis=-1)
    if np.ndim(d) == 0:
        return float(d)
    return d


def parse_point(text):
    """Parse ``inf``, ``1.5``, ``-2i``, ``3+4i`` or ``0.5-1e-3i``."""
    t = text.strip().lower().replace(" ", "")
    if t in ("inf", "+inf", "infinity", "∞"):
        return INF
    if not t:
        raise ValueError("empty point")
    try:
        return as_point(complex(t.replace("i", "j")))
    except ValueError:
        raise ValueError(f"cannot parse point {text!r}") from None


def format_point(p):
    p = as_point(p)
    if p == INF:
        return "inf"
    return f"{p.real!r}{p.imag:+}i"
