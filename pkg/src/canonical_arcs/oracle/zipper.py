"""Slit-unzipping conformal maps (the geodesic algorithm).

Given a polyline arc z_0, ..., z_n on the sphere, the complement of the arc
is mapped onto the upper half-plane H by composing

* ``g(z) = i sqrt((z - z_1)/(z - z_0))``, which opens the first segment, and
* for every later node, with ``a`` its current image in H,
  ``f_a(z) = sqrt(u^2 + c^2)``, ``u = b z / (b - z)``,
  ``b = |a|^2 / Re a``, ``c = |a|^2 / Im a``,

which removes the arc of the circle through 0 and ``a`` orthogonal to the
real axis.  Each f_a is followed by a real Möbius map fixing 0 that puts the
image of a chosen reference point back at ``i``.  The tip z_n lands at 0 and
z_0 at a real point (or infinity).

Points conformally far from the reference crowd onto the real axis, and in
thin channels (high classes) the two ends of a geodesic can be 50 or more
hyperbolic units apart, far beyond what one double-precision chart can
resolve.  Geodesics are therefore traced through a chain of charts, each
referenced at a point of the geodesic and used only within a bounded
hyperbolic distance of it.

This module only sees polylines and points; it knows nothing about how the
arcs were produced.
"""

from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..errors import (
    BudgetExceeded,
    DegenerateArc,
    EndpointOnSlit,
    InvalidInput,
    SelfIntersection,
)
from ..mobius import MobiusMap, mobius_apply, mobius_invert
from ..polyline import Polyline, directed_distances, first_crossing
from ..sphere import INF, as_points, chordal, from_sphere

ON_SLIT_TOL = 1e-9
# arcs reaching beyond this modulus are first rotated away from infinity
MAX_PLAIN_MODULUS = 1e3
# hyperbolic radius in which a chart is trusted, and the cap on charts per geodesic
CHART_RADIUS = 8.0
MAX_CHARTS = 400


def _fibonacci_sphere(n):
    k = np.arange(n) + 0.5
    zc = 1 - 2 * k / n
    r = np.sqrt(1 - zc * zc)
    phi = np.pi * (1 + 5**0.5) * k
    return np.stack([r * np.cos(phi), r * np.sin(phi), zc], axis=1)


def _far_point(arc):
    """A sphere point chordally far from ``arc`` (deterministic)."""
    cand = _fibonacci_sphere(256)
    d = directed_distances(Polyline(from_sphere(cand)), arc)
    return complex(from_sphere(cand[int(np.argmax(d))]))


def _isometry_to_infinity(c):
    # unitary, hence a chordal isometry; sends c to infinity
    return MobiusMap.from_coefficients(np.conj(c), 1, -1, c)


@dataclass(frozen=True, eq=False)
class DiscreteRiemannMap:
    """Conformal map from the complement of a polyline onto H."""

    pre: MobiusMap
    z0: complex
    z1: complex
    bs: np.ndarray
    cs: np.ndarray
    gs: np.ndarray
    ds: np.ndarray
    base_image: float
    n_nodes: int

    def forward(self, p):
        scalar = np.ndim(p) == 0
        q = mobius_apply(self.pre, as_points(p))
        w = kernels.zipper_forward(q, self.z0, self.z1, self.bs, self.cs, self.gs, self.ds)
        return complex(w[0]) if scalar else w

    def inverse(self, w):
        scalar = np.ndim(w) == 0
        ww = np.asarray(w, np.complex128).reshape(-1)
        z = kernels.zipper_inverse(ww, self.z0, self.z1, self.bs, self.cs, self.gs, self.ds)
        out = mobius_apply(mobius_invert(self.pre), z)
        return complex(out[0]) if scalar else out

    @property
    def boundary_marks(self):
        """Images of the arc's start (real or inf) and end (always 0)."""
        return self.base_image, 0.0


def _pre_isometry(arc):
    pts = arc.points
    if np.all(np.isfinite(pts)) and np.abs(pts).max() <= MAX_PLAIN_MODULUS:
        return MobiusMap.identity()
    return _isometry_to_infinity(_far_point(arc))


def unzip_arc(arc, ref=INF, pre=None, check=True):
    """Discrete Riemann map of the complement of ``arc``, with ``ref`` sent to i.

    ``check=False`` skips the simplicity test for an arc already checked.
    """
    if not isinstance(arc, Polyline):
        arc = Polyline(arc)
    if len(arc) < 2:
        raise DegenerateArc("an arc needs at least two samples")
    if np.any(arc.gaps() <= 1e-13):
        raise DegenerateArc("consecutive samples coincide")
    if pre is None:
        pre = _pre_isometry(arc)
    nodes = mobius_apply(pre, arc.points)
    if not np.all(np.isfinite(nodes)):
        raise DegenerateArc("arc could not be moved off infinity")
    if check and (k := first_crossing(nodes)) >= 0:
        raise SelfIntersection(f"arc is not simple (segment {k} meets another segment)")
    bs, cs, gs, ds, base, bad = kernels.unzip(nodes, complex(mobius_apply(pre, as_points(ref))[0]))
    if bad >= 0:
        raise SelfIntersection(f"arc is not simple at its resolution (node {bad})")
    return DiscreteRiemannMap(
        pre, complex(nodes[0]), complex(nodes[1]), bs, cs, gs, ds, float(base), len(nodes)
    )


def hyperbolic_geodesic_hplane(P, Q, n):
    """``n`` samples of the H-geodesic from P to Q, equally spaced in hyperbolic length."""
    P, Q = complex(P), complex(Q)
    if n < 2:
        raise InvalidInput("need at least two geodesic samples")
    scale = max(abs(P), abs(Q))
    if abs(P.real - Q.real) <= 1e-14 * scale:
        s = np.linspace(np.log(P.imag), np.log(Q.imag), n)
        x = np.linspace(P.real, Q.real, n)
        out = x + 1j * np.exp(s)
    else:
        x0 = (abs(P) ** 2 - abs(Q) ** 2) / (2 * (P.real - Q.real))
        R = abs(P - x0)
        tp, tq = np.angle(P - x0), np.angle(Q - x0)
        s = np.linspace(np.log(np.tan(tp / 2)), np.log(np.tan(tq / 2)), n)
        th = 2 * np.arctan(np.exp(s))
        out = x0 + R * np.exp(1j * th)
    out[0], out[-1] = P, Q
    return out


def _disk_coordinate(T):
    # Cayley map H -> unit disk sending i to 0
    T = complex(T)
    if not np.isfinite(T):
        return 1 + 0j
    return (T - 1j) / (T + 1j)


def _toward(T, t):
    """Points at hyperbolic distances ``t`` from i on the geodesic towards T."""
    zeta = _disk_coordinate(T)
    xi = np.tanh(np.asarray(t) / 2) * (zeta / abs(zeta))
    return 1j * (1 + xi) / (1 - xi)


def _distance_from_i(T):
    r = abs(_disk_coordinate(T))
    return 2 * np.arctanh(r) if r < 1 else np.inf


def geodesic_in_complement(arc, p, q, resolution=512, radius=CHART_RADIUS):
    """Hyperbolic geodesic from p to q in the complement of ``arc``.

    The geodesic is walked from p: in the chart referenced at the current
    point the next ``radius`` hyperbolic units towards q are a straight ray
    of the disk model, and the point reached becomes the next reference.
    The returned samples are equally spaced in hyperbolic length.
    """
    if not isinstance(arc, Polyline):
        arc = Polyline(arc)
    ends = Polyline(as_points([p, q]))
    dist = directed_distances(ends, arc)
    if np.any(dist <= ON_SLIT_TOL):
        raise EndpointOnSlit(f"geodesic endpoint lies on the slit (distance {dist.min():.2e})")
    if chordal(ends.points[0], ends.points[1]) <= 1e-12:
        raise InvalidInput("geodesic endpoints coincide")
    if resolution < 2:
        raise InvalidInput("need at least two geodesic samples")
    pre = _pre_isometry(arc)
    charts = []
    ref, s0 = complex(ends.points[0]), 0.0
    while True:
        if len(charts) >= MAX_CHARTS:
            raise BudgetExceeded(f"geodesic needs more than {MAX_CHARTS} charts")
        rmap = unzip_arc(arc, ref, pre, check=not charts)
        T = rmap.forward(complex(ends.points[1]))
        d = _distance_from_i(T)
        if d <= radius:
            charts.append((rmap, T, s0, d))
            break
        charts.append((rmap, T, s0, radius))
        ref = rmap.inverse(complex(_toward(T, radius)))
        s0 += radius
    total = charts[-1][2] + charts[-1][3]
    s = np.linspace(0.0, total, resolution)
    starts = np.array([c[2] for c in charts])
    which = np.clip(np.searchsorted(starts, s, side="right") - 1, 0, len(charts) - 1)
    z = np.empty(resolution, np.complex128)
    for k, (rmap, T, start, _) in enumerate(charts):
        sel = which == k
        if sel.any():
            z[sel] = rmap.inverse(_toward(T, s[sel] - start))
    z[0], z[-1] = ends.points
    return Polyline(z)


def closed_form_slit_map(w):
    """w + sqrt(w^2 - 1): complement of [-1, 1] onto |z| > 1, branch ~2w at infinity."""
    w = np.asarray(w, np.complex128)
    return w + w * np.sqrt(1 - 1 / (w * w))


def to_exterior_disk(rmap, w):
    """Compose ``rmap`` with the Möbius map H -> {|z| > 1} that sends the
    image of infinity to infinity and the arc's tip to 1."""
    A = rmap.forward(complex(np.inf))
    u = rmap.forward(w)
    return (A / np.conj(A)) * (u - np.conj(A)) / (u - A)

