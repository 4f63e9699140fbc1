"""Construction of the canonical arc pair for given points and class.

In normalized coordinates the arcs are the p-images of two parallel lattice
segments, gamma_0 = p([0, omega1/2]) and
gamma_1 = p([omega2/2, (omega1+omega2)/2]), where (omega1, omega2) is the
basis adapted to the class.  Everything is then carried back to the user's
coordinates by the inverse normalization.
"""

import math
from dataclasses import dataclass

import numpy as np

from .elliptic import MIN_ROOT_SEPARATION, _reduced_coords, lattice_from_roots, wp_eval, wp_invert
from .errors import BudgetExceeded, InvalidInput, LabelingFailure, NumericalFailure, RootsTooClose
from .isotopy import (
    IsotopyClass,
    canonical_class,
    class_pairing,
    companion_coefficients,
)
from .mobius import MobiusMap, mobius_apply, mobius_invert, normalize_quadruple
from .polyline import Polyline, min_distance
from .sphere import INF, as_point, as_points, to_sphere


@dataclass(frozen=True)
class SamplingBudget:
    h: float = 1e-2
    theta_max_deg: float = 5.0
    cap: int = 20000
    initial: int = 33

    def __post_init__(self):
        if not (self.h > 0 and self.theta_max_deg > 0 and self.cap >= self.initial >= 2):
            raise InvalidInput(f"invalid sampling budget {self}")


DEFAULT_BUDGET = SamplingBudget()


def _endpoint_value(z, basis):
    """Exact value of p at a lattice point (INF) or half-period (its root)."""
    p, _ = wp_eval(z, basis)
    if p == INF:
        return INF
    roots = basis.roots.as_array()
    j = int(np.argmin(np.abs(roots - p)))
    if abs(roots[j] - p) > 1e-7:
        raise InvalidInput(f"segment endpoint {z} is neither a lattice point nor a half-period")
    return complex(roots[j])


def _turning(P):
    v1 = P[1:-1] - P[:-2]
    v2 = P[2:] - P[1:-1]
    n1 = np.linalg.norm(v1, axis=1)
    n2 = np.linalg.norm(v2, axis=1)
    den = n1 * n2
    cos = np.einsum("ij,ij->i", v1, v2) / np.where(den > 0, den, 1.0)
    ang = np.arccos(np.clip(cos, -1.0, 1.0))
    return np.where(den > 0, ang, 0.0)


def _infinity_parameter(z_start, z_end, basis, transform, tol=1e-9):
    """Parameter t in (0, 1) where the segment meets a preimage of the pole
    of ``transform``, or None.  Used to place an exact INF sample."""
    if transform is None or transform.c == 0:
        return None
    pole = -transform.d / transform.c
    dz = z_end - z_start
    zp = complex(wp_invert(pole, basis))
    best = None
    for sign in (1, -1):
        # solve sign*zp - z_start = t*dz + lattice vector in reduced coordinates
        x, y = _reduced_coords(sign * zp - z_start, basis.w1, basis.w2)
        a, b = _reduced_coords(dz, basis.w1, basis.w2)
        if abs(a) < abs(b):
            x, y, a, b = y, x, b, a
        lo, hi = sorted((x - a, x))
        for m in range(math.ceil(lo - tol), math.floor(hi + tol) + 1):
            t = (x - m) / a
            off = y - t * b
            if abs(off - round(off)) < tol and tol < t < 1 - tol:
                best = t if best is None else min(best, t)
    return best


def sample_arc(z_start, z_end, basis, budget=DEFAULT_BUDGET, transform=None):
    """Adaptive samples of p([z_start, z_end]).

    Parameter intervals are bisected until consecutive samples are within
    ``budget.h`` chordally and the turning angle between consecutive chords
    (on the sphere in R^3) is at most ``budget.theta_max_deg``.  Gaps and
    angles are measured after ``transform`` when one is given.
    """
    z_start, z_end = complex(z_start), complex(z_end)
    dz = z_end - z_start
    ends = (_endpoint_value(z_start, basis), _endpoint_value(z_end, basis))

    t_inf = _infinity_parameter(z_start, z_end, basis, transform)

    def images(t):
        w = np.asarray(wp_eval(z_start + t * dz, basis)[0])
        w[t == 0] = ends[0]
        w[t == 1] = ends[1]
        w = w if transform is None else mobius_apply(transform, w)
        w[t == t_inf] = INF
        return w

    t = np.linspace(0.0, 1.0, budget.initial)
    if t_inf is not None:
        # snap onto a grid sample that is numerically the same parameter
        k = int(np.argmin(np.abs(t - t_inf)))
        if abs(t[k] - t_inf) < 1e-6 / budget.initial and 0 < k < len(t) - 1:
            t[k] = t_inf
        else:
            t = np.insert(t, np.searchsorted(t, t_inf), t_inf)
    if dz == 0:
        t = np.array([0.0])
    w = images(t)
    theta_max = math.radians(budget.theta_max_deg)
    while len(t) > 1:
        P = to_sphere(w)
        gap = np.linalg.norm(np.diff(P, axis=0), axis=1)
        bad = gap > budget.h
        if len(t) > 2:
            sharp = _turning(P) > theta_max
            bad[:-1] |= sharp
            bad[1:] |= sharp
        if not bad.any():
            break
        idx = np.nonzero(bad)[0]
        if len(t) + len(idx) > budget.cap:
            raise BudgetExceeded(f"arc needs more than {budget.cap} samples at h={budget.h}")
        tn = 0.5 * (t[idx] + t[idx + 1])
        wn = images(tn)
        t = np.insert(t, idx + 1, tn)
        w = np.insert(w, idx + 1, wn)
    return Polyline(w)


def flat_length(z_start, z_end, basis, nodes=64):
    """Length of p([z_start, z_end]) in the flat cone metric.

    p is a local isometry from the Euclidean plane, so the length is
    |z_end - z_start|.  As a consistency check the flat length element
    |dw| / |sqrt(4 prod(w - e_j))| is integrated along the image with
    Gauss-Legendre nodes; the two must agree to 1e-8.
    """
    z_start, z_end = complex(z_start), complex(z_end)
    L = abs(z_end - z_start)
    if L == 0:
        return 0.0
    x, wts = np.polynomial.legendre.leggauss(nodes)
    t = 0.5 * (x + 1)
    p, pp = wp_eval(z_start + t * (z_end - z_start), basis)
    e = basis.roots.as_array()
    ratio = np.abs(pp) / np.abs(2 * np.sqrt((p - e[0]) * (p - e[1]) * (p - e[2])))
    check = float(0.5 * np.sum(wts * ratio) * L)
    if abs(check - L) > 1e-8 * max(1.0, L):
        raise NumericalFailure(f"flat length cross-check failed: {check} vs {L}")
    return L


@dataclass(eq=False)
class CanonicalConfiguration:
    points: tuple
    cls: IsotopyClass
    pairing: object
    basis: object
    omega1: complex
    omega2: complex
    companion: tuple
    arc0: Polyline
    arc1: Polyline
    flat_length0: float
    flat_length1: float
    annulus_modulus: float
    normalization: MobiusMap
    budget: SamplingBudget
    separation: float

    @property
    def roots(self):
        return self.basis.roots

    def arc_endpoints(self, k):
        return self.pairing.pairs[k]


def _label(z, basis):
    p, _ = wp_eval(z, basis)
    roots = basis.roots.as_array()
    return int(np.argmin(np.abs(roots - p))) + 1


def build_configuration(points, cls, budget=DEFAULT_BUDGET, companion=None):
    """Canonical configuration for four points and an isotopy class.

    ``cls`` may be an :class:`IsotopyClass` or any primitive pair (r, s);
    ``companion`` optionally fixes the coefficients (p, q) of omega2 (they
    must satisfy r*q - s*p = 1), which must not change the result.
    """
    if not isinstance(cls, IsotopyClass):
        cls = canonical_class(*cls)
    pts = tuple(as_point(p) for p in points)
    if len(pts) != 4:
        raise InvalidInput("exactly four points are required")
    T, roots = normalize_quadruple(*pts)
    if roots.min_separation() < MIN_ROOT_SEPARATION:
        raise RootsTooClose(f"normalized roots closer than {MIN_ROOT_SEPARATION}")
    basis = lattice_from_roots(roots)
    r, s = cls.r, cls.s
    if companion is None:
        p, q = companion_coefficients(cls, basis)
    else:
        p, q = (int(v) for v in companion)
        if r * q - s * p != 1:
            raise InvalidInput(f"companion ({p}, {q}) does not complete ({r}, {s}) to a basis")
    om1 = r * basis.omega1_0 + s * basis.omega2_0
    om2 = p * basis.omega1_0 + q * basis.omega2_0
    pairing = class_pairing(cls)
    (i0, j0), (i1, j1) = pairing.pairs

    lab1 = _label(om1 / 2, basis)
    lab2 = _label(om2 / 2, basis)
    lab3 = _label((om1 + om2) / 2, basis)
    if lab1 != j0 or {lab2, lab3} != {i1, j1}:
        raise LabelingFailure(
            f"half-period labels ({lab1}, {lab2}, {lab3}) disagree with parity pairing {pairing}"
        )

    Tinv = mobius_invert(T)
    arc0 = sample_arc(0j, om1 / 2, basis, budget, transform=Tinv)
    arc1 = sample_arc(om2 / 2, (om1 + om2) / 2, basis, budget, transform=Tinv)
    if lab2 != i1:
        arc1 = arc1.reversed()
    # endpoints are the user's points, bit for bit
    arc0.points[0], arc0.points[-1] = pts[i0], pts[j0]
    arc1.points[0], arc1.points[-1] = pts[i1], pts[j1]

    return CanonicalConfiguration(
        points=pts,
        cls=cls,
        pairing=pairing,
        basis=basis,
        omega1=complex(om1),
        omega2=complex(om2),
        companion=(p, q),
        arc0=arc0,
        arc1=arc1,
        flat_length0=flat_length(0j, om1 / 2, basis),
        flat_length1=flat_length(om2 / 2, (om1 + om2) / 2, basis),
        annulus_modulus=float((om2 / om1).imag / 2),
        normalization=T,
        budget=budget,
        separation=min_distance(arc0, arc1),
    )
