"""Anti-conformal reflections fixing each arc of a canonical configuration.

On the lattice of the class-adapted basis (omega1, omega2), the complement
of gamma_1 lifts to the strip |y| < 1/2 (z = x omega1 + y omega2) modulo
z -> -z and z -> z + omega1.  Reflection in the line through 0 and omega1
respects both identifications, so it descends to an anti-conformal
involution sigma_0 of the complement whose fixed set is gamma_0.  sigma_1
is the reflection in the parallel line through omega2/2, acting on the
complement of gamma_0 (strip 0 < y < 1).
"""

from typing import NamedTuple

import numpy as np

from ..elliptic import wp_eval, wp_invert
from ..mobius import mobius_apply, mobius_invert
from ..polyline import Polyline, directed_distances
from ..sphere import as_points, chordal, from_sphere
from .zipper import _fibonacci_sphere

N_PROBES = 50
PROBE_CLEARANCE = 0.1


class InvolutionResiduals(NamedTuple):
    fix_residual: float
    idem_residual: float


def _strip_lift(w, config, k):
    """Lift sphere points into the strip on which sigma_k acts."""
    v = mobius_apply(config.normalization, as_points(w))
    z = np.atleast_1d(wp_invert(v, config.basis))
    om1, om2 = config.omega1, config.omega2
    t = om2 / om1
    r = z / om1
    y = r.imag / t.imag
    x = r.real - y * t.real
    y = y - np.round(y) if k == 0 else y - np.floor(y)
    return x * om1 + y * om2


def sigma(w, config, k):
    """Apply the reflection fixing arc ``k`` to sphere points ``w``."""
    om1, om2 = config.omega1, config.omega2
    rot = om1 / np.conj(om1)
    z = _strip_lift(w, config, k)
    if k == 0:
        zs = rot * np.conj(z)
    else:
        zs = om2 / 2 + rot * np.conj(z - om2 / 2)
    p, _ = wp_eval(zs, config.basis)
    return mobius_apply(mobius_invert(config.normalization), np.atleast_1d(p))


def probe_points(config, n=N_PROBES, clearance=PROBE_CLEARANCE):
    """Deterministic sphere points at least ``clearance`` from both arcs."""
    cand = Polyline(from_sphere(_fibonacci_sphere(8 * n)))
    d = np.minimum(directed_distances(cand, config.arc0), directed_distances(cand, config.arc1))
    return cand.points[d >= clearance][:n]


def involution_residuals(config):
    """Fixed-point and idempotence residuals of sigma_0 and sigma_1 (chordal)."""
    fix = 0.0
    idem = 0.0
    probes = probe_points(config)
    for k, arc in enumerate((config.arc0, config.arc1)):
        fix = max(fix, float(np.max(chordal(sigma(arc.points, config, k), arc.points))))
        if len(probes):
            back = sigma(sigma(probes, config, k), config, k)
            idem = max(idem, float(np.max(chordal(back, probes))))
    return InvolutionResiduals(fix, idem)


def probe_image_clearance(config):
    """Smallest distance from sigma_k(probes) to the arc sigma_k must avoid."""
    probes = probe_points(config)
    if not len(probes):
        return float("nan")
    out = np.inf
    for k, other in ((0, config.arc1), (1, config.arc0)):
        img = Polyline(sigma(probes, config, k))
        out = min(out, float(directed_distances(img, other).min()))
    return out
