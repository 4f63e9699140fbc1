"""Weierstrass p-function numerics for a normalized root triple.

Half-periods and inverse values come from Carlson's R_F; evaluation uses
Jacobi theta series on a Gauss-reduced basis, so the nome satisfies
``|q| <= exp(-pi*sqrt(3)/2)`` and eight series terms reach double precision.

Two bases are kept per lattice:

* the *labelled* basis ``(omega1_0, omega2_0)`` with
  ``p(omega1_0/2) = e1``, ``p(omega2_0/2) = e2``,
  ``p((omega1_0+omega2_0)/2) = e3``; isotopy classes are coordinates in it;
* the *reduced* basis ``(w1, w2)`` used for argument reduction; ``tau`` is
  reported for this one.
"""

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    InvalidArguments,
    InversionFailure,
    LabelingFailure,
    NonConvergence,
    RootsTooClose,
)
from .mobius import RootTriple
from .sphere import INF, as_points, chordal

RF_RTOL = 1e-16
MIN_ROOT_SEPARATION = 1e-6
N_THETA_TERMS = 8
LABEL_TOL = 1e-9
INVERT_TOL = 1e-9


def carlson_rf(x, y, z):
    """Carlson's symmetric integral R_F(x, y, z), scalar or elementwise.

    (1/2) * integral_0^inf dt / sqrt((t+x)(t+y)(t+z)), principal branches.
    """
    scalar = np.ndim(x) == 0 and np.ndim(y) == 0 and np.ndim(z) == 0
    xa, ya, za = np.broadcast_arrays(
        np.asarray(x, np.complex128), np.asarray(y, np.complex128), np.asarray(z, np.complex128)
    )
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(ya)) and np.all(np.isfinite(za))):
        raise InvalidArguments("R_F arguments must be finite")
    nzero = (xa == 0).astype(int) + (ya == 0) + (za == 0)
    if np.any(nzero >= 2):
        raise InvalidArguments("R_F needs at least two nonzero arguments")
    val, ok = kernels.carlson_rf(xa, ya, za, RF_RTOL)
    if not np.all(ok):
        raise NonConvergence("R_F duplication did not contract")
    return complex(val) if scalar else val


def _ray_directions(w, roots):
    """Unit directions d such that the rays w + t*d (t >= 0) miss every root.

    Prefers d = 1 whenever it stays 0.3 rad clear of all roots; otherwise
    takes the direction farthest (in angle) from the nearest root.
    """
    w = np.asarray(w, np.complex128).reshape(-1)
    e = np.asarray(roots, np.complex128)
    diff = e[None, :] - w[:, None]
    towards = np.angle(diff)
    live = np.abs(diff) > 0

    def clearance(psi):
        gap = np.abs(np.angle(np.exp(1j * (towards - psi[:, None]))))
        return np.where(live, gap, np.inf).min(axis=1)

    psi = np.zeros(len(w))
    best = clearance(psi)
    for cand in np.linspace(0, 2 * np.pi, 48, endpoint=False)[1:]:
        trial = np.full(len(w), cand)
        c = clearance(trial)
        take = (best < 0.3) & (c > best + 1e-12)
        psi = np.where(take, cand, psi)
        best = np.where(take, c, best)
    return np.exp(1j * psi)


def _raw_inverse(w, roots):
    """A preimage of each finite ``w`` under p, up to sign and periods.

    Integrates dw / sqrt(4 prod(w - e_j)) from w to infinity along a ray,
    which is d^(-1/2) R_F((w-e1)/d, (w-e2)/d, (w-e3)/d).
    """
    w = np.asarray(w, np.complex128).reshape(-1)
    d = _ray_directions(w, roots)
    e1, e2, e3 = roots
    return carlson_rf((w - e1) / d, (w - e2) / d, (w - e3) / d) / np.sqrt(d)


def gauss_reduce(w1, w2):
    """Lagrange-Gauss reduction of a lattice basis.

    Returns ``(w1, w2)`` with tau = w2/w1 in the closed fundamental domain
    -1/2 < Re tau <= 1/2, |tau| >= 1, and Re tau >= 0 when |tau| = 1.
    """
    w1, w2 = complex(w1), complex(w2)
    if abs(w1) > abs(w2):
        w1, w2 = w2, w1
    for _ in range(200):
        mu = round((w2 * w1.conjugate()).real / abs(w1) ** 2)
        w2 -= mu * w1
        if abs(w2) < abs(w1) * (1 - 1e-14):
            w1, w2 = w2, w1
        else:
            break
    else:  # pragma: no cover - Gauss reduction terminates
        raise NonConvergence("lattice reduction did not terminate")
    if (w2 / w1).imag < 0:
        w2 = -w2
    eps = 1e-12
    tau = w2 / w1
    if tau.real <= -0.5 + eps:
        w2 += w1
    elif tau.real > 0.5 + eps:
        w2 -= w1
    tau = w2 / w1
    if abs(abs(tau) - 1) < eps and tau.real < -eps:
        # rotate by tau -> -1/tau
        w1, w2 = w2, -w1
    return w1, w2


def _theta_constants(tau):
    n = np.arange(N_THETA_TERMS)
    qhalf = np.exp(1j * np.pi * tau * (n + 0.5) ** 2)
    qint = np.exp(1j * np.pi * tau * n**2)
    sign = np.where(n % 2 == 0, 1.0, -1.0)
    th2 = 2 * np.sum(qhalf)
    th3 = 1 + 2 * np.sum(qint[1:])
    th4 = 1 + 2 * np.sum(sign[1:] * qint[1:])
    th1p = 2 * np.sum(sign * (2 * n + 1) * qhalf)
    return qhalf, qint, complex(th2), complex(th3), complex(th4), complex(th1p)


def _lattice_roots(w1, w2):
    """p-values at w1/2, (w1+w2)/2 and w2/2 for the reduced basis."""
    _, _, th2, th3, th4, _ = _theta_constants(w2 / w1)
    K = (np.pi / w1) ** 2
    return np.array(
        [K * (th3**4 + th4**4) / 3, K * (th2**4 - th4**4) / 3, -K * (th2**4 + th3**4) / 3]
    )


@dataclass(frozen=True)
class LatticeBasis:
    omega1_0: complex
    omega2_0: complex
    tau: complex
    roots: RootTriple
    w1: complex
    w2: complex
    # roots sitting at w1/2, (w1+w2)/2, w2/2
    class_roots: tuple = field(repr=False)
    _consts: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_consts", _theta_constants(self.tau))

    @property
    def omega3_0(self):
        return self.omega1_0 + self.omega2_0

    def half_periods(self):
        return (self.omega1_0 / 2, self.omega2_0 / 2, (self.omega1_0 + self.omega2_0) / 2)

    def coords(self, z):
        """Real coordinates (x, y) of z = x*omega1_0 + y*omega2_0."""
        z = np.asarray(z, np.complex128)
        t = self.omega2_0 / self.omega1_0
        r = z / self.omega1_0
        y = r.imag / t.imag
        x = r.real - y * t.real
        return x, y

    @classmethod
    def from_parts(cls, omega1_0, omega2_0, roots, w1, w2):
        """Rebuild a basis from stored periods (used by deserialization)."""
        omega1_0, omega2_0, w1, w2 = map(complex, (omega1_0, omega2_0, w1, w2))
        e = roots.as_array()
        if w1 == 0 or (w2 / w1).imag <= 0:
            raise LabelingFailure("reduced basis is not positively oriented")
        coords = [_reduced_coords(om, w1, w2) for om in (omega1_0, omega2_0)]
        ints = [(round(float(a)), round(float(b))) for a, b in coords]
        if any(abs(a - ia) + abs(b - ib) > 1e-6 for (a, b), (ia, ib) in zip(coords, ints)):
            raise LabelingFailure("stored periods are not in the reduced lattice")
        (p, q), (r, s) = ints
        if p * s - q * r != 1:
            raise LabelingFailure("stored periods do not form an oriented lattice basis")
        lab = {}
        for j, (a, b) in enumerate([(p, q), (r, s), (p + r, q + s)]):
            lab[_class_index(a % 2, b % 2)] = e[j]
        if sorted(lab) != [0, 1, 2]:
            raise LabelingFailure("stored periods do not label three distinct half-period classes")
        return cls(omega1_0, omega2_0, w2 / w1, roots, w1, w2, (lab[0], lab[1], lab[2]))


def _class_index(pa, pb):
    # parity of (w1, w2) coordinates -> 0: w1/2, 1: (w1+w2)/2, 2: w2/2
    return {(1, 0): 0, (1, 1): 1, (0, 1): 2}[(pa, pb)]


def _reduced_coords(z, w1, w2):
    r = np.asarray(z, np.complex128) / w1
    t = w2 / w1
    b = r.imag / t.imag
    a = r.real - b * t.real
    return a, b


def lattice_from_roots(roots):
    """Period lattice of p with (p')^2 = 4 (p-e1)(p-e2)(p-e3)."""
    e = roots.as_array()
    if roots.min_separation() < MIN_ROOT_SEPARATION * max(1.0, np.abs(e).max()):
        raise RootsTooClose(f"root separation {roots.min_separation():.3e} below {MIN_ROOT_SEPARATION}")
    h = _raw_inverse(e, e)
    scale = np.abs(e).max()
    best = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        a, b = 2 * h[i], 2 * h[j]
        if abs((b / a).imag) < 1e-8:
            continue
        w1, w2 = gauss_reduce(a, b)
        lr = _lattice_roots(w1, w2)
        # which given root sits at each reduced half-period class
        for perm in itertools.permutations(range(3)):
            err = max(abs(lr[k] - e[perm[k]]) for k in range(3)) / scale
            if best is None or err < best[0]:
                best = (err, w1, w2, perm)
    if best is None or best[0] > LABEL_TOL:
        raise LabelingFailure(
            "no half-period pairing reproduces the roots"
            + ("" if best is None else f" (best mismatch {best[0]:.2e})")
        )
    _, w1, w2, perm = best
    vecs = (w1, w1 + w2, w2)
    where = {perm[k]: k for k in range(3)}
    om1 = vecs[where[0]]
    om2 = vecs[where[1]]
    if (om2 / om1).imag < 0:
        om2 = -om2
    class_roots = tuple(complex(e[perm[k]]) for k in range(3))
    basis = LatticeBasis(om1, om2, w2 / w1, roots, w1, w2, class_roots)
    for zh, ej in zip(basis.half_periods(), e):
        if abs(wp_eval(zh, basis)[0] - ej) > LABEL_TOL * scale:
            raise LabelingFailure("half-period table check failed")
    return basis


def reduce_mod_lattice(z, basis):
    """Representative of z mod the lattice in the parallelogram centred at 0."""
    scalar = np.ndim(z) == 0
    zz = np.asarray(z, np.complex128)
    a, b = _reduced_coords(zz, basis.w1, basis.w2)
    a = a - np.round(a)
    b = b - np.round(b)
    out = a * basis.w1 + b * basis.w2
    return complex(out) if scalar else out


def wp_eval(z, basis):
    """Return ``(p(z), p'(z))``; both are ``INF`` at lattice points."""
    scalar = np.ndim(z) == 0
    zz = np.asarray(z, np.complex128).reshape(-1)
    a, b = _reduced_coords(zz, basis.w1, basis.w2)
    a = a - np.round(a)
    b = b - np.round(b)
    pole = (np.abs(a) < 1e-14) & (np.abs(b) < 1e-14)
    nu = np.pi * (a + b * basis.tau)
    qhalf, qint, th2, th3, th4, th1p = basis._consts
    t1, t2, t3, t4 = kernels.theta_all(nu, qhalf, qint)
    K = (np.pi / basis.w1) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        D = np.stack(
            [
                K * (th1p * t2 / (th2 * t1)) ** 2,
                K * (th1p * t3 / (th3 * t1)) ** 2,
                K * (th1p * t4 / (th4 * t1)) ** 2,
            ]
        )
        k = np.argmin(np.abs(D), axis=0)
        E = np.asarray(basis.class_roots)[k]
        p = E + D[k, np.arange(len(zz))]
        pp = -2 * (np.pi / basis.w1) ** 3 * th1p**3 * t2 * t3 * t4 / (th2 * th3 * th4 * t1**3)
    p[pole] = INF
    pp[pole] = INF
    if scalar:
        return complex(p[0]), complex(pp[0])
    shape = np.shape(z)
    return p.reshape(shape), pp.reshape(shape)


def _canonical_representative(z, basis, tol=1e-12):
    z = reduce_mod_lattice(z, basis)
    a, b = _reduced_coords(z, basis.w1, basis.w2)
    flip = (b < -tol) | ((np.abs(b) <= tol) & (a < -tol))
    z = np.where(flip, -z, z)
    return reduce_mod_lattice(z, basis)


def wp_invert(w, basis, max_newton=6):
    """A point z with p(z) = w.

    The answer is the representative of {±z + lattice} in the reduced
    parallelogram with nonnegative w2-coordinate (ties: nonnegative w1-
    coordinate).  ``w = inf`` gives 0.
    """
    scalar = np.ndim(w) == 0
    ww = as_points(w)
    out = np.zeros(len(ww), np.complex128)
    fin = np.isfinite(ww)
    if fin.any():
        wf = ww[fin]
        z = _raw_inverse(wf, basis.roots.as_array())
        p, pp = wp_eval(z, basis)
        res = chordal(p, wf)
        for _ in range(max_newton):
            todo = res > 1e-15
            if not todo.any():
                break
            with np.errstate(divide="ignore", invalid="ignore"):
                step = (p - wf) / pp
            ok = todo & np.isfinite(step)
            if not ok.any():
                break
            zn = np.where(ok, z - step, z)
            pn, ppn = wp_eval(zn, basis)
            rn = chordal(pn, wf)
            better = ok & (rn < res)
            if not better.any():
                break
            z = np.where(better, zn, z)
            p = np.where(better, pn, p)
            pp = np.where(better, ppn, pp)
            res = np.where(better, rn, res)
        if np.any(res > INVERT_TOL):
            raise InversionFailure(f"p-inversion residual {res.max():.2e} exceeds {INVERT_TOL}")
        out[fin] = _canonical_representative(z, basis)
    return complex(out[0]) if scalar else out.reshape(np.shape(w))


def equianharmonic_roots():
    """Cube roots of unity (unit max-modulus), labelled e1=1, e2=w, e3=w^2."""
    w = cmath.exp(2j * math.pi / 3)
    return RootTriple(1 + 0j, w, w * w)
