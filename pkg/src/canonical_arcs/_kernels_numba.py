"""numba twins of the ``_kernels_numpy`` functions (same signatures)."""

import cmath
import math

import numpy as np
from numba import njit

RF_MAX_ITER = 60


@njit(cache=True)
def _rf_one(x, y, z, rtol):
    A0 = (x + y + z) / 3
    Q = (3 * rtol) ** (-1.0 / 8) * max(abs(A0 - x), abs(A0 - y), abs(A0 - z))
    xm, ym, zm, A = x, y, z, A0
    f = 1.0
    it = 0
    while Q / f >= abs(A):
        if it >= RF_MAX_ITER:
            return complex(np.nan, np.nan), False
        sx, sy, sz = cmath.sqrt(xm), cmath.sqrt(ym), cmath.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        xm = (xm + lam) / 4
        ym = (ym + lam) / 4
        zm = (zm + lam) / 4
        A = (A + lam) / 4
        f *= 4
        it += 1
    X = (A0 - x) / (f * A)
    Y = (A0 - y) / (f * A)
    Z = -(X + Y)
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    poly = (
        1.0
        - E2 / 10
        + E3 / 14
        + E2 * E2 / 24
        - 3 * E2 * E3 / 44
        - 5 * E2 * E2 * E2 / 208
        + 3 * E3 * E3 / 104
        + E2 * E2 * E3 / 16
    )
    return poly / cmath.sqrt(A), True


@njit(cache=True)
def _rf_flat(x, y, z, rtol):
    n = x.shape[0]
    out = np.empty(n, np.complex128)
    ok = np.empty(n, np.bool_)
    for i in range(n):
        out[i], ok[i] = _rf_one(x[i], y[i], z[i], rtol)
    return out, ok


def carlson_rf(x, y, z, rtol):
    x, y, z = np.broadcast_arrays(
        np.asarray(x, np.complex128), np.asarray(y, np.complex128), np.asarray(z, np.complex128)
    )
    shape = x.shape
    val, ok = _rf_flat(
        np.ascontiguousarray(x).reshape(-1),
        np.ascontiguousarray(y).reshape(-1),
        np.ascontiguousarray(z).reshape(-1),
        float(rtol),
    )
    return val.reshape(shape), ok.reshape(shape)


@njit(cache=True)
def _theta_all(nu, qhalf, qint):
    m = nu.shape[0]
    N = qhalf.shape[0]
    t1 = np.zeros(m, np.complex128)
    t2 = np.zeros(m, np.complex128)
    t3 = np.ones(m, np.complex128)
    t4 = np.ones(m, np.complex128)
    for i in range(m):
        v = nu[i]
        s1 = 0j
        s2 = 0j
        s3 = 0j
        s4 = 0j
        for n in range(N):
            sg = 1.0 if n % 2 == 0 else -1.0
            a = (2 * n + 1) * v
            s1 += sg * qhalf[n] * cmath.sin(a)
            s2 += qhalf[n] * cmath.cos(a)
            if n > 0:
                ce = cmath.cos(2 * n * v)
                s3 += qint[n] * ce
                s4 += sg * qint[n] * ce
        t1[i] = 2 * s1
        t2[i] = 2 * s2
        t3[i] = 1 + 2 * s3
        t4[i] = 1 + 2 * s4
    return t1, t2, t3, t4


def theta_all(nu, qhalf, qint):
    nu = np.ascontiguousarray(np.asarray(nu, np.complex128).reshape(-1))
    return _theta_all(nu, np.asarray(qhalf, np.complex128), np.asarray(qint, np.complex128))


@njit(cache=True)
def _sqrt_open(u, c):
    if u == 0:
        return complex(c, 0.0)
    r = c / u
    return u * cmath.sqrt(1 + r * r)


@njit(cache=True)
def _sqrt_close(w, c):
    if w.imag == 0 and abs(w.real) < c:
        return 1j * math.sqrt(c * c - w.real * w.real)
    r = c / w
    return w * cmath.sqrt(1 - r * r)


@njit(cache=True)
def _slit_fwd(z, b, c):
    if not math.isfinite(b):
        return _sqrt_open(z, c)
    s = -b * math.sqrt(1 + (c / b) ** 2)
    if z == b:
        return complex(-s, 0.0)
    q = 1.0 / (b - z)
    u = b * z * q
    S = _sqrt_open(u, c)
    sp = s + S
    if sp.real * sp.real + sp.imag * sp.imag >= s * s:
        # s - S = -(u - b)(u + b) / (s + S), u + b = b^2 q, u - b = b (2z - b) q
        return -s * S * sp / (b * b * b * (2 * z - b) * (q * q))
    return s * S / (s - S)


@njit(cache=True)
def _slit_inv(w, b, c):
    if not math.isfinite(b):
        return _sqrt_close(w, c)
    s = -b * math.sqrt(1 + (c / b) ** 2)
    den = s + w
    if den == 0:
        return complex(b, 0.0)
    S = s * w / den
    dS = -s * s / den
    u = _sqrt_close(S, c)
    um = u - b
    up = u + b
    if abs(up) <= 0.5 * abs(b) and um != 0:
        up = dS * (S + s) / um
    return b * u / up


@njit(cache=True)
def _first_fwd(z, z0, z1):
    return 1j * cmath.sqrt(1 + (z0 - z1) / (z - z0))


@njit(cache=True)
def _rmob(w, isinf, a, b, c, d):
    # real Möbius (a w + b) / (c w + d) with an explicit infinity flag
    if isinf:
        if c != 0:
            return complex(a / c, 0.0), False
        return w, True
    den = c * w + d
    if den == 0:
        return w, True
    return (a * w + b) / den, False


@njit(cache=True)
def _zipper_forward(z, z0, z1, bs, cs, gs, ds):
    n = z.shape[0]
    out = np.empty(n, np.complex128)
    K = bs.shape[0]
    for i in range(n):
        zi = z[i]
        isinf = False
        if not (math.isfinite(zi.real) and math.isfinite(zi.imag)):
            w = 1j
        elif zi == z0:
            w = 0j
            isinf = True
        else:
            w = _first_fwd(zi, z0, z1)
        for k in range(K):
            if not isinf:
                w = _slit_fwd(w, bs[k], cs[k])
            w, isinf = _rmob(w, isinf, 1.0, 0.0, gs[k], ds[k])
        out[i] = complex(np.inf, 0.0) if isinf else w
    return out


def zipper_forward(z, z0, z1, bs, cs, gs, ds):
    z = np.ascontiguousarray(np.asarray(z, np.complex128).reshape(-1))
    f = lambda v: np.ascontiguousarray(v, dtype=float)
    return _zipper_forward(z, complex(z0), complex(z1), f(bs), f(cs), f(gs), f(ds))


@njit(cache=True)
def _zipper_inverse(w, z0, z1, bs, cs, gs, ds):
    n = w.shape[0]
    out = np.empty(n, np.complex128)
    K = bs.shape[0]
    for i in range(n):
        x = w[i]
        isinf = not (math.isfinite(x.real) and math.isfinite(x.imag))
        for k in range(K - 1, -1, -1):
            x, isinf = _rmob(x, isinf, ds[k], 0.0, -gs[k], 1.0)
            if not isinf:
                x = _slit_inv(x, bs[k], cs[k])
        if isinf:
            out[i] = z0
        elif x == 1j or x == -1j:
            out[i] = complex(np.inf, 0.0)
        else:
            out[i] = z0 + (z1 - z0) / ((x - 1j) * (x + 1j))
    return out


def zipper_inverse(w, z0, z1, bs, cs, gs, ds):
    w = np.ascontiguousarray(np.asarray(w, np.complex128).reshape(-1))
    f = lambda v: np.ascontiguousarray(v, dtype=float)
    return _zipper_inverse(w, complex(z0), complex(z1), f(bs), f(cs), f(gs), f(ds))


@njit(cache=True)
def _unzip(nodes, ref, ref_inf):
    n = nodes.shape[0] - 1
    z0 = nodes[0]
    z1 = nodes[1]
    m = max(n - 1, 0)
    # slots 0..m-1: remaining nodes, m: base image, m+1: reference image
    track = np.empty(m + 2, np.complex128)
    tinf = np.zeros(m + 2, np.bool_)
    for j in range(m):
        track[j] = _first_fwd(nodes[j + 2], z0, z1)
    track[m] = 0j
    tinf[m] = True
    track[m + 1] = 1j if ref_inf else _first_fwd(ref, z0, z1)
    bs = np.empty(m)
    cs = np.empty(m)
    gs = np.empty(m)
    ds = np.empty(m)
    for k in range(m):
        a = track[k]
        if not a.imag > 0:
            return bs[:k], cs[:k], gs[:k], ds[:k], np.inf, k + 2
        m2 = a.real * a.real + a.imag * a.imag
        c = m2 / a.imag
        b = m2 / a.real if abs(a.real) > 1e-300 else np.inf
        r = _slit_fwd(track[m + 1], b, c)
        g = -r.real / r.imag
        d = (r.real * r.real + r.imag * r.imag) / r.imag
        for j in range(k + 1, m + 1):
            w = track[j] if tinf[j] else _slit_fwd(track[j], b, c)
            track[j], tinf[j] = _rmob(w, tinf[j], 1.0, 0.0, g, d)
        track[m + 1] = 1j
        bs[k] = b
        cs[k] = c
        gs[k] = g
        ds[k] = d
    base = np.inf if tinf[m] else track[m].real
    return bs, cs, gs, ds, base, -1


def unzip(nodes, ref=np.inf):
    ref = complex(ref)
    fin = math.isfinite(ref.real) and math.isfinite(ref.imag)
    bs, cs, gs, ds, base, bad = _unzip(
        np.ascontiguousarray(np.asarray(nodes, np.complex128)), ref if fin else 0j, not fin
    )
    return bs, cs, gs, ds, float(base), int(bad)


@njit(cache=True)
def _point_segment_min(P, A, B):
    n = P.shape[0]
    m = A.shape[0]
    out = np.empty(n)
    for i in range(n):
        best = np.inf
        for j in range(m):
            abx = B[j, 0] - A[j, 0]
            aby = B[j, 1] - A[j, 1]
            abz = B[j, 2] - A[j, 2]
            apx = P[i, 0] - A[j, 0]
            apy = P[i, 1] - A[j, 1]
            apz = P[i, 2] - A[j, 2]
            L2 = abx * abx + aby * aby + abz * abz
            t = 0.0
            if L2 > 0:
                t = (apx * abx + apy * aby + apz * abz) / L2
                if t < 0:
                    t = 0.0
                elif t > 1:
                    t = 1.0
            dx = apx - t * abx
            dy = apy - t * aby
            dz = apz - t * abz
            d = dx * dx + dy * dy + dz * dz
            if d < best:
                best = d
        out[i] = math.sqrt(best)
    return out


def point_segment_min(P, A, B):
    return _point_segment_min(
        np.ascontiguousarray(P, dtype=float),
        np.ascontiguousarray(A, dtype=float),
        np.ascontiguousarray(B, dtype=float),
    )
