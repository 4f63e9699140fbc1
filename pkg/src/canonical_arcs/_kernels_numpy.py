"""Pure-numpy implementations of the hot loops.

Each function here has a twin with the same signature in
``_kernels_numba``; ``kernels`` picks one at import time.
"""

import numpy as np

RF_MAX_ITER = 60


def carlson_rf(x, y, z, rtol):
    """Vectorized Carlson duplication for R_F.

    Returns ``(values, converged)``; both have the broadcast shape of the
    inputs.  Principal square roots throughout.
    """
    x, y, z = np.broadcast_arrays(
        np.asarray(x, np.complex128), np.asarray(y, np.complex128), np.asarray(z, np.complex128)
    )
    shape = x.shape
    x0 = x.reshape(-1).copy()
    y0 = y.reshape(-1).copy()
    z0 = z.reshape(-1).copy()
    A0 = (x0 + y0 + z0) / 3
    Q = (3 * rtol) ** (-1 / 8) * np.maximum(
        np.maximum(np.abs(A0 - x0), np.abs(A0 - y0)), np.abs(A0 - z0)
    )
    xm, ym, zm, A = x0.copy(), y0.copy(), z0.copy(), A0.copy()
    f = np.ones(x0.shape)
    active = Q / f >= np.abs(A)
    it = 0
    while active.any() and it < RF_MAX_ITER:
        sx, sy, sz = np.sqrt(xm[active]), np.sqrt(ym[active]), np.sqrt(zm[active])
        lam = sx * sy + sx * sz + sy * sz
        xm[active] = (xm[active] + lam) / 4
        ym[active] = (ym[active] + lam) / 4
        zm[active] = (zm[active] + lam) / 4
        A[active] = (A[active] + lam) / 4
        f[active] *= 4
        active = Q / f >= np.abs(A)
        it += 1
    converged = ~active
    X = (A0 - x0) / (f * A)
    Y = (A0 - y0) / (f * A)
    Z = -(X + Y)
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    poly = (
        1.0
        - E2 / 10
        + E3 / 14
        + E2 * E2 / 24
        - 3 * E2 * E3 / 44
        - 5 * E2**3 / 208
        + 3 * E3 * E3 / 104
        + E2 * E2 * E3 / 16
    )
    val = poly / np.sqrt(A)
    return val.reshape(shape), converged.reshape(shape)


def theta_all(nu, qhalf, qint):
    """Jacobi theta_1..theta_4 at the points ``nu``.

    ``qhalf[n] = q**((n+1/2)**2)`` and ``qint[n] = q**(n**2)`` for
    ``n = 0..N-1``, with the nome ``q = exp(i pi tau)``.
    """
    nu = np.asarray(nu, np.complex128)
    n = np.arange(len(qhalf))
    sign = np.where(n % 2 == 0, 1.0, -1.0)
    odd = (2 * n + 1)[:, None] * nu[None, :]
    even = (2 * n[1:])[:, None] * nu[None, :]
    t1 = 2 * np.sum((sign * qhalf)[:, None] * np.sin(odd), axis=0)
    t2 = 2 * np.sum(qhalf[:, None] * np.cos(odd), axis=0)
    ce = np.cos(even)
    t3 = 1 + 2 * np.sum(qint[1:, None] * ce, axis=0)
    t4 = 1 + 2 * np.sum((sign[1:] * qint[1:])[:, None] * ce, axis=0)
    return t1, t2, t3, t4


def _sqrt_open(u, c):
    # branch of sqrt(u^2 + c^2) mapping H minus [0, ic] onto H
    out = np.empty_like(u)
    zero = u == 0
    out[zero] = c
    uu = u[~zero]
    out[~zero] = uu * np.sqrt(1 + (c / uu) ** 2)
    return out


def _sqrt_close(w, c):
    # branch of sqrt(w^2 - c^2) mapping H onto H minus [0, ic]
    out = np.empty_like(w)
    onslit = (w.imag == 0) & (np.abs(w.real) < c)
    ww = w[~onslit]
    out[~onslit] = ww * np.sqrt(1 - (c / ww) ** 2)
    out[onslit] = 1j * np.sqrt(c * c - w.real[onslit] ** 2)
    return out


def _slit_fwd(z, b, c):
    """One slit map, normalized to fix 0 and infinity (finite z only).

    With u = b z / (b - z) and S = sqrt(u^2 + c^2), infinity goes to
    s = -b sqrt(1 + c^2/b^2) and the map is s S / (s - S).  The difference
    s - S is evaluated in factored form, so points far from the slit keep
    their relative precision.
    """
    if not np.isfinite(b):
        return _sqrt_open(z, c)
    s = -b * np.sqrt(1 + (c / b) ** 2)
    out = np.empty_like(z)
    pole = z == b
    out[pole] = -s
    zz = z[~pole]
    u = b * zz / (b - zz)
    S = _sqrt_open(u, c)
    up = b * b / (b - zz)  # u + b
    um = b * (2 * zz - b) / (b - zz)  # u - b
    near = np.abs(s + S) >= abs(s)
    diff = np.where(near, -(um * up) / np.where(near, s + S, 1), s - S)
    out[~pole] = s * S / diff
    return out


def _slit_inv(w, b, c):
    """Inverse of ``_slit_fwd`` (finite w only)."""
    if not np.isfinite(b):
        return _sqrt_close(w, c)
    s = -b * np.sqrt(1 + (c / b) ** 2)
    out = np.empty_like(w)
    den = s + w
    pole = den == 0
    out[pole] = b
    ww, den = w[~pole], den[~pole]
    S = s * ww / den
    dS = -s * s / den  # S - s
    u = _sqrt_close(S, c)
    um = u - b
    near = np.abs(u + b) <= 0.5 * abs(b)
    with np.errstate(divide="ignore", invalid="ignore"):
        up = np.where(near, dS * (S + s) / np.where(um == 0, 1, um), u + b)
    out[~pole] = b * u / up
    return out


def _real_mobius(w, winf, a, b, c, d):
    """(a w + b) / (c w + d) for real coefficients, tracking infinity by mask."""
    out = np.empty_like(w)
    fin = ~winf
    num = a * w[fin] + b
    den = c * w[fin] + d
    hit = den == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        out[fin] = np.where(hit, 0, num / np.where(hit, 1, den))
    newinf = np.zeros_like(winf)
    newinf[np.nonzero(fin)[0][hit]] = True
    if c != 0:
        out[winf] = a / c
    else:
        newinf |= winf
    return out, newinf


def _first_fwd(z, z0, z1):
    # opens the segment [z0, z1]: z0 -> inf, z1 -> 0, inf -> i
    return 1j * np.sqrt(1 + (z0 - z1) / (z - z0))


def _first_inv(w, z0, z1):
    # 1 + w^2 in factored form keeps far points (w near i) accurate
    return z0 + (z1 - z0) / ((w - 1j) * (w + 1j))


def _step_forward(w, winf, b, c, g, d):
    fin = ~winf
    w[fin] = _slit_fwd(w[fin], b, c)
    return _real_mobius(w, winf, 1.0, 0.0, g, d)


def zipper_forward(z, z0, z1, bs, cs, gs, ds):
    """Push points through the slit maps.  ``inf`` in and out is allowed."""
    z = np.array(z, dtype=np.complex128, copy=True).reshape(-1)
    inf = ~np.isfinite(z)
    at_base = z == z0
    w = np.zeros_like(z)
    ok = ~inf & ~at_base
    w[ok] = _first_fwd(z[ok], z0, z1)
    w[inf] = 1j
    winf = at_base.copy()
    for k in range(len(bs)):
        w, winf = _step_forward(w, winf, bs[k], cs[k], gs[k], ds[k])
    w[winf] = np.inf
    return w


def zipper_inverse(w, z0, z1, bs, cs, gs, ds):
    """Pull points of the closed upper half-plane back to the slit complement."""
    w = np.array(w, dtype=np.complex128, copy=True).reshape(-1)
    winf = ~np.isfinite(w)
    w[winf] = 0
    for k in range(len(bs) - 1, -1, -1):
        # undo the renormalization w -> w / (g w + d)
        w, winf = _real_mobius(w, winf, ds[k], 0.0, -gs[k], 1.0)
        fin = ~winf
        w[fin] = _slit_inv(w[fin], bs[k], cs[k])
    out = np.empty_like(w)
    inf_pt = ~winf & ((w == 1j) | (w == -1j))
    fin = ~winf & ~inf_pt
    out[fin] = _first_inv(w[fin], z0, z1)
    out[inf_pt] = np.inf
    out[winf] = z0
    return out


def unzip(nodes, ref=np.inf):
    """Build slit-map parameters for the polyline ``nodes``.

    Returns ``(bs, cs, gs, ds, base_image, bad_index)``.  Each step is the
    slit map with parameters ``b, c`` followed by ``w -> w / (g w + d)``,
    which keeps the image of the reference point ``ref`` at ``i``.  ``bad_index`` is -1 on
    success, otherwise the first node that left the upper half-plane.
    """
    nodes = np.asarray(nodes, np.complex128)
    n = len(nodes) - 1
    z0, z1 = nodes[0], nodes[1]
    rest = _first_fwd(nodes[2:], z0, z1)
    m = max(n - 1, 0)
    bs, cs, gs, ds = np.empty(m), np.empty(m), np.empty(m), np.empty(m)
    ref = complex(ref)
    r0 = _first_fwd(np.array([ref]), z0, z1)[0] if np.isfinite(ref) else 1j
    # base image and reference image are tracked with the rest
    track = np.concatenate([rest, [0j, r0]])
    tinf = np.zeros(len(track), bool)
    tinf[-2] = True
    for k in range(m):
        a = track[k]
        if not a.imag > 0:
            return bs[:k], cs[:k], gs[:k], ds[:k], np.inf, k + 2
        m2 = a.real * a.real + a.imag * a.imag
        c = m2 / a.imag
        b = m2 / a.real if abs(a.real) > 1e-300 else np.inf
        sub = slice(k + 1, None)
        t, ti = track[sub].copy(), tinf[sub].copy()
        fin = ~ti
        t[fin] = _slit_fwd(t[fin], b, c)
        r = t[-1]
        g = -r.real / r.imag
        d = abs(r) ** 2 / r.imag
        t, ti = _real_mobius(t, ti, 1.0, 0.0, g, d)
        t[-1] = 1j
        track[sub], tinf[sub] = t, ti
        bs[k], cs[k], gs[k], ds[k] = b, c, g, d
    base = np.inf if tinf[-2] else float(track[-2].real)
    return bs, cs, gs, ds, base, -1


def point_segment_min(P, A, B):
    """For each row of ``P`` the distance to the nearest segment ``[A_j, B_j]``."""
    P = np.asarray(P, float)
    out = np.empty(len(P))
    AB = B - A
    L2 = np.einsum("ij,ij->i", AB, AB)
    safe = np.where(L2 > 0, L2, 1.0)
    step = 512
    for s in range(0, len(P), step):
        p = P[s : s + step]
        AP = p[:, None, :] - A[None, :, :]
        t = np.einsum("ijk,jk->ij", AP, AB) / safe
        t = np.clip(np.where(L2 > 0, t, 0.0), 0.0, 1.0)
        d = AP - t[..., None] * AB[None, :, :]
        out[s : s + step] = np.sqrt(np.min(np.einsum("ijk,ijk->ij", d, d), axis=1))
    return out
