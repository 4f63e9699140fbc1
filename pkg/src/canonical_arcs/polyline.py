"""Sampled arcs on the sphere and chordal distances between them."""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .sphere import as_points, to_sphere


@dataclass(eq=False)
class Polyline:
    """Ordered samples of an arc; ``INF`` may appear as an explicit sample."""

    points: np.ndarray
    closed: bool = False

    def __post_init__(self):
        self.points = as_points(self.points)

    def __len__(self):
        return len(self.points)

    @property
    def start(self):
        return complex(self.points[0])

    @property
    def end(self):
        return complex(self.points[-1])

    def reversed(self):
        return Polyline(self.points[::-1].copy(), self.closed)

    def gaps(self):
        """Chordal lengths of consecutive segments."""
        P = to_sphere(self.points)
        return np.linalg.norm(np.diff(P, axis=0), axis=1)

    def chordal_length(self):
        return float(self.gaps().sum())


def _segments(P):
    if len(P) == 1:
        return P, P
    return P[:-1], P[1:]


def directed_distances(a, b):
    """Chordal distance from each sample of ``a`` to the polyline ``b``."""
    Pa = to_sphere(a.points)
    A, B = _segments(to_sphere(b.points))
    return kernels.point_segment_min(Pa, A, B)


def chordal_hausdorff(a, b):
    """Symmetric Hausdorff distance between two polylines in the chordal metric.

    Samples of each polyline are measured against the chords of the other,
    so a coarse polyline is not penalized for where its samples happen to fall.
    """
    return float(max(directed_distances(a, b).max(), directed_distances(b, a).max()))


def min_distance(a, b):
    """Smallest chordal distance between the two polylines."""
    return float(min(directed_distances(a, b).min(), directed_distances(b, a).min()))


def _cross(u, v):
    return u.real * v.imag - u.imag * v.real


def first_crossing(nodes, chunk=1 << 20):
    """Index of the first segment of the planar polyline ``nodes`` that meets
    a non-adjacent segment or folds back onto its successor; -1 if simple.

    Candidate pairs come from a sweep over bounding-box intervals along the
    longer axis, so typical arcs cost far less than all pairs.
    """
    P = np.asarray(nodes, np.complex128)
    A, B = P[:-1], P[1:]
    m = len(A)
    D = B - A
    folds = np.nonzero((_cross(D[:-1], D[1:]) == 0) & ((D[:-1] * D[1:].conj()).real < 0))[0]
    worst = int(folds[0]) if len(folds) else m
    if m < 3:
        return worst if worst < m else -1
    swap = np.ptp(P.imag) > np.ptp(P.real)
    x = lambda z: z.imag if swap else z.real
    y = lambda z: z.real if swap else z.imag
    lo, hi = np.minimum(x(A), x(B)), np.maximum(x(A), x(B))
    ylo, yhi = np.minimum(y(A), y(B)), np.maximum(y(A), y(B))
    order = np.argsort(lo, kind="stable")
    stop = np.searchsorted(lo[order], hi[order], side="right")
    start = np.arange(1, m + 1)
    counts = np.maximum(stop - start, 0)
    bounds = np.concatenate([[0], np.cumsum(counts)])
    k0 = 0
    while k0 < m:
        k1 = int(np.searchsorted(bounds, bounds[k0] + chunk, side="right")) - 1
        k1 = min(max(k1, k0 + 1), m)
        c = counts[k0:k1]
        ks = np.repeat(np.arange(k0, k1), c)
        offs = np.arange(len(ks)) - np.repeat(bounds[k0:k1] - bounds[k0], c)
        i, j = order[ks], order[start[ks] + offs]
        keep = (np.abs(i - j) > 1) & (ylo[i] <= yhi[j]) & (ylo[j] <= yhi[i])
        i, j = i[keep], j[keep]
        o1 = _cross(D[i], A[j] - A[i])
        o2 = _cross(D[i], B[j] - A[i])
        o3 = _cross(D[j], A[i] - A[j])
        o4 = _cross(D[j], B[i] - A[j])
        hit = (o1 * o2 <= 0) & (o3 * o4 <= 0)
        if hit.any():
            worst = min(worst, int(np.minimum(i[hit], j[hit]).min()))
        k0 = k1
    return worst if worst < m else -1
