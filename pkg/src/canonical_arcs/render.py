"""SVG 1.1 figures of a configuration in the plane chart.

The viewport is a fixed square around the finite marked points.  Arc runs
are split at explicit ``inf`` samples and clipped to the square; where a run
heads to infinity an open marker is drawn on the boundary.
"""

from xml.sax.saxutils import escape

import numpy as np

ARC_COLOURS = ("#1f5fbf", "#c0392b")
MARGIN = 1.25


def _viewport(config):
    pts = np.array([p for p in config.points if np.isfinite(p)], np.complex128)
    if len(pts) == 0:
        pts = np.array([0j])
    lo = complex(pts.real.min(), pts.imag.min())
    hi = complex(pts.real.max(), pts.imag.max())
    centre = (lo + hi) / 2
    half = MARGIN * max(float(np.max(np.abs(pts - centre))), 0.5)
    return centre, half


def _clip(p, q, xmin, xmax, ymin, ymax):
    """Liang-Barsky clip of segment p-q; None when it misses the box."""
    d = q - p
    t0, t1 = 0.0, 1.0
    for den, num in (
        (-d.real, p.real - xmin),
        (d.real, xmax - p.real),
        (-d.imag, p.imag - ymin),
        (d.imag, ymax - p.imag),
    ):
        if den == 0:
            if num < 0:
                return None
            continue
        t = num / den
        if den < 0:
            t0 = max(t0, t)
        else:
            t1 = min(t1, t)
        if t0 > t1:
            return None
    return p + t0 * d, p + t1 * d


def _runs(points):
    """Split at non-finite samples; report whether each run touches infinity."""
    fin = np.isfinite(points)
    runs = []
    start = None
    for i, f in enumerate(fin):
        if f and start is None:
            start = i
        if not f and start is not None:
            runs.append((start, i))
            start = None
    if start is not None:
        runs.append((start, len(points)))
    out = []
    for a, b in runs:
        out.append((points[a:b], a > 0, b < len(points)))
    return out


def _clipped_paths(run, box):
    paths = []
    cur = []
    for p, q in zip(run[:-1], run[1:]):
        seg = _clip(p, q, *box)
        if seg is None:
            if cur:
                paths.append(cur)
                cur = []
            continue
        a, b = seg
        if not cur or cur[-1] != a:
            if cur:
                paths.append(cur)
            cur = [a]
        cur.append(b)
    if cur:
        paths.append(cur)
    return paths


def _boundary_exit(run, towards_end, box):
    """Where the run leaves the box on its way to infinity (None if it never does)."""
    seq = run if towards_end else run[::-1]
    xmin, xmax, ymin, ymax = box
    inside = (seq.real >= xmin) & (seq.real <= xmax) & (seq.imag >= ymin) & (seq.imag <= ymax)
    idx = np.nonzero(inside)[0]
    if len(idx) == 0:
        return None
    k = idx[-1]
    if k == len(seq) - 1:
        return complex(seq[k])
    seg = _clip(complex(seq[k]), complex(seq[k + 1]), *box)
    return None if seg is None else seg[1]


def render_svg(config, width=600):
    """SVG document (string) showing both arcs and the four marked points."""
    width = int(width)
    centre, half = _viewport(config)
    box = (centre.real - half, centre.real + half, centre.imag - half, centre.imag + half)
    scale = width / (2 * half)

    def xy(z):
        return (z.real - box[0]) * scale, (box[3] - z.imag) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{width}" viewBox="0 0 {width} {width}">',
        f'<rect x="0" y="0" width="{width}" height="{width}" fill="white" stroke="#999"/>',
    ]
    stroke = max(1.0, width / 400)
    for k, arc in enumerate((config.arc0, config.arc1)):
        colour = ARC_COLOURS[k]
        for run, after_inf, before_inf in _runs(arc.points):
            for path in _clipped_paths(run, box):
                d = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(xy, path))
                out.append(
                    f'<polyline points="{d}" fill="none" stroke="{colour}" '
                    f'stroke-width="{stroke:.2f}"/>'
                )
            for flag, towards_end in ((before_inf, True), (after_inf, False)):
                if not flag:
                    continue
                e = _boundary_exit(run, towards_end, box)
                if e is not None:
                    x, y = xy(e)
                    out.append(
                        f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{3 * stroke:.2f}" fill="white" '
                        f'stroke="{colour}" stroke-width="{stroke:.2f}"/>'
                    )
    for i, p in enumerate(config.points):
        if np.isfinite(p):
            x, y = xy(complex(p))
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{3 * stroke:.2f}" fill="black"/>')
            out.append(
                f'<text x="{x + 5 * stroke:.2f}" y="{y - 5 * stroke:.2f}" font-size="{6 * stroke:.1f}" '
                f'font-family="sans-serif">a{i}</text>'
            )
        else:
            out.append(
                f'<text x="{5 * stroke:.2f}" y="{(12 + 8 * i) * stroke:.2f}" font-size="{6 * stroke:.1f}" '
                f'font-family="sans-serif">{escape(f"a{i} = ∞")}</text>'
            )
    out.append(
        f'<text x="{5 * stroke:.2f}" y="{width - 5 * stroke:.2f}" font-size="{6 * stroke:.1f}" '
        f'font-family="sans-serif">{escape(f"class {config.cls}, pairing {config.pairing}")}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
