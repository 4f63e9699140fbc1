"""Compare the numba and pure-numpy kernel backends.

Times each kernel on representative inputs (after a warm-up call so JIT
compilation is excluded), then one end-to-end solve+verify per backend in a
fresh interpreter, since the backend is fixed at import time by
CANONICAL_ARCS_BACKEND.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--skip-e2e]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from canonical_arcs import kernels

E2E = """
import time
from canonical_arcs import kernels
from canonical_arcs.oracle import verify_configuration
from canonical_arcs.solver import build_configuration
t = time.perf_counter()
c = build_configuration((float('inf'), 1, 0, -1), (1, 2))
r = verify_configuration(c)
print(kernels.BACKEND, time.perf_counter() - t, r.passed)
"""


def _inputs(rng):
    n = np.arange(8)
    q = np.exp(1j * np.pi * (0.1 + 1.2j))
    t = np.linspace(0, np.pi, 1500)
    arc = np.exp(1j * t) * (1 + 0.2 * np.sin(3 * t))
    P = rng.normal(size=(2000, 3))
    A = rng.normal(size=(2000, 3))
    probes = rng.normal(size=5000) + 2j
    params = kernels.numpy_backend.unzip(arc)[:4]
    return {
        "carlson_rf (10k)": lambda m: m.carlson_rf(
            *(np.abs(rng.normal(size=10_000)) + 1j * rng.normal(size=10_000) for _ in range(3)), 1e-16
        ),
        "theta_all (10k)": lambda m: m.theta_all(
            rng.normal(size=10_000) + 0.3j * rng.normal(size=10_000), q ** ((n + 0.5) ** 2), q ** (n**2)
        ),
        "unzip (1500 nodes)": lambda m: m.unzip(arc, 0.1 + 0.1j),
        "zipper_forward (1500 x 5k)": lambda m: m.zipper_forward(probes, arc[0], arc[1], *params),
        "point_segment_min (2k x 2k)": lambda m: m.point_segment_min(P, A, A + 0.01),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args()

    backends = kernels.backends()
    if "numba" not in backends:
        sys.exit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    cases = _inputs(rng)
    print(f"{'kernel':30s} {'numpy [s]':>11s} {'numba [s]':>11s} {'speedup':>8s}")
    for name, case in cases.items():
        case(backends["numba"])  # compile
        tn = best_of(lambda: case(backends["numpy"]), args.repeat)
        tj = best_of(lambda: case(backends["numba"]), args.repeat)
        print(f"{name:30s} {tn:11.4f} {tj:11.4f} {tn / tj:8.1f}x")

    if not args.skip_e2e:
        print("\nend to end: solve + verify, lemniscatic points, class 1/2")
        for backend in ("numpy", "numba"):
            env = dict(os.environ, CANONICAL_ARCS_BACKEND=backend)
            r = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
            name, secs, passed = r.stdout.split()
            print(f"  {name:6s} {float(secs):8.2f} s  passed={passed}")


if __name__ == "__main__":
    main()
