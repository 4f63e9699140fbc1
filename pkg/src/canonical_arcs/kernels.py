"""Backend switch for the numeric inner loops.

Set ``CANONICAL_ARCS_BACKEND=numpy`` to bypass numba (useful for debugging
and on platforms without it).  Both backends expose the same functions.
"""

import os

from . import _kernels_numpy as numpy_backend

try:
    from . import _kernels_numba as numba_backend
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_backend = None

_requested = os.environ.get("CANONICAL_ARCS_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"CANONICAL_ARCS_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numba" and numba_backend is not None:
    _impl = numba_backend
    BACKEND = "numba"
else:
    _impl = numpy_backend
    BACKEND = "numpy"

carlson_rf = _impl.carlson_rf
theta_all = _impl.theta_all
zipper_forward = _impl.zipper_forward
zipper_inverse = _impl.zipper_inverse
unzip = _impl.unzip
point_segment_min = _impl.point_segment_min


def backends():
    """Mapping of available backend name -> module (for tests and benchmarks)."""
    out = {"numpy": numpy_backend}
    if numba_backend is not None:
        out["numba"] = numba_backend
    return out
