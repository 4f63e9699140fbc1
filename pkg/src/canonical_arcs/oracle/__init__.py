"""Independent checks of canonical configurations.

The geodesic check sees only polylines and endpoints; the involution check
uses the lattice of the configuration but never the arc construction.
"""

from ..polyline import chordal_hausdorff
from .involution import InvolutionResiduals, involution_residuals
from .verify import VerificationReport, default_tolerance, verify_configuration
from .zipper import (
    DiscreteRiemannMap,
    closed_form_slit_map,
    geodesic_in_complement,
    hyperbolic_geodesic_hplane,
    unzip_arc,
)

__all__ = [
    "DiscreteRiemannMap",
    "InvolutionResiduals",
    "VerificationReport",
    "chordal_hausdorff",
    "closed_form_slit_map",
    "default_tolerance",
    "geodesic_in_complement",
    "hyperbolic_geodesic_hplane",
    "involution_residuals",
    "unzip_arc",
    "verify_configuration",
]
