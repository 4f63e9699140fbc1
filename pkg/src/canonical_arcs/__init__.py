"""Canonical arc pairs for four points on the Riemann sphere."""

from .errors import ArcsError, InvalidInput, NumericalFailure
from .isotopy import IsotopyClass, Pairing, canonical_class, class_pairing, enumerate_classes
from .solver import CanonicalConfiguration, SamplingBudget, build_configuration
from .sphere import INF

__version__ = "0.1.0"

__all__ = [
    "INF",
    "ArcsError",
    "CanonicalConfiguration",
    "InvalidInput",
    "IsotopyClass",
    "NumericalFailure",
    "Pairing",
    "SamplingBudget",
    "build_configuration",
    "canonical_class",
    "class_pairing",
    "enumerate_classes",
]
