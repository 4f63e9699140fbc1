"""End-to-end check of a configuration against the slit-map oracle."""

from dataclasses import asdict, dataclass

from ..errors import EndpointMismatch, InvalidArguments
from ..polyline import chordal_hausdorff, min_distance
from ..sphere import chordal
from .involution import involution_residuals
from .zipper import geodesic_in_complement

DEFAULT_RESOLUTION = 512
BASE_TOL = 5e-3
# tolerance floor as a multiple of the sampling step h
TOL_PER_H = 5.0
FIX_TOL = 1e-8
IDEM_TOL = 1e-6
ENDPOINT_TOL = 1e-12


@dataclass(frozen=True)
class VerificationReport:
    hausdorff: tuple
    arc_passed: tuple
    resolution: int
    tol: float
    below_floor: bool
    fix_residual: float
    idem_residual: float
    disjointness_margin: float

    @property
    def involution_passed(self):
        return self.fix_residual < FIX_TOL and self.idem_residual < IDEM_TOL

    @property
    def passed(self):
        return all(self.arc_passed) and self.involution_passed

    def as_dict(self):
        d = asdict(self)
        d["hausdorff"] = list(self.hausdorff)
        d["arc_passed"] = list(self.arc_passed)
        d["involution_passed"] = self.involution_passed
        d["passed"] = self.passed
        return d


def default_tolerance(h):
    return max(BASE_TOL, TOL_PER_H * h)


def _check_endpoints(config):
    for k, arc in enumerate((config.arc0, config.arc1)):
        i, j = config.pairing.pairs[k]
        for end, idx in ((arc.start, i), (arc.end, j)):
            d = chordal(end, config.points[idx])
            if d > ENDPOINT_TOL:
                raise EndpointMismatch(f"arc {k} ends at {end}, not at point {idx} (distance {d:.2e})")


def verify_configuration(config, tol=None, resolution=DEFAULT_RESOLUTION):
    """Check that each arc is the hyperbolic geodesic in the complement of the other.

    The default tolerance is ``max(5e-3, 5 h)`` for the sampling step h of
    the configuration.  A smaller explicit ``tol`` is honoured but flagged
    ``below_floor``, since the arcs are only resolved to about h.
    """
    h = config.budget.h
    floor = default_tolerance(h)
    tol = floor if tol is None else float(tol)
    if not tol > 0:
        raise InvalidArguments(f"tolerance must be positive, got {tol}")
    _check_endpoints(config)
    arcs = (config.arc0, config.arc1)
    dists = []
    for k in (0, 1):
        i, j = config.pairing.pairs[k]
        geo = geodesic_in_complement(arcs[1 - k], config.points[i], config.points[j], resolution)
        dists.append(chordal_hausdorff(geo, arcs[k]))
    fix, idem = involution_residuals(config)
    return VerificationReport(
        hausdorff=tuple(dists),
        arc_passed=tuple(d < tol for d in dists),
        resolution=int(resolution),
        tol=tol,
        below_floor=tol < TOL_PER_H * h,
        fix_residual=fix,
        idem_residual=idem,
        disjointness_margin=min_distance(arcs[0], arcs[1]),
    )
