"""Exception hierarchy.

Two families matter to callers: ``InvalidInput`` (bad user data, CLI exit 2)
and ``NumericalFailure`` (an algorithm could not reach its accuracy target,
CLI exit 3).
"""


class ArcsError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(ArcsError, ValueError):
    pass


class NumericalFailure(ArcsError, ArithmeticError):
    pass


class DuplicatePoints(InvalidInput):
    pass


class NotPrimitive(InvalidInput):
    pass


class PairingMismatch(InvalidInput):
    pass


class InvalidArguments(InvalidInput):
    pass


class EndpointOnSlit(InvalidInput):
    pass


class EndpointMismatch(InvalidInput):
    pass


class DegenerateArc(InvalidInput):
    pass


class SelfIntersection(InvalidInput):
    pass


class RootsTooClose(NumericalFailure):
    pass


class NonConvergence(NumericalFailure):
    pass


class LabelingFailure(NumericalFailure):
    pass


class InversionFailure(NumericalFailure):
    pass


class BudgetExceeded(NumericalFailure):
    pass
