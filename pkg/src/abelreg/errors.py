"""Exception hierarchy shared across the package."""


class AlgebraDataError(Exception):
    """Base class for invalid input data (exit status 2 territory)."""


class NonIntegralExponent(AlgebraDataError):
    pass


class TypeConstraintViolation(AlgebraDataError):
    pass


class InvalidInvolution(AlgebraDataError):
    pass


class NonPositiveInvolution(AlgebraDataError):
    pass


class ContextMismatch(AlgebraDataError):
    pass


class ComputationError(Exception):
    """Base class for failures detected mid-computation (exit status 3)."""


class SquareExtractionFailed(ComputationError):
    pass


class NotAPerfectSquare(ComputationError):
    pass


class NonRealRoots(ComputationError):
    pass


class ScanWindowExhausted(ComputationError):
    pass
