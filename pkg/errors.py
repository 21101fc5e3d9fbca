"""
GenOsc Error Hierarchy
All library errors derive from ValueError so plain ``except ValueError`` still works
"""


class GenOscError(ValueError):
    """Base class for every error raised by the library"""


class FamilyError(GenOscError):
    """Unknown polynomial family, bad family parameters or missing measure"""


class DomainError(GenOscError):
    """Argument lies outside the domain of the operation"""


class ConvergenceError(GenOscError):
    """A series or quadrature did not converge within its cap"""


class SeriesOverflowError(ConvergenceError):
    """Partial sums left the floating-point range"""


class InsufficientDataError(GenOscError):
    """Moment table too short, truncation too small, or bad normalization"""


class VerificationError(GenOscError):
    """One or more asserted verification checks failed"""

    def __init__(self, message: str, reports=None):
        super().__init__(message)
        self.reports = list(reports or [])
