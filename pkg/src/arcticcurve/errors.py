"""Exception hierarchy."""


class ArcticError(Exception):
    """Base class for all errors raised by this package."""


class ParameterDomainError(ArcticError, ValueError):
    """Parameters fall outside the domain of the requested operation."""


class FerroelectricUnsupportedError(ParameterDomainError):
    """Anisotropy in the ferroelectric regime (Delta >= 1)."""


class BoundaryRegimeError(ParameterDomainError):
    """Anisotropy exactly at the regime boundary Delta = -1."""


class DegenerateWeightError(ParameterDomainError):
    """A Boltzmann weight vanishes (domain boundary)."""


class PoleError(ArcticError, ZeroDivisionError):
    """Evaluation at (or numerically on top of) a pole.

    The offending location is kept in :attr:`location`.
    """

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class BranchError(ArcticError, ValueError):
    """Argument outside the real branch of a multivalued map."""


class DegeneratePointError(ArcticError, ArithmeticError):
    """The linear system defining a curve point is singular."""


class PrecisionExhaustedError(ArcticError, ArithmeticError):
    """Adaptive precision escalation hit its cap without converging."""


class CapacityError(ArcticError, ValueError):
    """Lattice size above the brute-force enumeration cap."""


class ConsistencyError(ArcticError, ArithmeticError):
    """Two independent evaluations of the same quantity disagree."""
