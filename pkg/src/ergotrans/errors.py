"""Exception types shared across the package."""


class ErgotransError(Exception):
    """Base class for all package-specific errors."""


class DegenerateDataError(ErgotransError):
    """Input data has no usable variation (constant or near-constant)."""


class DegenerateLikelihoodError(DegenerateDataError):
    """The likelihood is undefined at a particular power parameter."""

    def __init__(self, lam, message=None):
        self.lam = lam
        super().__init__(message or f"degenerate likelihood at lambda={lam}")


class EstimationError(ErgotransError):
    """Estimation failed (e.g. the likelihood is degenerate everywhere)."""


class ConditioningError(ErgotransError):
    """A matrix factorization failed due to ill conditioning."""
