"""Exception hierarchy shared by every module in the package."""


class InductionError(Exception):
    """Base class for computation errors raised by this package."""


class DomainError(InductionError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NumericError(InductionError, ArithmeticError):
    """An iterative method failed to converge.

    ``bracket`` holds the last ``(lo, hi)`` interval when one is known.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class BracketError(NumericError):
    """The function does not change sign over the supplied interval."""


class UndefinedEstimateError(InductionError):
    """An estimate was requested from data that carry no information."""


class ConditioningOnNullError(InductionError):
    """Bayes' rule was applied to evidence with zero marginal probability."""


class NormalizationError(InductionError):
    """A normalizing constant was requested for an improper measure."""


class DegenerateDensityError(InductionError):
    """The confidence 'density' collapses to a point mass at a boundary."""


class IndeterminateRatioError(InductionError):
    """Both likelihoods in a ratio are zero."""


class IncompleteInputError(InductionError):
    """Required inputs (e.g. priors) were not supplied."""


class InconsistentInputError(InductionError, ValueError):
    """Inputs violate a probabilistic constraint they must jointly satisfy."""


class NoEvidenceError(InductionError):
    """An inductive quantity was requested from an empty sample."""
