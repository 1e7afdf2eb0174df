"""Confidence distributions for a binomial success rate.

The right-side P-value function ``C(x, theta) = P(X >= x | theta)`` increases
in ``theta`` and so behaves like a CDF; its derivative is the confidence
density, Beta(x, n-x+1).  The left-side mirror ``P(X > x | theta)`` gives
Beta(x+1, n-x).  Dividing either density by the likelihood leaves an improper
"induced prior", Beta(0, 1) or Beta(1, 0), under which the confidence density
is an ordinary Bayes posterior.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

import numpy as np

from . import bayes
from .bernoulli import BernoulliData, GeneralizedBeta, ThetaDistribution, likelihood, mle
from .errors import DegenerateDensityError, DomainError, NoEvidenceError
from .numerics import DEFAULT_TOLERANCE, ToleranceConfig, inv_reg_inc_beta, reg_inc_beta


class PValueSide(enum.Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class ConfidenceDensity:
    """Closed-form confidence density for ``data``.

    When the P-value function is constant in ``theta`` (``x = 0`` on the
    right, ``x = n`` on the left) the shape has a zero parameter and the
    confidence sits entirely on a boundary; see :meth:`as_distribution`.
    """

    data: BernoulliData
    side: PValueSide
    shape: GeneralizedBeta

    def __post_init__(self):
        expected = _shape_for(self.data, self.side)
        if self.shape != expected:
            raise DomainError(
                f"{self.side.value}-side shape for n={self.data.n}, x={self.data.x} "
                f"is Beta({expected.a}, {expected.b}), got Beta({self.shape.a}, {self.shape.b})"
            )

    @property
    def degenerate(self) -> bool:
        return not self.shape.proper

    def pdf(self, theta: float) -> float:
        if self.degenerate:
            raise DegenerateDensityError(
                f"{self.side.value}-side confidence for n={self.data.n}, x={self.data.x} "
                "is a boundary point mass, not a density"
            )
        return self.shape.pdf(theta)

    def as_distribution(self) -> ThetaDistribution:
        """The confidence as a measure on [0, 1], boundary atoms included."""
        prior = ThetaDistribution.beta(*_prior_shape(self.side))
        return bayes.posterior(prior, self.data)


@dataclass(frozen=True)
class ConfidenceInterval:
    lo: float
    hi: float
    level: float
    data: BernoulliData

    def __post_init__(self):
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise DomainError(f"invalid interval [{self.lo}, {self.hi}]")
        _check_level(self.level)

    def covers(self, theta: float) -> bool:
        return self.lo <= theta <= self.hi


def _check_level(level):
    if not 0.0 < level < 1.0:
        raise DomainError(f"confidence level must lie in (0, 1), got {level}")


def _prior_shape(side: PValueSide) -> tuple[float, float]:
    return (0.0, 1.0) if side is PValueSide.RIGHT else (1.0, 0.0)


def _shape_for(data: BernoulliData, side: PValueSide) -> GeneralizedBeta:
    if side is PValueSide.RIGHT:
        return GeneralizedBeta(data.x, data.failures + 1)
    return GeneralizedBeta(data.x + 1, data.failures)


def pvalue(data: BernoulliData, theta: float, side: PValueSide = PValueSide.RIGHT) -> float:
    """One-sided P-value function: ``P(X >= x)`` (right) or ``P(X <= x)`` (left)."""
    if not 0.0 <= theta <= 1.0:
        raise DomainError(f"theta must lie in [0, 1], got {theta}")
    side = PValueSide(side)
    if side is PValueSide.RIGHT:
        if data.x == 0:
            return 1.0
        return reg_inc_beta(data.x, data.failures + 1, theta)
    if data.x == data.n:
        return 1.0
    return reg_inc_beta(data.failures, data.x + 1, 1.0 - theta)


def confidence_density(data: BernoulliData, side: PValueSide = PValueSide.RIGHT) -> ConfidenceDensity:
    """Derivative in ``theta`` of the increasing P-value function.

    The right side differentiates ``P(X >= x | theta)``; the left side
    differentiates ``P(X > x | theta) = 1 - P(X <= x | theta)``.
    """
    side = PValueSide(side)
    return ConfidenceDensity(data, side, _shape_for(data, side))


def confidence_interval(
    data: BernoulliData, level: float = 0.95, cfg: ToleranceConfig = DEFAULT_TOLERANCE
) -> ConfidenceInterval:
    """Equal-tailed exact (Clopper-Pearson) interval for the success rate."""
    _check_level(level)
    if data.n < 1:
        raise NoEvidenceError("a confidence interval needs at least one trial")
    tail = (1.0 - level) / 2.0
    lo = 0.0 if data.x == 0 else inv_reg_inc_beta(data.x, data.failures + 1, tail, cfg)
    # P(X <= x | theta) = tail  <=>  I_theta(x+1, n-x) = 1 - tail
    hi = 1.0 if data.x == data.n else inv_reg_inc_beta(data.x + 1, data.failures, 1.0 - tail, cfg)
    ci = ConfidenceInterval(lo, hi, level, data)
    assert ci.covers(mle(data))
    return ci


def coverage_likelihood(ci: ConfidenceInterval) -> float:
    """Extended likelihood that the realized interval covers the truth: its level."""
    return ci.level


def induced_prior(cd: ConfidenceDensity) -> GeneralizedBeta:
    """Shape of ``c(x, theta) / L(theta; x)``."""
    return GeneralizedBeta(cd.shape.a - cd.data.x, cd.shape.b - cd.data.failures)


def update_confidence(cd: ConfidenceDensity, extra: BernoulliData) -> ConfidenceDensity:
    """Combine a confidence density with the likelihood of further data."""
    shape = cd.shape.update(extra)
    return ConfidenceDensity(cd.data + extra, cd.side, shape)


def confidence_of_general(data: BernoulliData, side: PValueSide = PValueSide.LEFT) -> float:
    """Confidence that ``theta = 1`` after ``data``.

    Bayes' rule under the induced prior.  On the left side (Beta(1, 0)) an
    unbroken run of successes leaves all confidence on ``theta = 1``; any
    failure removes it.  The right-side prior Beta(0, 1) never puts
    confidence on ``theta = 1``.
    """
    if data.n == 0:
        raise NoEvidenceError("confidence in the general proposition needs at least one trial")
    return bayes.prob_general(confidence_density(data, side).as_distribution())


def interval_table(n: int, level: float) -> list[ConfidenceInterval]:
    """Intervals for every possible success count out of ``n``."""
    return [confidence_interval(BernoulliData(n, x), level) for x in range(n + 1)]


def simulate_coverage(
    theta0: float, n: int, level: float = 0.95, replicates: int = 10_000, seed: int = 0
) -> float:
    """Fraction of simulated datasets whose interval covers ``theta0``."""
    if not 0.0 <= theta0 <= 1.0:
        raise DomainError(f"theta0 must lie in [0, 1], got {theta0}")
    rng = np.random.default_rng(seed)
    counts = rng.binomial(n, theta0, size=replicates)
    covered = np.array([ci.covers(theta0) for ci in interval_table(n, level)])
    return float(covered[counts].mean())


def exact_coverage(theta0: float, n: int, level: float = 0.95) -> float:
    """Coverage probability computed by summing binomial probabilities."""
    return sum(
        comb(n, x) * likelihood(BernoulliData(n, x), theta0)
        for x, ci in enumerate(interval_table(n, level))
        if ci.covers(theta0)
    )
