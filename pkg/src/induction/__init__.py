"""Likelihood, confidence and Bayesian calculations for inductive inference."""

from .bayes import (
    SUNRISE_DAYS,
    carnap_confirmation,
    jeffreys_mixture,
    named_prior,
    posterior,
    predictive_run,
    predictive_success,
    prob_general,
)
from .bernoulli import BernoulliData, GeneralizedBeta, ThetaDistribution, likelihood, log_likelihood, mle
from .confidence import (
    PValueSide,
    confidence_density,
    confidence_interval,
    confidence_of_general,
    coverage_likelihood,
    induced_prior,
    pvalue,
    update_confidence,
)
from .reasoning import (
    BettingBook,
    CompositeHypothesis,
    Hypothesis,
    SamplingScenario,
    compare_reasoning,
    dutch_book_audit,
    infant_generalization,
    likelihood_ratio,
    mixture_likelihood,
)

__version__ = "0.1.0"
