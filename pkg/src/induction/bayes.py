"""Posterior, predictive and confirmation computations for the success rate.

Priors are :class:`~induction.bernoulli.ThetaDistribution` values.  An atom at
``theta = 1`` sees likelihood 1 for a success and 0 for a failure, so a single
failure removes it; the atom at ``theta = 0`` behaves symmetrically.  Improper
continuous priors are updated formally and, when the updated shape still has a
zero parameter, their whole mass is moved to the matching boundary atom (the
limit of Beta(a, eps) as eps -> 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bernoulli import BernoulliData, GeneralizedBeta, ThetaDistribution
from .errors import ConditioningOnNullError, DomainError, NormalizationError
from .numerics import log_beta

# Sunrise count from 6000 years of daily sunrises.
SUNRISE_DAYS = 6000 * 365

PRIORS = {
    "uniform": lambda: ThetaDistribution.beta(1.0, 1.0),
    "jeffreys-beta": lambda: ThetaDistribution.beta(0.5, 0.5),
    "jeffreys-mixture": lambda: jeffreys_mixture(),
    "kant": lambda: ThetaDistribution.point(1),
}


def jeffreys_mixture(mass: float = 0.5) -> ThetaDistribution:
    """Point mass ``mass`` on ``theta = 1`` plus a uniform remainder."""
    return ThetaDistribution.mixture(atom1=mass, cont=GeneralizedBeta(1.0, 1.0))


def named_prior(name: str) -> ThetaDistribution:
    """Look up a prior by name; ``beta:a,b`` gives an arbitrary Beta prior."""
    if name.startswith("beta:"):
        try:
            a, b = (float(v) for v in name[5:].split(","))
        except ValueError:
            raise DomainError(f"expected 'beta:a,b', got {name!r}") from None
        return ThetaDistribution.beta(a, b)
    try:
        return PRIORS[name]()
    except KeyError:
        raise DomainError(f"unknown prior {name!r}; choose from {sorted(PRIORS)} or beta:a,b") from None


@dataclass(frozen=True)
class PosteriorReport:
    posterior: ThetaDistribution
    prob_G: float
    predictive_next: float


def posterior(prior: ThetaDistribution, data: BernoulliData) -> ThetaDistribution:
    """Condition ``prior`` on ``data`` by Bayes' rule."""
    shape = prior.cont.update(data)
    if not prior.proper:
        return _posterior_improper(prior, data, shape)

    # Marginal likelihood of each component, in logs.
    logs = []
    if prior.atom0 > 0 and data.x == 0:
        logs.append(("atom0", math.log(prior.atom0)))
    if prior.atom1 > 0 and data.all_successes:
        logs.append(("atom1", math.log(prior.atom1)))
    if prior.cont_weight > 0:
        logs.append(
            ("cont", math.log(prior.cont_weight) + log_beta(shape.a, shape.b) - prior.cont.log_norm())
        )
    if not logs:
        raise ConditioningOnNullError(
            f"data with n={data.n}, x={data.x} have zero probability under the prior"
        )
    top = max(v for _, v in logs)
    scaled = {k: math.exp(v - top) for k, v in logs}
    z = sum(scaled.values())
    w = {k: v / z for k, v in scaled.items()}
    return ThetaDistribution(
        atom0=w.get("atom0", 0.0),
        atom1=w.get("atom1", 0.0),
        cont=shape,
        cont_weight=w.get("cont", 0.0),
        kolmogorov=prior.kolmogorov,
    )


def _posterior_improper(prior, data, shape):
    if prior.atom0 > 0 or prior.atom1 > 0:
        raise NormalizationError(
            "atoms cannot be weighed against an improper continuous part; "
            "their relative mass is undefined"
        )
    if shape.proper:
        return ThetaDistribution(cont=shape, cont_weight=1.0, kolmogorov=False)
    if shape.a > 0:
        return ThetaDistribution(atom1=1.0, cont=shape, cont_weight=0.0, kolmogorov=False)
    if shape.b > 0:
        return ThetaDistribution(atom0=1.0, cont=shape, cont_weight=0.0, kolmogorov=False)
    raise NormalizationError(f"posterior Beta({shape.a}, {shape.b}) has no boundary to absorb its mass")


def prob_general(post: ThetaDistribution) -> float:
    """Probability of the general proposition ``theta = 1``."""
    return post.atom1


def predictive_run(post: ThetaDistribution, m: int) -> float:
    """Probability that the next ``m`` trials all succeed, ``E[theta^m]``."""
    if int(m) != m or m < 1:
        raise DomainError(f"run length must be a positive integer, got {m}")
    if not post.proper:
        raise NormalizationError("predictive probabilities need a proper posterior")
    value = post.atom1
    if post.cont_weight > 0:
        value += post.cont_weight * post.cont.moment(int(m))
    return min(1.0, value)


def predictive_success(post: ThetaDistribution) -> float:
    """Probability that the next trial succeeds, ``E[theta]``."""
    return predictive_run(post, 1)


def carnap_confirmation(prior_prob: float, posterior_prob: float) -> float:
    """Increase in probability the evidence brings: ``P(H|D) - P(H)``."""
    for name, p in (("prior_prob", prior_prob), ("posterior_prob", posterior_prob)):
        if not 0.0 <= p <= 1.0:
            raise DomainError(f"{name} must lie in [0, 1], got {p}")
    return posterior_prob - prior_prob


def report(prior: ThetaDistribution, data: BernoulliData) -> PosteriorReport:
    post = posterior(prior, data)
    return PosteriorReport(
        posterior=post,
        prob_G=prob_general(post),
        predictive_next=predictive_success(post),
    )
