"""Likelihood-based versus probability-based comparison of hypotheses.

Likelihoods rank hypotheses by how well they predict the data; posterior
probabilities rank them by prior times likelihood.  Only the second respects
logical containment (a conjunction is never more probable than its conjunct),
so the two rankings can disagree.  This module computes both, together with
the Dutch-book argument for additive betting quotients and a two-hypothesis
sampling model for inductive generalization.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DomainError,
    IncompleteInputError,
    InconsistentInputError,
    IndeterminateRatioError,
)

_WEIGHT_TOL = 1e-12
_PRIOR_TOL = 1e-9
COHERENCE_TOL = 1e-12
DEFAULT_THRESHOLD = 0.1


@dataclass(frozen=True)
class Hypothesis:
    id: str
    label: str
    likelihood: float
    prior: float | None = None

    def __post_init__(self):
        if not self.likelihood >= 0 or math.isinf(self.likelihood):
            raise DomainError(f"likelihood of {self.id!r} must be finite and >= 0, got {self.likelihood}")
        if self.prior is not None and not 0.0 <= self.prior <= 1.0:
            raise DomainError(f"prior of {self.id!r} must lie in [0, 1], got {self.prior}")


@dataclass(frozen=True)
class CompositeHypothesis:
    """A disjunction of exclusive hypotheses, ``components[i]`` holding with ``weight``.

    The weights are the conditional probabilities of each component given the
    composite, e.g. the proportion of feminists among bank tellers.
    """

    id: str
    label: str
    components: tuple[tuple[Hypothesis, float], ...]
    prior: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple((h, float(w)) for h, w in self.components))
        if not self.components:
            raise DomainError(f"composite {self.id!r} needs at least one component")
        for h, w in self.components:
            if not 0.0 <= w <= 1.0:
                raise DomainError(f"weight of {h.id!r} in {self.id!r} must lie in [0, 1], got {w}")
        total = math.fsum(w for _, w in self.components)
        if abs(total - 1.0) > _WEIGHT_TOL:
            raise DomainError(f"weights of {self.id!r} must sum to 1, got {total}")
        if self.prior is not None and not 0.0 <= self.prior <= 1.0:
            raise DomainError(f"prior of {self.id!r} must lie in [0, 1], got {self.prior}")

    @property
    def likelihood(self) -> float:
        return mixture_likelihood(self)


AnyHypothesis = Union[Hypothesis, CompositeHypothesis]


def mixture_likelihood(comp: CompositeHypothesis) -> float:
    """``P(Data | H1 or H2 or ...) = sum_i w_i L_i``."""
    values = [h.likelihood for h, _ in comp.components]
    mix = math.fsum(w * h.likelihood for h, w in comp.components)
    # The exact mixture lies between the extremes; keep rounding from leaving them.
    return min(max(values), max(min(values), mix))


def likelihood_ratio(h_a: AnyHypothesis | float, h_b: AnyHypothesis | float) -> float:
    """``L(h_a) / L(h_b)``; ``inf`` when only the denominator vanishes."""
    num = getattr(h_a, "likelihood", h_a)
    den = getattr(h_b, "likelihood", h_b)
    if num < 0 or den < 0:
        raise DomainError(f"likelihoods must be non-negative, got {num} and {den}")
    if den == 0:
        if num == 0:
            raise IndeterminateRatioError("both likelihoods are zero")
        return math.inf
    return num / den


@dataclass(frozen=True)
class Divergence:
    """A pair ranked one way by likelihood and the other way by probability."""

    likelihood_prefers: str
    probability_prefers: str
    nested: bool


@dataclass(frozen=True)
class ComparisonReport:
    """Both rankings of a hypothesis set.

    ``joint`` holds ``P(H and Data) = P(H) P(Data | H)``, proportional to the
    posterior with the common factor ``1 / P(Data)``; it is ``None`` for a
    likelihood-only comparison.
    """

    likelihoods: dict[str, float]
    joint: dict[str, float] | None
    likelihood_order: list[str]
    posterior_order: list[str] | None
    containment: list[tuple[str, str]]
    divergences: list[Divergence] = field(default_factory=list)

    def posterior(self, evidence: float) -> dict[str, float]:
        """Normalized posteriors given the marginal probability of the data."""
        if self.joint is None:
            raise IncompleteInputError("no priors were supplied")
        if not evidence > 0:
            raise DomainError(f"evidence probability must be positive, got {evidence}")
        return {k: v / evidence for k, v in self.joint.items()}


def _resolve_prior(h: AnyHypothesis) -> float | None:
    if isinstance(h, Hypothesis):
        return h.prior
    parts = [c.prior for c, _ in h.components]
    if any(p is None for p in parts):
        return h.prior
    total = math.fsum(parts)
    if h.prior is not None and abs(total - h.prior) > _PRIOR_TOL:
        raise InconsistentInputError(
            f"prior of {h.id!r} ({h.prior}) differs from the sum of its components ({total})"
        )
    if total > 0:
        for c, w in h.components:
            if abs(c.prior / total - w) > _PRIOR_TOL:
                raise InconsistentInputError(
                    f"weight of {c.id!r} in {h.id!r} is {w}, but the priors imply {c.prior / total}"
                )
    return total


def _joint(h: AnyHypothesis, prior: float) -> float:
    if isinstance(h, CompositeHypothesis) and all(c.prior is not None for c, _ in h.components):
        # Summing non-negative terms keeps the composite >= each component exactly.
        return math.fsum(c.prior * c.likelihood for c, _ in h.components)
    return prior * h.likelihood


def _order(values: dict[str, float]) -> list[str]:
    return sorted(values, key=lambda k: -values[k])


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def compare_reasoning(
    hypotheses: Sequence[AnyHypothesis],
    contains: Iterable[tuple[str, str]] = (),
    use_priors: bool = True,
) -> ComparisonReport:
    """Rank ``hypotheses`` by likelihood and, with priors, by posterior.

    ``contains`` lists ``(container_id, contained_id)`` pairs; composites are
    taken to contain their own components.  With priors, every container must
    end up at least as probable as what it contains, otherwise the inputs are
    incoherent and :class:`InconsistentInputError` is raised.
    """
    by_id: dict[str, AnyHypothesis] = {}
    for h in hypotheses:
        if h.id in by_id:
            raise DomainError(f"duplicate hypothesis id {h.id!r}")
        by_id[h.id] = h

    pairs = list(dict.fromkeys(tuple(p) for p in contains))
    for h in hypotheses:
        if isinstance(h, CompositeHypothesis):
            for c, _ in h.components:
                if c.id in by_id and (h.id, c.id) not in pairs:
                    pairs.append((h.id, c.id))
    for outer, inner in pairs:
        if outer not in by_id or inner not in by_id:
            raise DomainError(f"containment ({outer!r}, {inner!r}) names an unknown hypothesis")
        if outer == inner:
            raise DomainError(f"hypothesis {outer!r} cannot contain itself")

    likelihoods = {k: h.likelihood for k, h in by_id.items()}

    joint = None
    if use_priors:
        priors = {k: _resolve_prior(h) for k, h in by_id.items()}
        missing = sorted(k for k, p in priors.items() if p is None)
        if missing:
            raise IncompleteInputError(f"posterior ordering needs priors for {missing}")
        for outer, inner in pairs:
            if priors[outer] < priors[inner]:
                raise InconsistentInputError(
                    f"{outer!r} contains {inner!r} but has the smaller prior"
                )
        joint = {k: _joint(h, priors[k]) for k, h in by_id.items()}
        for outer, inner in pairs:
            if joint[outer] < joint[inner]:
                raise InconsistentInputError(
                    f"{outer!r} contains {inner!r} yet P({outer} and Data) < P({inner} and Data)"
                )

    divergences = []
    if joint is not None:
        nested = set(pairs) | {(b, a) for a, b in pairs}
        for a, b in itertools.combinations(by_id, 2):
            s_lik = _sign(likelihoods[a] - likelihoods[b])
            s_post = _sign(joint[a] - joint[b])
            if s_lik * s_post < 0:
                divergences.append(
                    Divergence(
                        likelihood_prefers=a if s_lik > 0 else b,
                        probability_prefers=a if s_post > 0 else b,
                        nested=(a, b) in nested,
                    )
                )

    return ComparisonReport(
        likelihoods=likelihoods,
        joint=joint,
        likelihood_order=_order(likelihoods),
        posterior_order=None if joint is None else _order(joint),
        containment=pairs,
        divergences=divergences,
    )


def linda_hypotheses(
    p: float, l_feminist: float, l_non_feminist: float, prior_teller: float = 0.05,
    l_widowed: float | None = None, widowed_share: float = 0.1,
) -> tuple[list[AnyHypothesis], list[tuple[str, str]]]:
    """The bank-teller hypotheses: H1 = {H2 or H3}, optionally H5 inside H2.

    ``p`` is the proportion of feminists among bank tellers; ``widowed_share``
    the proportion of widows among feminist bank tellers.
    """
    h2 = Hypothesis("H2", "feminist bank teller", l_feminist, p * prior_teller)
    h3 = Hypothesis("H3", "non-feminist bank teller", l_non_feminist, (1.0 - p) * prior_teller)
    h1 = CompositeHypothesis("H1", "bank teller", ((h2, p), (h3, 1.0 - p)), prior_teller)
    hyps: list[AnyHypothesis] = [h1, h2, h3]
    contains = [("H1", "H2"), ("H1", "H3")]
    if l_widowed is not None:
        hyps.append(Hypothesis("H5", "widowed feminist bank teller", l_widowed, widowed_share * h2.prior))
        contains += [("H2", "H5"), ("H1", "H5")]
    return hyps, contains


@dataclass(frozen=True)
class BettingBook:
    """Betting quotients: risk ``alpha`` to win ``1 - alpha`` on E, ``beta`` likewise on not-E."""

    alpha: float
    beta: float
    stake: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "beta"):
            q = getattr(self, name)
            if not 0.0 <= q <= 1.0:
                raise DomainError(f"{name} must lie in [0, 1], got {q}")
        if not self.stake > 0 or math.isinf(self.stake):
            raise DomainError(f"stake must be positive and finite, got {self.stake}")


@dataclass(frozen=True)
class AuditResult:
    coherent: bool
    guaranteed_profit: float
    role: str  # "player", "bookie" or "none"


def _exact(value: float) -> Fraction:
    # Shortest round-tripping decimal, so a quoted 0.01 is exactly 1/100.
    return Fraction(repr(float(value)))


def _exact_book(book: BettingBook) -> tuple[Fraction, Fraction, Fraction]:
    return _exact(book.alpha), _exact(book.beta), _exact(book.stake)


def payoff_table(book: BettingBook) -> dict[tuple[str, bool], Fraction]:
    """Exact net payoff of taking both bets, as ``player`` or ``bookie``, in each world."""
    alpha, beta, stake = _exact_book(book)
    table = {}
    for e_true in (True, False):
        bet_on_e = (1 - alpha) if e_true else -alpha
        bet_on_not_e = -beta if e_true else (1 - beta)
        player = stake * (bet_on_e + bet_on_not_e)
        table[("player", e_true)] = player
        table[("bookie", e_true)] = -player
    return table


def dutch_book_audit(book: BettingBook) -> AuditResult:
    """Sure-win profit available against a pair of betting quotients.

    The analytic profit ``|1 - alpha - beta| * stake`` is checked against the
    worst case of the explicit payoff table before it is returned.
    """
    alpha, beta, stake = _exact_book(book)
    gap = 1 - alpha - beta
    if abs(gap) <= COHERENCE_TOL:
        return AuditResult(True, 0.0, "none")
    role = "player" if gap > 0 else "bookie"
    profit = abs(gap) * stake
    table = payoff_table(book)
    worst = min(table[(role, True)], table[(role, False)])
    if worst != profit:
        raise AssertionError(f"payoff enumeration gives {worst}, analytic profit {profit}")
    return AuditResult(False, float(profit), role)


@dataclass(frozen=True)
class SamplingScenario:
    """Balls drawn from a box whose visible picture shows ``blue_fraction`` blue."""

    blue_fraction: float
    sample_size: int = 3
    all_sampled_blue_and_squeaky: bool = True
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        if not 0.0 < self.blue_fraction < 1.0:
            raise DomainError(f"blue_fraction must lie in (0, 1), got {self.blue_fraction}")
        if int(self.sample_size) != self.sample_size or self.sample_size < 1:
            raise DomainError(f"sample_size must be a positive integer, got {self.sample_size}")
        if not self.threshold > 0:
            raise DomainError(f"threshold must be positive, got {self.threshold}")


@dataclass(frozen=True)
class Decision:
    lr: float
    generalize: bool
    l_random: float
    l_selective: float


def infant_generalization(sc: SamplingScenario) -> Decision:
    """Random-versus-selective sampling judgement after drawing only squeaky blue balls.

    Random sampling (with replacement) explains the sample with probability
    ``blue_fraction ** k``; selective sampling of squeaky blue balls explains
    it with probability 1.  A sample that is not all squeaky blue rules out
    selective sampling; the random-sampling likelihood is then reported as 1,
    since any positive value gives the same infinite ratio.
    """
    if sc.all_sampled_blue_and_squeaky:
        l_random = sc.blue_fraction ** sc.sample_size
        l_selective = 1.0
    else:
        l_random = 1.0
        l_selective = 0.0
    lr = likelihood_ratio(l_random, l_selective)
    return Decision(lr=lr, generalize=lr >= sc.threshold, l_random=l_random, l_selective=l_selective)
