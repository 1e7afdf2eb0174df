import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from induction.errors import (
    DomainError,
    IncompleteInputError,
    InconsistentInputError,
    IndeterminateRatioError,
)
from induction.reasoning import (
    BettingBook,
    CompositeHypothesis,
    Hypothesis,
    SamplingScenario,
    compare_reasoning,
    dutch_book_audit,
    infant_generalization,
    likelihood_ratio,
    linda_hypotheses,
    mixture_likelihood,
    payoff_table,
)


def two_part(p, l2, l3):
    return CompositeHypothesis(
        "H1", "bank teller", ((Hypothesis("H2", "f", l2), p), (Hypothesis("H3", "nf", l3), 1 - p))
    )


def population_average(feminists, others, l2, l3):
    """P(Data | random member) over an explicit population of tellers."""
    members = [Fraction(l2)] * feminists + [Fraction(l3)] * others
    return sum(members) / len(members)


def test_mixture_examples():
    assert mixture_likelihood(two_part(1.0, 0.8, 0.2)) == 0.8
    assert mixture_likelihood(two_part(0.3, 0.4, 0.4)) == 0.4
    assert mixture_likelihood(two_part(0.25, 0.8, 0.2)) == pytest.approx(0.35, abs=1e-15)
    oracle = population_average(25, 75, "0.8", "0.2")
    assert oracle == Fraction(7, 20)
    assert mixture_likelihood(two_part(0.25, 0.8, 0.2)) == pytest.approx(float(oracle), abs=1e-15)


def test_composite_validation():
    h = Hypothesis("A", "a", 0.5)
    with pytest.raises(DomainError):
        CompositeHypothesis("C", "c", ((h, 0.4), (h, 0.4)))
    with pytest.raises(DomainError):
        CompositeHypothesis("C", "c", ())
    with pytest.raises(DomainError):
        Hypothesis("A", "a", -1)
    with pytest.raises(DomainError):
        Hypothesis("A", "a", 0.1, prior=2)


@st.composite
def composites(draw):
    k = draw(st.integers(1, 6))
    raw = draw(st.lists(st.floats(0, 1), min_size=k, max_size=k))
    total = sum(raw)
    weights = [r / total for r in raw] if total > 0 else [1 / k] * k
    weights[-1] = max(0.0, 1.0 - math.fsum(weights[:-1]))
    lik = draw(st.lists(st.floats(0, 1), min_size=k, max_size=k))
    comps = tuple((Hypothesis(f"h{i}", "", l), w) for i, (l, w) in enumerate(zip(lik, weights)))
    return CompositeHypothesis("C", "", comps)


@settings(max_examples=1000)
@given(composites())
def test_mixture_bound(comp):
    values = [h.likelihood for h, _ in comp.components]
    mix = mixture_likelihood(comp)
    assert min(values) <= mix <= max(values)
    degenerate = any(w == 1.0 for _, w in comp.components)
    if len(set(values)) == 1:
        assert mix == values[0]
    elif not degenerate and all(w > 0.01 for _, w in comp.components) and max(values) - min(values) > 1e-3:
        assert min(values) < mix < max(values)


def test_likelihood_ratio_examples():
    guilty = Hypothesis("G", "guilty", 1.0)
    innocent = Hypothesis("I", "innocent", 1e-8)
    assert likelihood_ratio(guilty, innocent) == 1e8
    assert likelihood_ratio(guilty, guilty) == 1
    assert likelihood_ratio(0.8, two_part(0.25, 0.8, 0.2)) == pytest.approx(0.8 / 0.35, rel=1e-12)
    assert round(likelihood_ratio(0.8, 0.35), 4) == 2.2857
    assert likelihood_ratio(0.3, 0.0) == math.inf
    with pytest.raises(IndeterminateRatioError):
        likelihood_ratio(0.0, 0.0)


@settings(max_examples=300)
@given(st.floats(0.01, 0.99), st.floats(0.01, 0.99), st.integers(0, 10), st.integers(0, 10))
def test_likelihood_ratio_multiplicative(t_a, t_b, k1, k2):
    # Independent Bernoulli evidence pieces: k successes each.
    lr = lambda k: likelihood_ratio(t_a**k, t_b**k)
    both = likelihood_ratio(t_a ** (k1 + k2), t_b ** (k1 + k2))
    assert both == pytest.approx(lr(k1) * lr(k2), rel=1e-12)


def test_linda_divergence():
    hyps, contains = linda_hypotheses(0.25, 0.8, 0.2, prior_teller=0.05)
    rep = compare_reasoning(hyps, contains)
    assert rep.likelihoods["H2"] > rep.likelihoods["H1"]
    assert rep.joint["H1"] >= rep.joint["H2"]
    assert any(
        d.likelihood_prefers == "H2" and d.probability_prefers == "H1" and d.nested for d in rep.divergences
    )


@pytest.mark.parametrize("p", [0.0, 0.1, 0.5, 0.9, 0.999])
def test_linda_any_p_below_one(p):
    hyps, contains = linda_hypotheses(p, 0.7, 0.1)
    rep = compare_reasoning(hyps, contains)
    assert rep.likelihood_order.index("H2") < rep.likelihood_order.index("H1")
    assert rep.posterior_order.index("H1") < rep.posterior_order.index("H2")


def test_single_hypothesis_has_no_divergence():
    rep = compare_reasoning([Hypothesis("A", "a", 0.3, 0.5)])
    assert rep.divergences == []
    assert rep.likelihood_order == rep.posterior_order == ["A"]


def test_widowed_hypothesis_never_preferred():
    hyps, contains = linda_hypotheses(0.25, 0.8, 0.2, l_widowed=0.5)
    rep = compare_reasoning(hyps, contains)
    assert rep.likelihoods["H5"] < rep.likelihoods["H2"]
    assert rep.joint["H5"] < rep.joint["H2"]
    assert rep.likelihood_order[0] != "H5" and rep.posterior_order[0] != "H5"
    assert rep.likelihood_order.index("H2") < rep.likelihood_order.index("H5")
    assert rep.posterior_order.index("H2") < rep.posterior_order.index("H5")


def test_missing_priors():
    hyps = [Hypothesis("A", "a", 0.3), Hypothesis("B", "b", 0.2, 0.5)]
    with pytest.raises(IncompleteInputError):
        compare_reasoning(hyps)
    rep = compare_reasoning(hyps, use_priors=False)
    assert rep.joint is None and rep.likelihood_order == ["A", "B"]
    with pytest.raises(IncompleteInputError):
        rep.posterior(0.5)


def test_incoherent_containment_is_rejected():
    big = Hypothesis("B", "b", 0.1, 0.5)
    small = Hypothesis("S", "s", 0.9, 0.4)
    with pytest.raises(InconsistentInputError):
        compare_reasoning([big, small], [("B", "S")])
    with pytest.raises(InconsistentInputError):
        compare_reasoning([Hypothesis("B", "b", 0.1, 0.3), Hypothesis("S", "s", 0.1, 0.4)], [("B", "S")])
    with pytest.raises(DomainError):
        compare_reasoning([big], [("B", "X")])


def test_composite_prior_must_match_components():
    h2 = Hypothesis("H2", "", 0.8, 0.02)
    h3 = Hypothesis("H3", "", 0.2, 0.03)
    with pytest.raises(InconsistentInputError):
        compare_reasoning([CompositeHypothesis("H1", "", ((h2, 0.5), (h3, 0.5)), 0.05), h2, h3])
    with pytest.raises(InconsistentInputError):
        compare_reasoning([CompositeHypothesis("H1", "", ((h2, 0.4), (h3, 0.6)), 0.09), h2, h3])


@settings(max_examples=300)
@given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1), st.floats(1e-6, 1))
def test_conjunction_rule_on_posterior_side(p, l2, l3, base):
    hyps, contains = linda_hypotheses(p, l2, l3, base)
    rep = compare_reasoning(hyps, contains)
    assert rep.joint["H1"] >= rep.joint["H2"]
    assert rep.joint["H1"] >= rep.joint["H3"]


def test_normalized_posterior():
    hyps, contains = linda_hypotheses(0.25, 0.8, 0.2, prior_teller=1.0)
    rep = compare_reasoning(hyps, contains)
    post = rep.posterior(rep.joint["H1"])
    assert post["H1"] == pytest.approx(1.0) and post["H2"] == pytest.approx(0.2 / 0.35)


@pytest.mark.parametrize(
    "alpha, beta, coherent, profit, role",
    [(0.6, 0.4, True, 0.0, "none"), (0.3, 0.3, False, 0.4, "player"), (0.7, 0.6, False, 0.3, "bookie")],
)
def test_dutch_book_examples(alpha, beta, coherent, profit, role):
    audit = dutch_book_audit(BettingBook(alpha, beta))
    assert audit.coherent is coherent
    assert audit.guaranteed_profit == pytest.approx(profit, abs=1e-15)
    assert audit.role == role


def test_dutch_book_payoffs_state_independent():
    table = payoff_table(BettingBook(0.3, 0.3, stake=2))
    assert table[("player", True)] == table[("player", False)] == 2 * (1 - Fraction(3, 10) - Fraction(3, 10))


def test_dutch_book_stake_scales():
    assert dutch_book_audit(BettingBook(0.3, 0.3, 10)).guaranteed_profit == pytest.approx(4.0)
    with pytest.raises(DomainError):
        BettingBook(1.2, 0.1)


def test_dutch_book_grid():
    for i in range(101):
        for j in range(101):
            book = BettingBook(i / 100, j / 100)
            audit = dutch_book_audit(book)
            table = payoff_table(book)
            best = max(min(table[(r, True)], table[(r, False)]) for r in ("player", "bookie"))
            assert audit.guaranteed_profit == float(max(best, 0)) or audit.coherent
            assert (audit.guaranteed_profit == 0) == (i + j == 100) == audit.coherent


@pytest.mark.parametrize(
    "fraction, lr, generalize", [(0.75, 27 / 64, True), (0.25, 1 / 64, False)]
)
def test_infant_scenarios(fraction, lr, generalize):
    d = infant_generalization(SamplingScenario(fraction, 3))
    assert d.lr == lr
    assert d.generalize is generalize


def test_infant_limit_and_threshold():
    d = infant_generalization(SamplingScenario(1 - 1e-9, 3))
    assert d.lr == pytest.approx(1.0) and d.generalize
    assert not infant_generalization(SamplingScenario(0.75, 3, threshold=0.5)).generalize
    broken = infant_generalization(SamplingScenario(0.75, 3, all_sampled_blue_and_squeaky=False))
    assert broken.lr == math.inf and broken.generalize
    with pytest.raises(DomainError):
        SamplingScenario(1.0)
