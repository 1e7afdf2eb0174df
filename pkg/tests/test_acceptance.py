"""Acceptance checks, one per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
Each check prints a single PASS/FAIL line.
"""

import itertools
import time
from fractions import Fraction

import pytest

from induction.bayes import SUNRISE_DAYS, carnap_confirmation, jeffreys_mixture, posterior, predictive_success, prob_general
from induction.bernoulli import BernoulliData, ThetaDistribution, likelihood
from induction.confidence import (
    PValueSide,
    confidence_density,
    confidence_interval,
    confidence_of_general,
    pvalue,
    simulate_coverage,
    update_confidence,
)
from induction.reasoning import (
    BettingBook,
    Hypothesis,
    SamplingScenario,
    compare_reasoning,
    dutch_book_audit,
    infant_generalization,
    likelihood_ratio,
    linda_hypotheses,
    mixture_likelihood,
)

RIGHT, LEFT = PValueSide.RIGHT, PValueSide.LEFT


def ac1_raven_intervals():
    cases = [(10, 0.95, 0.6915, 0.005), (10, 0.99, 0.5887, 0.005), (1000, 0.95, 0.99632, 0.0005)]
    got, ok = [], True
    for n, level, lo, tol in cases:
        ci = confidence_interval(BernoulliData.all_success(n), level)
        ok &= abs(ci.lo - lo) <= tol and abs(ci.hi - 1.0) <= tol
        got.append(f"[{ci.lo:.5f}, {ci.hi:.1f}]")
    return ok, " ".join(got)


def ac2_sunrise():
    value = predictive_success(posterior(ThetaDistribution.beta(1, 1), BernoulliData.all_success(SUNRISE_DAYS)))
    return abs(value - 0.9999995) <= 1e-7, f"predictive={value:.10f}"


def ac3_objective_bayes_zero():
    values = [
        prob_general(posterior(ThetaDistribution.beta(a, b), BernoulliData.all_success(n)))
        for a, b in ((1, 1), (0.5, 0.5))
        for n in (1, 10, 10**3, 10**6)
    ]
    return all(v == 0 for v in values), f"max={max(values)}"


def ac4_jeffreys_resolution():
    ns = (1, 2, 5, 100)
    expected = {1: 2 / 3, 2: 3 / 4}
    got = [prob_general(posterior(jeffreys_mixture(), BernoulliData.all_success(n))) for n in ns]
    err = max(abs(g - expected.get(n, (n + 1) / (n + 2))) for n, g in zip(ns, got))
    increasing = all(a < b for a, b in zip(got, got[1:]))
    return err <= 1e-12 and increasing, f"max_err={err:.1e} increasing={increasing}"


def ac5_carnap():
    err = 0.0
    for n in (1, 2, 5, 100):
        post = prob_general(posterior(jeffreys_mixture(), BernoulliData.all_success(n)))
        err = max(err, abs(carnap_confirmation(0.5, post) - n / (2 * (n + 2))))
    laplace = carnap_confirmation(0, prob_general(posterior(ThetaDistribution.beta(1, 1), BernoulliData(10, 10))))
    kant = carnap_confirmation(1, prob_general(posterior(ThetaDistribution.point(1), BernoulliData(10, 10))))
    return err <= 1e-12 and laplace == 0 and kant == 0, f"max_err={err:.1e} laplace={laplace} kant={kant}"


def ac6_density_oracle():
    grid = [0.01 + 0.98 * i / 98 for i in range(99)]
    h = 1e-5
    worst = 0.0
    for n in range(1, 16):
        for x in range(1, n + 1):
            d = BernoulliData(n, x)
            cd = confidence_density(d, RIGHT)
            for t in grid:
                deriv = (pvalue(d, t + h, RIGHT) - pvalue(d, t - h, RIGHT)) / (2 * h)
                worst = max(worst, abs(cd.pdf(t) - deriv))
    return worst < 1e-4, f"sup_diff={worst:.2e}"


def _density_value(cd, t):
    # A degenerate shape has no normalized pdf; constancy of the ratio only needs the kernel.
    return cd.shape.kernel(t) if cd.degenerate else cd.pdf(t)


def ac7_induced_priors():
    grid = [0.05 * k for k in range(1, 20)]
    worst = 0.0
    for n, x in ((7, 4), (10, 10), (12, 1)):
        d = BernoulliData(n, x)
        for side, weight in ((RIGHT, lambda t: t), (LEFT, lambda t: 1 - t)):
            cd = confidence_density(d, side)
            ratios = [_density_value(cd, t) / likelihood(d, t) * weight(t) for t in grid]
            worst = max(worst, (max(ratios) - min(ratios)) / max(ratios))
    return worst < 1e-8, f"max_rel_variation={worst:.1e}"


def ac8_update_closure():
    checked = 0
    for side in (RIGHT, LEFT):
        for n in range(13):
            for x in range(n + 1):
                direct = confidence_density(BernoulliData(n, x), side)
                for n1 in range(n + 1):
                    for x1 in range(max(0, x - (n - n1)), min(n1, x) + 1):
                        first = confidence_density(BernoulliData(n1, x1), side)
                        if update_confidence(first, BernoulliData(n - n1, x - x1)).shape != direct.shape:
                            return False, f"mismatch at n={n} x={x} n1={n1} x1={x1} side={side.value}"
                        checked += 1
    return True, f"splits={checked}"


def ac9_complete_confidence():
    ones = [confidence_of_general(BernoulliData(n, n), LEFT) for n in (1, 10, 1000)]
    zeros = [
        confidence_of_general(BernoulliData(n, x), LEFT) for n in range(1, 31) for x in range(n)
    ]
    return all(v == 1 for v in ones) and all(v == 0 for v in zeros), f"all_success={ones} with_failure_max={max(zeros)}"


def ac10_coverage():
    start = time.perf_counter()
    cov = {t: simulate_coverage(t, 20, 0.95, 10_000, seed=2024) for t in (0.3, 0.7, 0.95)}
    elapsed = time.perf_counter() - start
    ok = all(0.95 <= c <= 0.995 for c in cov.values()) and elapsed < 60
    return ok, " ".join(f"{t}:{c:.4f}" for t, c in cov.items()) + f" ({elapsed:.1f}s)"


def _enumerated_profit(a, b):
    """Best sure gain over both roles, by listing payoffs in each state with exact rationals."""
    best = Fraction(0)
    for sign in (1, -1):  # buy both bets, or sell both
        payoffs = [sign * ((1 if e else 0) - a + (0 if e else 1) - b) for e in (True, False)]
        best = max(best, min(payoffs))
    return best


def ac11_dutch_book():
    for i, j in itertools.product(range(101), repeat=2):
        alpha, beta = i / 100, j / 100
        audit = dutch_book_audit(BettingBook(alpha, beta))
        if audit.guaranteed_profit != float(_enumerated_profit(Fraction(i, 100), Fraction(j, 100))):
            return False, f"profit mismatch at ({alpha}, {beta})"
        if audit.coherent != (i + j == 100):
            return False, f"coherence mismatch at ({alpha}, {beta})"
    return True, "grid=101x101"


def ac12_linda():
    grid = [k / 20 for k in range(21)]
    for p, l2, l3 in itertools.product(grid, grid, grid):
        if l2 < l3:
            continue
        hyps, contains = linda_hypotheses(p, l2, l3, prior_teller=0.05)
        mix = mixture_likelihood(hyps[0])
        if mix > l2 or (mix == l2) != (p == 1 or l2 == l3):
            return False, f"mixture bound fails at p={p} L2={l2} L3={l3}"
        rep = compare_reasoning(hyps, contains)
        if rep.joint["H1"] < rep.joint["H2"]:
            return False, f"posterior order fails at p={p} L2={l2} L3={l3}"
    return True, "grid=21^3"


def ac13_prosecutor():
    lr = likelihood_ratio(Hypothesis("G", "guilty", 1.0), Hypothesis("I", "innocent", 1e-8))
    return lr == 1e8, f"lr={lr!r}"


def ac14_infant():
    one = infant_generalization(SamplingScenario(0.75, 3))
    two = infant_generalization(SamplingScenario(0.25, 3))
    ok = one.lr == 27 / 64 and two.lr == 1 / 64 and one.generalize and not two.generalize
    return ok, f"lr=({one.lr}, {two.lr}) generalize=({one.generalize}, {two.generalize})"


CRITERIA = [
    ("AC1 raven intervals", ac1_raven_intervals),
    ("AC2 sunrise predictive", ac2_sunrise),
    ("AC3 objective-Bayes zero", ac3_objective_bayes_zero),
    ("AC4 Jeffreys mixture", ac4_jeffreys_resolution),
    ("AC5 Carnap confirmation", ac5_carnap),
    ("AC6 confidence density oracle", ac6_density_oracle),
    ("AC7 induced priors", ac7_induced_priors),
    ("AC8 updating closure", ac8_update_closure),
    ("AC9 complete confidence", ac9_complete_confidence),
    ("AC10 coverage propensity", ac10_coverage),
    ("AC11 Dutch book", ac11_dutch_book),
    ("AC12 Linda inequality", ac12_linda),
    ("AC13 prosecutor ratio", ac13_prosecutor),
    ("AC14 infant model", ac14_infant),
]


def _run(name, check):
    start = time.perf_counter()
    ok, detail = check()
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail} [{time.perf_counter() - start:.2f}s]"
    return ok, line


@pytest.mark.parametrize("name, check", CRITERIA, ids=[n.split()[0] for n, _ in CRITERIA])
def test_criterion(name, check, capsys):
    ok, line = _run(name, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(name, check) for name, check in CRITERIA]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
