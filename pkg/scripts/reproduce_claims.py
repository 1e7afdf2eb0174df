"""Print every headline number the package reproduces, one per line."""

from induction.bayes import SUNRISE_DAYS, carnap_confirmation, jeffreys_mixture, posterior, predictive_success, prob_general
from induction.bernoulli import BernoulliData, ThetaDistribution
from induction.confidence import PValueSide, confidence_interval, confidence_of_general
from induction.reasoning import (
    BettingBook,
    SamplingScenario,
    compare_reasoning,
    dutch_book_audit,
    infant_generalization,
    likelihood_ratio,
    linda_hypotheses,
)


def main():
    for n, level in ((10, 0.95), (10, 0.99), (1000, 0.95)):
        ci = confidence_interval(BernoulliData.all_success(n), level)
        print(f"ravens n={n} level={level}: [{ci.lo:.5f}, {ci.hi:.5f}]")

    uniform = ThetaDistribution.beta(1, 1)
    sunrise = posterior(uniform, BernoulliData.all_success(SUNRISE_DAYS))
    print(f"sunrise predictive after {SUNRISE_DAYS} days: {predictive_success(sunrise):.10f}")
    print(f"sunrise prob_G under uniform prior: {prob_general(sunrise)}")

    for n in (1, 2, 5, 100):
        pg = prob_general(posterior(jeffreys_mixture(), BernoulliData.all_success(n)))
        print(f"jeffreys mixture n={n}: prob_G={pg:.6f} confirmation={carnap_confirmation(0.5, pg):.6f}")

    for n in (1, 10, 1000):
        print(f"confidence in G after {n}/{n}: {confidence_of_general(BernoulliData(n, n), PValueSide.LEFT)}")

    hyps, contains = linda_hypotheses(0.25, 0.8, 0.2, prior_teller=0.05)
    rep = compare_reasoning(hyps, contains)
    print(f"linda likelihood order: {' > '.join(rep.likelihood_order)}")
    print(f"linda posterior order: {' > '.join(rep.posterior_order)}")

    print(f"prosecutor likelihood ratio: {likelihood_ratio(1.0, 1e-8):.0e}")

    audit = dutch_book_audit(BettingBook(0.3, 0.3))
    print(f"dutch book (0.3, 0.3): profit={audit.guaranteed_profit} role={audit.role}")

    for fraction in (0.75, 0.25):
        d = infant_generalization(SamplingScenario(fraction, 3))
        print(f"infant blue={fraction}: lr={d.lr:.6f} generalize={d.generalize}")


if __name__ == "__main__":
    main()
