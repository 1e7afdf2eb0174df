"""Command-line front end: one subcommand per worked scenario plus generic forms.

Exit codes: 0 on success, 1 when a computation fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

from . import bayes, confidence, reasoning
from .bernoulli import BernoulliData
from .errors import DomainError, InductionError

SCENARIOS = (
    "ravens", "sunrise", "linda", "prosecutor", "dutch-book",
    "infant", "ci", "posterior", "confidence",
)
IMPROPER_NOTE = "confidence under an improper induced prior; not necessarily a Kolmogorov probability"


@dataclass
class RunReport:
    scenario: str
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "scenario": self.scenario,
            "inputs": _json_values(self.inputs),
            "outputs": _json_values(self.outputs),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> RunReport:
        def decode(v):
            if isinstance(v, str) and v in ("inf", "-inf", "nan"):
                return float(v)
            return v

        return cls(
            scenario=d["scenario"],
            inputs={k: decode(v) for k, v in d["inputs"].items()},
            outputs={k: decode(v) for k, v in d["outputs"].items()},
            notes=list(d["notes"]),
        )


def _json_value(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, float):
        if not math.isfinite(v):
            return str(v)
        return float(f"{v:.10g}")
    raise TypeError(f"cannot serialize {v!r}")


def _json_values(d):
    return {k: _json_value(v) for k, v in d.items()}


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        s = f"{v:.4g}"
        # Keep near-certain values distinguishable from certainty.
        if float(s) in (0.0, 1.0) and float(s) != v and math.isfinite(v):
            s = f"{v:.10g}"
        return s
    return str(v)


def render_report(r: RunReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(r.to_dict(), sort_keys=False, separators=(", ", ": "))
    if fmt != "text":
        raise DomainError(f"unknown format {fmt!r}")
    lines = [f"scenario: {r.scenario}"]
    for section, values in (("inputs", r.inputs), ("outputs", r.outputs)):
        lines.append(f"[{section}]")
        lines.extend(f"{k}: {_text_value(v)}" for k, v in values.items())
    if r.notes:
        lines.append("[notes]")
        lines.extend(f"- {n}" for n in r.notes)
    return "\n".join(lines)


def parse_report(text: str) -> RunReport:
    return RunReport.from_dict(json.loads(text))


# -- argument parsing ---------------------------------------------------------


def _level(s: str) -> float:
    v = float(s)
    if not 0.0 < v < 1.0:
        raise argparse.ArgumentTypeError(f"level must lie in (0, 1), got {s}")
    return v


def _unit(s: str) -> float:
    v = float(s)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"value must lie in [0, 1], got {s}")
    return v


def _open_unit(s: str) -> float:
    v = float(s)
    if not 0.0 < v < 1.0:
        raise argparse.ArgumentTypeError(f"value must lie in (0, 1), got {s}")
    return v


def _nonneg_real(s: str) -> float:
    v = float(s)
    if not (v >= 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"value must be a finite non-negative number, got {s}")
    return v


def _pos_real(s: str) -> float:
    v = _nonneg_real(s)
    if v == 0:
        raise argparse.ArgumentTypeError(f"value must be positive, got {s}")
    return v


def _count(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"count must be non-negative, got {s}")
    return v


def _pos_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"value must be a positive integer, got {s}")
    return v


def _prior(s: str) -> str:
    if s == "all":
        return s
    try:
        bayes.named_prior(s)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    return s


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="induction", description="Likelihood, confidence and Bayesian induction calculations."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ravens", parents=[common], help="interval for theta after n black ravens")
    p.add_argument("--n", type=_pos_int, default=10)
    p.add_argument("--level", type=_level, default=0.95)

    p = sub.add_parser("sunrise", parents=[common], help="sunrise problem under several priors")
    p.add_argument("--n", type=_count, default=bayes.SUNRISE_DAYS)
    p.add_argument("--prior", type=_prior, default="all",
                   help="uniform, jeffreys-beta, jeffreys-mixture, kant, beta:a,b or all")

    p = sub.add_parser("linda", parents=[common], help="conjunction problem: likelihood vs probability")
    p.add_argument("--p", type=_unit, default=0.25, help="proportion of feminists among bank tellers")
    p.add_argument("--l2", type=_unit, default=0.8, help="P(Data | feminist bank teller)")
    p.add_argument("--l3", type=_unit, default=0.2, help="P(Data | non-feminist bank teller)")
    p.add_argument("--prior-teller", type=_unit, default=0.05)
    p.add_argument("--l5", type=_unit, default=None, help="P(Data | widowed feminist bank teller)")

    p = sub.add_parser("prosecutor", parents=[common], help="likelihood ratio of guilt vs innocence")
    p.add_argument("--l-guilty", type=_unit, default=1.0)
    p.add_argument("--l-innocent", type=_unit, default=1e-8)
    p.add_argument("--prior-guilt", type=_unit, default=None)

    p = sub.add_parser("dutch-book", parents=[common], help="audit a pair of betting quotients")
    p.add_argument("--alpha", type=_unit, required=True)
    p.add_argument("--beta", type=_unit, required=True)
    p.add_argument("--stake", type=_pos_real, default=1.0)

    p = sub.add_parser("infant", parents=[common], help="random vs selective sampling judgement")
    p.add_argument("--blue-fraction", type=_open_unit, default=0.75)
    p.add_argument("--k", type=_pos_int, default=3)
    p.add_argument("--threshold", type=_pos_real, default=reasoning.DEFAULT_THRESHOLD)

    p = sub.add_parser("ci", parents=[common], help="exact equal-tailed confidence interval")
    p.add_argument("--n", type=_pos_int, required=True)
    p.add_argument("--successes", type=_count, required=True)
    p.add_argument("--level", type=_level, default=0.95)
    p.add_argument("--coverage-theta", type=_unit, default=None,
                   help="also simulate coverage at this true value")
    p.add_argument("--replicates", type=_pos_int, default=10_000)
    p.add_argument("--seed", type=_count, default=0)

    p = sub.add_parser("posterior", parents=[common], help="Bayesian posterior under a named prior")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--successes", type=_count, required=True)
    p.add_argument("--prior", type=_prior, default="uniform")
    p.add_argument("--m", type=_pos_int, default=None, help="also report P(next m all succeed)")
    p.add_argument("--grid", type=_pos_int, default=None, help="dump the density on N points")

    p = sub.add_parser("confidence", parents=[common], help="confidence density and induced prior")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--successes", type=_count, required=True)
    p.add_argument("--side", choices=("right", "left"), default="left")
    p.add_argument("--theta", type=_unit, default=None, help="also evaluate the P-value function here")
    p.add_argument("--grid", type=_pos_int, default=None, help="dump the density on N points")

    return parser


def parse_args(argv: list[str]) -> argparse.Namespace:
    parser = build_parser()
    cmd = parser.parse_args(argv)
    if hasattr(cmd, "successes") and cmd.successes > cmd.n:
        parser.error(f"--successes ({cmd.successes}) exceeds --n ({cmd.n})")
    if cmd.command == "posterior" and cmd.prior == "all":
        parser.error("posterior needs a single --prior")
    return cmd


# -- scenarios ----------------------------------------------------------------


def _grid(n: int) -> list[float]:
    return [(i + 0.5) / n for i in range(n)]


def _ravens(cmd, r):
    data = BernoulliData.all_success(cmd.n)
    ci = confidence.confidence_interval(data, cmd.level)
    r.inputs.update(n=cmd.n, level=cmd.level)
    r.outputs.update(
        lo=ci.lo,
        hi=ci.hi,
        likelihood_at_lo=ci.lo ** cmd.n,
        coverage_likelihood=confidence.coverage_likelihood(ci),
    )


def _sunrise_row(name, data):
    prior = bayes.named_prior(name)
    post = bayes.posterior(prior, data)
    return {
        "predictive": bayes.predictive_success(post),
        "prob_G": bayes.prob_general(post),
        "confirmation": bayes.carnap_confirmation(prior.atom1, bayes.prob_general(post)),
    }


def _sunrise(cmd, r):
    data = BernoulliData.all_success(cmd.n)
    r.inputs.update(n=cmd.n, prior=cmd.prior)
    if cmd.prior != "all":
        r.outputs.update(_sunrise_row(cmd.prior, data))
        return
    for name in bayes.PRIORS:
        for k, v in _sunrise_row(name, data).items():
            r.outputs[f"{name}.{k}"] = v
    if cmd.n >= 1:
        conf = confidence.confidence_density(data, confidence.PValueSide.LEFT).as_distribution()
        r.outputs["confidence.predictive"] = bayes.predictive_success(conf)
        r.outputs["confidence.prob_G"] = confidence.confidence_of_general(data)
        r.notes.append(f"confidence rows: {IMPROPER_NOTE}")


def _linda(cmd, r):
    hyps, contains = reasoning.linda_hypotheses(cmd.p, cmd.l2, cmd.l3, cmd.prior_teller, cmd.l5)
    rep = reasoning.compare_reasoning(hyps, contains)
    r.inputs.update(p=cmd.p, l2=cmd.l2, l3=cmd.l3, prior_teller=cmd.prior_teller)
    if cmd.l5 is not None:
        r.inputs["l5"] = cmd.l5
    for k, v in rep.likelihoods.items():
        r.outputs[f"L{k[1:]}"] = v
    for k, v in rep.joint.items():
        r.outputs[f"joint{k[1:]}"] = v
    r.outputs["lr_L2_L1"] = reasoning.likelihood_ratio(rep.likelihoods["H2"], rep.likelihoods["H1"])
    r.outputs["likelihood_order"] = " > ".join(rep.likelihood_order)
    r.outputs["posterior_order"] = " > ".join(rep.posterior_order)
    r.outputs["divergences"] = len(rep.divergences)
    for d in rep.divergences:
        r.notes.append(
            f"likelihood prefers {d.likelihood_prefers}, probability prefers {d.probability_prefers}"
            + (" (nested)" if d.nested else "")
        )


def _prosecutor(cmd, r):
    r.inputs.update(l_guilty=cmd.l_guilty, l_innocent=cmd.l_innocent)
    r.outputs["lr"] = reasoning.likelihood_ratio(cmd.l_guilty, cmd.l_innocent)
    if cmd.prior_guilt is not None:
        r.inputs["prior_guilt"] = cmd.prior_guilt
        g = cmd.prior_guilt * cmd.l_guilty
        i = (1.0 - cmd.prior_guilt) * cmd.l_innocent
        if g + i == 0:
            raise reasoning.IndeterminateRatioError("the evidence has zero probability under both hypotheses")
        r.outputs["posterior_guilt"] = g / (g + i)


def _dutch_book(cmd, r):
    book = reasoning.BettingBook(cmd.alpha, cmd.beta, cmd.stake)
    audit = reasoning.dutch_book_audit(book)
    r.inputs.update(alpha=cmd.alpha, beta=cmd.beta, stake=cmd.stake)
    r.outputs.update(coherent=audit.coherent, profit=audit.guaranteed_profit, role=audit.role)
    for (role, e_true), v in reasoning.payoff_table(book).items():
        r.outputs[f"payoff.{role}.{'E' if e_true else 'not_E'}"] = float(v)


def _infant(cmd, r):
    sc = reasoning.SamplingScenario(cmd.blue_fraction, cmd.k, threshold=cmd.threshold)
    d = reasoning.infant_generalization(sc)
    r.inputs.update(blue_fraction=cmd.blue_fraction, k=cmd.k, threshold=cmd.threshold)
    r.outputs.update(l_random=d.l_random, l_selective=d.l_selective, lr=d.lr, generalize=d.generalize)


def _ci(cmd, r):
    data = BernoulliData(cmd.n, cmd.successes)
    ci = confidence.confidence_interval(data, cmd.level)
    r.inputs.update(n=cmd.n, successes=cmd.successes, level=cmd.level)
    r.outputs.update(lo=ci.lo, hi=ci.hi, coverage_likelihood=confidence.coverage_likelihood(ci))
    if cmd.coverage_theta is not None:
        r.inputs.update(coverage_theta=cmd.coverage_theta, replicates=cmd.replicates, seed=cmd.seed)
        r.outputs["empirical_coverage"] = confidence.simulate_coverage(
            cmd.coverage_theta, cmd.n, cmd.level, cmd.replicates, cmd.seed
        )
        r.outputs["exact_coverage"] = confidence.exact_coverage(cmd.coverage_theta, cmd.n, cmd.level)


def _posterior(cmd, r):
    data = BernoulliData(cmd.n, cmd.successes)
    prior = bayes.named_prior(cmd.prior)
    post = bayes.posterior(prior, data)
    r.inputs.update(n=cmd.n, successes=cmd.successes, prior=cmd.prior)
    r.outputs.update(
        atom0=post.atom0, atom1=post.atom1, cont_a=post.cont.a, cont_b=post.cont.b,
        cont_weight=post.cont_weight, prob_G=bayes.prob_general(post),
        predictive=bayes.predictive_success(post),
        confirmation=bayes.carnap_confirmation(prior.atom1, post.atom1),
    )
    if cmd.m is not None:
        r.inputs["m"] = cmd.m
        r.outputs["predictive_run"] = bayes.predictive_run(post, cmd.m)
    if cmd.grid is not None:
        r.inputs["grid"] = cmd.grid
        if post.cont_weight > 0:
            for t in _grid(cmd.grid):
                r.outputs[f"density@{t:.6g}"] = post.cont_weight * post.cont.pdf(t)
        else:
            r.notes.append("no continuous part; density grid omitted")
    if not post.kolmogorov:
        r.notes.append(IMPROPER_NOTE)


def _confidence(cmd, r):
    data = BernoulliData(cmd.n, cmd.successes)
    side = confidence.PValueSide(cmd.side)
    cd = confidence.confidence_density(data, side)
    induced = confidence.induced_prior(cd)
    r.inputs.update(n=cmd.n, successes=cmd.successes, side=cmd.side)
    r.outputs.update(
        shape_a=float(cd.shape.a), shape_b=float(cd.shape.b), degenerate=cd.degenerate,
        induced_a=float(induced.a), induced_b=float(induced.b),
    )
    if cmd.n >= 1:
        r.outputs["confidence_of_general"] = confidence.confidence_of_general(data, side)
    if cmd.theta is not None:
        r.inputs["theta"] = cmd.theta
        r.outputs["pvalue"] = confidence.pvalue(data, cmd.theta, side)
    if cmd.grid is not None:
        r.inputs["grid"] = cmd.grid
        if cd.degenerate:
            r.notes.append("confidence is a boundary point mass; density grid omitted")
        else:
            for t in _grid(cmd.grid):
                r.outputs[f"density@{t:.6g}"] = cd.pdf(t)
    r.notes.append(IMPROPER_NOTE)


_HANDLERS = {
    "ravens": _ravens, "sunrise": _sunrise, "linda": _linda, "prosecutor": _prosecutor,
    "dutch-book": _dutch_book, "infant": _infant, "ci": _ci, "posterior": _posterior,
    "confidence": _confidence,
}


def run_scenario(cmd: argparse.Namespace) -> RunReport:
    report = RunReport(scenario=cmd.command)
    _HANDLERS[cmd.command](cmd, report)
    return report


def main(argv: list[str] | None = None) -> int:
    cmd = parse_args(sys.argv[1:] if argv is None else argv)
    try:
        report = run_scenario(cmd)
    except InductionError as e:
        print(f"error: {cmd.command}: {e}", file=sys.stderr)
        return 1
    print(render_report(report, cmd.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
