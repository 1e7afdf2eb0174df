"""Exact and simulated coverage of equal-tailed binomial intervals."""

import argparse

from induction.confidence import exact_coverage, simulate_coverage


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--level", type=float, default=0.95)
    ap.add_argument("--replicates", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--thetas", type=float, nargs="+", default=[0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95])
    args = ap.parse_args()

    print(f"{'theta':>6} {'exact':>8} {'simulated':>10}")
    for theta in args.thetas:
        exact = exact_coverage(theta, args.n, args.level)
        sim = simulate_coverage(theta, args.n, args.level, args.replicates, seed=args.seed)
        print(f"{theta:>6.3f} {exact:>8.4f} {sim:>10.4f}")


if __name__ == "__main__":
    main()
