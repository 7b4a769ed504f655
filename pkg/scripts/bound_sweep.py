"""Slack of every bound as a function of q on random (p, l) pairs.

Prints, per q, the smallest slack seen for each inequality.  A negative
minimum means the inequality fails somewhere at that q.
"""

import argparse

import numpy as np

from escortcode import verify_bounds
from escortcode.suite import random_distribution, random_kraft_lengths, trial_rng


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--q", default="0,0.25,0.5,0.75,0.9,1,1.1,1.5,2,3,5,10")
    args = ap.parse_args()
    grid = [float(x) for x in args.q.split(",")]

    worst: dict[tuple[str, float], float] = {}
    for t in range(args.trials):
        rng = trial_rng(args.seed, t)
        n = int(rng.integers(2, 13))
        p, l = random_distribution(rng, n), random_kraft_lengths(rng, n)
        for q in grid:
            for r in verify_bounds(p, l, q):
                if r.applicable:
                    key = (r.name, q)
                    worst[key] = min(worst.get(key, np.inf), r.slack)

    names = sorted({name for name, _ in worst})
    print("q\t" + "\t".join(names))
    for q in grid:
        cells = [f"{worst[(n, q)]:+.3e}" if (n, q) in worst else "n/a" for n in names]
        print(f"{q:g}\t" + "\t".join(cells))


if __name__ == "__main__":
    main()
