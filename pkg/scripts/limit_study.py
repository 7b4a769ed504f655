"""How L_q approaches its q -> infinity limit.

For each instance, compares L_q at growing q with the most likely symbol's
length and with the closed-form limit max_i(l_i + log2 p_i) - log2 max p.
"""

import argparse

import numpy as np

from escortcode import length_measure_limit, new_length_measure
from escortcode.suite import random_distribution, random_kraft_lengths, trial_rng


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=100)
    ap.add_argument("--seed", type=int, default=6)
    args = ap.parse_args()

    qs = (10.0, 100.0, 1e3, 1e4)
    to_limit = np.zeros((args.instances, len(qs)))
    to_mode = np.zeros_like(to_limit)
    for t in range(args.instances):
        rng = trial_rng(args.seed, t)
        n = int(rng.integers(2, 13))
        p, l = random_distribution(rng, n), random_kraft_lengths(rng, n)
        k = int(np.argmax(p.probs))
        lim = length_measure_limit(p, l)
        for j, q in enumerate(qs):
            v = new_length_measure(p, l, q)
            to_limit[t, j] = abs(v - lim)
            to_mode[t, j] = abs(v - l[k])

    print("q\tmedian|L_q-limit|\tmax|L_q-limit|\tmedian|L_q-l_mode|\tshare |L_q-l_mode|<1e-6")
    for j, q in enumerate(qs):
        print(f"{q:g}\t{np.median(to_limit[:, j]):.3e}\t{to_limit[:, j].max():.3e}\t"
              f"{np.median(to_mode[:, j]):.3e}\t{(to_mode[:, j] < 1e-6).mean():.2f}")


if __name__ == "__main__":
    main()
