#!/usr/bin/env python3
"""Agreement table between Karlin's predicate and exact minor signs on the oracle corpus."""

import argparse

from lassalle.karlin import oracle_sequences, predict_positive
from lassalle.toeplitz import index_pairs, minor


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=3)
    ap.add_argument("--window", type=int, default=7)
    args = ap.parse_args()

    print(f"{'sequence':<16} {'theta>0':>7} {'K':>4} {'L':>4} {'pairs':>7} {'positive':>9} {'agree':>7}")
    for o in oracle_sequences():
        total = positive = agree = 0
        for I, J in index_pairs(args.order, args.window):
            m = minor(o.sequence, I, J)
            total += 1
            positive += m > 0
            agree += predict_positive(o.params, I, J) == (m > 0)
        p = o.params
        print(f"{o.label:<16} {str(p.theta_positive):>7} {p.K:>4} {p.L:>4} {total:>7} {positive:>9} {agree:>7}")


if __name__ == "__main__":
    main()
