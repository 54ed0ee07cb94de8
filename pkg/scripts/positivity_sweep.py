#!/usr/bin/env python3
"""Skew Schur positivity over a dense grid of rational t, beyond the test sizes.

    python scripts/positivity_sweep.py --max-weight 10 --denominators 1,2,3,7,100
"""

import argparse
import time
from fractions import Fraction

from lassalle.partitions import enumerate_skew_shapes
from lassalle.specialization import make_context, phi_skew_schur


def t_grid(denominators, numerators):
    return sorted({Fraction(p, q) for q in denominators for p in range(1, numerators + 1)})


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-weight", type=int, default=9)
    ap.add_argument("--denominators", default="1,2,3,100")
    ap.add_argument("--numerators", type=int, default=6)
    args = ap.parse_args()

    shapes = list(enumerate_skew_shapes(args.max_weight))
    ts = t_grid([int(q) for q in args.denominators.split(",")], args.numerators)
    print(f"{len(shapes)} skew shapes, {len(ts)} values of t")
    worst = None
    start = time.perf_counter()
    for t in ts:
        ctx = make_context(t)
        for s in shapes:
            v = phi_skew_schur(ctx, s)
            if v <= 0:
                print(f"NONPOSITIVE t={t} shape={s} value={v}")
            # smallest value seen, to show how close to zero the sweep gets
            if worst is None or v < worst[0]:
                worst = (v, t, s)
    v, t, s = worst
    print(f"min value {float(v):.3e} at t={t}, shape {s}")
    print(f"done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
