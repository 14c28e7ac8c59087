"""Search a registry example for skew-Armendariz violations at growing degree bounds.

Usage: python3 scripts/armendariz_search.py EX_2_4 --max-degree 2 [--mode randomized --trials 5000]
Stops at the first bound that yields a violation or exceeds the budget.
"""

import argparse
import sys

from orebaer.errors import BudgetExceeded
from orebaer.properties import Status, check_skew_armendariz, recheck_witness
from orebaer.registry import instantiate_example


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("example")
    ap.add_argument("--max-degree", type=int, default=2)
    ap.add_argument("--mode", choices=["exhaustive", "randomized"], default="exhaustive")
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--budget", type=int, default=10**8)
    args = ap.parse_args(argv)
    R, ctx = instantiate_example(args.example)
    print(f"{args.example}: |R| = {R.order}, sigma automorphism: {ctx.sigma.is_automorphism}, "
          f"delta zero: {ctx.delta.is_zero}")
    for d in range(args.max_degree + 1):
        try:
            v = check_skew_armendariz(ctx, d, d, mode=args.mode, budget=args.budget,
                                      seed=args.seed if args.mode == "randomized" else None, trials=args.trials)
        except BudgetExceeded as exc:
            print(f"deg <= {d}: budget exceeded ({exc})")
            return 3
        print(f"deg <= {d}: {v.status.value} in {v.elapsed_ms:.0f} ms")
        if v.status is Status.FAILS:
            for k, val in v.witness.items():
                print(f"  {k}: {val}")
            print(f"  independent re-check: {recheck_witness(v, R, ctx)}")
            return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
