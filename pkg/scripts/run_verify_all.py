"""Run every claim and example expectation and write the JSON report.

Usage: python3 scripts/run_verify_all.py [--seed 42] [--output report.json]
"""

import argparse
import json
import sys
from collections import Counter

from orebaer.registry import verify_all
from orebaer.report import build_report, to_json


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--output", default="verify_all_report.json")
    args = ap.parse_args(argv)
    entries = verify_all(seed=args.seed)
    doc = build_report("verify", {"target": "all", "seed": args.seed}, entries)
    with open(args.output, "w") as fh:
        fh.write(to_json(doc))
    counts = Counter(e.status for e in entries)
    unmet = [e.id for e in entries if not e.expectation_met]
    print(f"{len(entries)} entries: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    print(f"expectations unmet: {unmet or 'none'}")
    print(f"report written to {args.output}")
    return 0 if not unmet else 2


if __name__ == "__main__":
    sys.exit(main())
