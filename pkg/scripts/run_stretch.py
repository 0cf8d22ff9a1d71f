#!/usr/bin/env python3
"""Long-running stretch workloads, kept outside the test suite.

These can take from many minutes to hours; pass --confirm to run one.
Currently available: the 3x3 minors of the 5x5 Hankel matrix (expected
f-vector (28,53), using its anti-diagonal reflection symmetry).
"""

import argparse
import sys
import time

from tropfan.cli import build_report
from tropfan.examples import hankel_3minors_general
from tropfan.symmetry import close_group
from tropfan.tropical import starting_cone, traverse


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("workload", choices=["hankel5"])
    parser.add_argument("--confirm", action="store_true")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    if not args.confirm:
        print("this workload is long-running; pass --confirm to start", file=sys.stderr)
        return 1

    ideal, reflection = hankel_3minors_general(5)
    t0 = time.monotonic()
    pair = starting_cone(ideal, args.seed)
    result = traverse(
        pair, symmetry=close_group([reflection]), seed=args.seed, jobs=args.jobs
    )
    print(build_report(result), end="")
    print(f"elapsed: {time.monotonic() - t0:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
