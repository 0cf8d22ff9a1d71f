#!/usr/bin/env python3
"""Traverse the tropical variety of the 3x3 minors of the 4x4 Hankel matrix.

Runs the full pipeline (starting cone, symmetric traversal, report) and
prints the annotated report; takes a few seconds.
"""

import argparse
import sys

from tropfan.cli import build_report, format_pair
from tropfan.examples import hankel_3minors
from tropfan.symmetry import close_group
from tropfan.tropical import starting_cone, traverse


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--no-symmetry", action="store_true", help="traverse without orbit reduction"
    )
    args = parser.parse_args()

    ideal, reflection = hankel_3minors()
    pair = starting_cone(ideal, args.seed)
    print(format_pair(pair, ideal.ring), file=sys.stderr)

    group = None if args.no_symmetry else close_group([reflection])
    result = traverse(pair, symmetry=group, seed=args.seed, jobs=args.jobs)
    print(build_report(result), end="")


if __name__ == "__main__":
    main()
