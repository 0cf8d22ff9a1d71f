#!/usr/bin/env python3
"""Traverse the tropical variety of the 3x3 minors of the symmetric 4x4 matrix.

Uses the induced S4 action on the 10 matrix entries for orbit reduction;
expected report: dimension 7, homogeneity 4, F-vector (20,75,75).
Takes a few seconds.
"""

import argparse

from tropfan.cli import build_report
from tropfan.examples import symmetric_3minors
from tropfan.symmetry import close_group
from tropfan.tropical import starting_cone, traverse


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    ideal, generators = symmetric_3minors()
    pair = starting_cone(ideal, args.seed)
    result = traverse(
        pair, symmetry=close_group(generators), seed=args.seed, jobs=args.jobs
    )
    print(build_report(result), end="")


if __name__ == "__main__":
    main()
