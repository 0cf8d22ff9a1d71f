#!/usr/bin/env python3
"""Traverse the tropical variety of the commuting 2x2 matrices ideal.

The result is the cone over the complete graph K4: f-vector (4,6),
homogeneity space of dimension 4, every pair of rays spanning a cone.
"""

import argparse

from tropfan.cli import build_report
from tropfan.examples import commuting_2x2
from tropfan.tropical import starting_cone, traverse


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    ideal = commuting_2x2()
    pair = starting_cone(ideal, args.seed)
    result = traverse(pair, seed=args.seed, jobs=args.jobs)
    print(build_report(result), end="")


if __name__ == "__main__":
    main()
