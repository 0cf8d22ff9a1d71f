#!/usr/bin/env python3
"""Circuits of a generic 3x5 matrix versus the uniform Bergman predicate.

Computes the 10 support-3 circuits of a 3x5 Vandermonde matrix, builds the
tropical prevariety of the circuit ideal, and cross-checks membership
against the closed-form predicate "the 4 smallest weight entries are tied"
on random sample vectors.
"""

import argparse
import random

from tropfan.poly import RingDescriptor, format_polynomial
from tropfan.tropical import (
    LinearIdealModel,
    linear_circuits,
    tropical_prevariety,
    uniform_bergman_member,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    ring = RingDescriptor(tuple(f"x{i}" for i in range(5)))
    matrix = [[c**k for c in (1, 2, 3, 4, 5)] for k in range(3)]
    circuits = linear_circuits(LinearIdealModel(matrix, ring))
    print(f"{len(circuits)} circuits:")
    for f in circuits:
        print("  " + format_polynomial(f))

    fan = tropical_prevariety(circuits)
    rng = random.Random(args.seed)
    agree = 0
    for _ in range(args.samples):
        w = tuple(rng.randint(-9, 9) for _ in range(5))
        agree += fan.member(w) == uniform_bergman_member(w, 3)
    print(f"membership agreement: {agree}/{args.samples}")


if __name__ == "__main__":
    main()
