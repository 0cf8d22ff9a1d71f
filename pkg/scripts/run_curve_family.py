#!/usr/bin/env python3
"""Ray directions of a family of parametric space curves.

For each p, the curve (t+1)^(p+2), (t-1)^p, t is homogenized and traversed;
its tropical variety has exactly four rays, printed here as primitive
directions in the original (dehomogenized) coordinates.
"""

import argparse

from tropfan.examples import parametric_curve_ideal
from tropfan.linalg import primitive
from tropfan.tropical import starting_cone, traverse


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for p in range(1, args.max_p + 1):
        ideal = parametric_curve_ideal(p)
        result = traverse(starting_cone(ideal, args.seed), seed=args.seed)
        homog = result.lineality_dim
        ray_cones = result.stats.faces_by_dim[homog + 1]
        dirs = sorted(
            primitive(tuple(x - r[0] for x in r[1:]))
            for r in (c.extreme_rays()[0] for c in ray_cones)
        )
        print(f"p={p}: " + ", ".join(str(d) for d in dirs))


if __name__ == "__main__":
    main()
