"""Command-line interface: starting cones, traversals, prevarieties,
curve bases and monomial containment over a plain text protocol.

Input files start with a ring declaration line `Q[a,b,...]`, followed by a
brace-delimited, comma-separated list of polynomials, optionally followed
by a brace-delimited list of variable permutations such as
`{(6,5,4,3,2,1,0)}`.  All output is UTF-8 with LF line endings.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from .cones import Fan, restrict_to_unit_first_coordinate
from .groebner import Ideal, MarkedReducedGB, monomial_in_ideal
from .poly import (
    ParseError,
    RingDescriptor,
    _drl_key,
    format_monomial,
    format_polynomial,
    homogenize,
    parse_polynomial,
)
from .symmetry import (
    canonical_orbit_representative,
    check_ideal_invariance,
    close_group,
    format_permutations,
    parse_permutations,
)
from .tropical import (
    GroebnerConePair,
    RetryExhausted,
    starting_cone,
    traverse,
    tropical_basis_of_curve,
    tropical_prevariety,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RETRY = 4


@dataclass
class InputDocument:
    ring: RingDescriptor
    polynomials: list
    symmetry: list  # list of Permutation, possibly empty


# ---------------------------------------------------------------------------
# Document parsing


def _parse_ring_line(line):
    line = line.strip()
    if not (line.startswith("Q[") and line.endswith("]")):
        raise ParseError("expected ring declaration line 'Q[a,b,...]'")
    names = [s.strip() for s in line[2:-1].split(",")]
    if any(not n for n in names):
        raise ParseError("empty variable name in ring declaration")
    return RingDescriptor(tuple(names))


def _brace_blocks(text):
    """Contents of all top-level brace-delimited blocks, in order."""
    blocks = []
    depth = 0
    start = None
    for i, ch in enumerate(text):
        if ch == "{":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced '}'", i)
            if depth == 0:
                blocks.append(text[start:i])
    if depth != 0:
        raise ParseError("unbalanced '{'")
    return blocks


def _split_top_level(text):
    """Split on commas outside parentheses and braces."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts]


def parse_input_document(text):
    lines = text.split("\n")
    idx = next((i for i, l in enumerate(lines) if l.strip()), None)
    if idx is None:
        raise ParseError("empty input")
    ring = _parse_ring_line(lines[idx])
    rest = "\n".join(lines[idx + 1:])
    blocks = _brace_blocks(rest)
    if not blocks:
        raise ParseError("missing polynomial list")
    parts = _split_top_level(blocks[0])
    if parts == [""]:
        raise ParseError("empty polynomial list")
    polys = [parse_polynomial(p, ring) for p in parts]
    symmetry = []
    if len(blocks) > 1:
        symmetry = parse_permutations("{" + blocks[1] + "}")
        for p in symmetry:
            if len(p) != ring.n:
                raise ParseError("permutation length does not match ring")
    if len(blocks) > 2:
        raise ParseError("unexpected extra block")
    return InputDocument(ring, polys, symmetry)


def _first_term_exponent(text, ring):
    """Exponent of the first (marked) term of a polynomial in text form."""
    s = text.strip()
    depth = 0
    end = len(s)
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            end = i
            break
    head = parse_polynomial(s[:end], ring)
    if not head.is_monomial():
        raise ParseError(f"marked term {s[:end]!r} is not a monomial")
    return next(iter(head.terms))


def _parse_marked_gb(block, ring):
    elements = []
    for part in _split_top_level(block):
        if not part:
            raise ParseError("empty polynomial in basis block")
        f = parse_polynomial(part, ring)
        m = _first_term_exponent(part, ring)
        if m not in f.terms:
            raise ParseError("marked term cancelled in polynomial")
        f = f * (1 / f.terms[m])
        elements.append((f, m))
    elements.sort(key=lambda gm: _drl_key(gm[1]))
    return MarkedReducedGB(tuple(elements), None, ring)


def parse_start_document(text):
    """Ring line, two marked-basis blocks, optional symmetry block."""
    lines = text.split("\n")
    idx = next((i for i, l in enumerate(lines) if l.strip()), None)
    if idx is None:
        raise ParseError("empty input")
    ring = _parse_ring_line(lines[idx])
    blocks = _brace_blocks("\n".join(lines[idx + 1:]))
    if len(blocks) < 2:
        raise ParseError("expected two marked basis blocks")
    initial = _parse_marked_gb(blocks[0], ring)
    full = _parse_marked_gb(blocks[1], ring)
    if initial.marks() != full.marks():
        raise ParseError("basis blocks have mismatched marked terms")
    symmetry = []
    if len(blocks) > 2:
        symmetry = parse_permutations("{" + blocks[2] + "}")
    if len(blocks) > 3:
        raise ParseError("unexpected extra block")
    return GroebnerConePair(initial, full), ring, symmetry


# ---------------------------------------------------------------------------
# Serialization


def format_pair(pair, ring):
    out = ["Q[" + ",".join(ring.names) + "]"]
    for gb in (pair.initial_gb, pair.full_gb):
        body = [format_polynomial(g, first=m) for g, m in gb.elements]
        out.append("{")
        out.append(",\n".join(body) + "}")
    return "\n".join(out) + "\n"


def _format_vector(v):
    return "(" + ",".join(map(str, v)) + ")"


def _format_vector_block(vectors):
    if not vectors:
        return "{}"
    return "{" + ",\n ".join(_format_vector(v) for v in vectors) + "}"


def build_report(result):
    """The annotated traversal report, fields in fixed order."""
    stats = result.stats
    homog = result.lineality_dim
    lines = []
    lines.append(f"Ambient dimension: {stats.ambient}")
    lines.append(f"Dimension of homogeneity space: {homog}")
    lines.append(f"Dimension of tropical variety: {stats.dim}")
    lines.append(f"Simplicial: {'true' if stats.simplicial else 'false'}")
    order = result.group.order if result.group is not None else 1
    lines.append(f"Order of input symmetry group: {order}")
    lines.append("F-vector: (" + ",".join(map(str, stats.f_vector)) + ")")
    lines.append("Modulo the homogeneity space:")
    lines.append(_format_vector_block(result.homogeneity_basis))

    ray_cones = stats.faces_by_dim.get(homog + 1, [])
    rays = sorted(c.extreme_rays()[0] for c in ray_cones)
    ray_index = {r: i for i, r in enumerate(rays)}
    lines.append("Rays:")
    if rays:
        body = ",\n ".join(f"{i}: {_format_vector(r)}" for i, r in enumerate(rays))
        lines.append("{" + body + "}")
    else:
        lines.append("{}")

    def incident(c):
        return tuple(i for r, i in sorted(ray_index.items()) if c.contains(r))

    for d in range(stats.dim, homog + 1, -1):
        label = d - homog
        cones = stats.faces_by_dim.get(d, [])
        sets = sorted(incident(c) for c in cones)
        lines.append(f"Rays incident to each dimension {label} cone:")
        if sets:
            body = ",\n".join("{" + ",".join(map(str, s)) + "}" for s in sets)
            lines.append("{" + body + "}")
        else:
            lines.append("{}")

    for d in range(stats.dim, homog, -1):
        label = d - homog
        cones = stats.faces_by_dim.get(d, [])
        orbits = Counter()
        for c in cones:
            orbits[canonical_orbit_representative(c, result.group).key()] += 1
        sizes = Counter(orbits.values())
        parts = [
            f"{count} orbits of size {size}"
            for size, count in sorted(sizes.items(), reverse=True)
        ]
        lines.append(
            f"Orbits of dimension {label} cones: " + (", ".join(parts) or "none")
        )
    return "\n".join(lines) + "\n"


def _format_slices(fan):
    lines = ["Restriction to first coordinate = 1:"]
    slices = restrict_to_unit_first_coordinate(fan)
    lines.append(f"Number of polyhedra: {len(slices)}")
    for i, s in enumerate(slices):
        lines.append(f"Polyhedron {i}:")
        lines.append(" equations: " + _format_vector_block(s.equations))
        lines.append(" inequalities: " + _format_vector_block(s.inequalities))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Subcommands


def cmd_startingcone(args, text, out):
    doc = parse_input_document(text)
    ring = doc.ring
    ideal = Ideal(doc.polynomials, ring)
    if not ideal.is_homogeneous():
        print(
            "warning: input is not homogeneous; homogenizing the reduced "
            "Groebner basis with an extra first variable",
            file=sys.stderr,
        )
        ring = ring.extended()
        gens = [homogenize(g, ring) for g in ideal.gb().polynomials()]
        ideal = Ideal(gens, ring)
    pair = starting_cone(ideal, args.seed)
    out.write(format_pair(pair, ring))
    if doc.symmetry:
        out.write(format_permutations(doc.symmetry) + "\n")
    return EXIT_OK


def cmd_traverse(args, text, out):
    pair, ring, perms = parse_start_document(text)
    group = None
    if args.symmetry:
        if not perms:
            raise ValueError("--symmetry given but no permutations in input")
        group = close_group(perms, ring.n)
        ideal = Ideal(pair.full_gb.polynomials(), ring)
        if not check_ideal_invariance(ideal, group):
            raise ValueError("a supplied permutation does not keep the ideal invariant")
    print(
        "warning: the traversal assumes the input ideal is prime; for "
        "non-prime input the result may be a single connected component",
        file=sys.stderr,
    )
    result = traverse(pair, symmetry=group, seed=args.seed, jobs=args.jobs)
    out.write(build_report(result))
    if args.restrict_northern:
        fan = Fan(ring.n, result.all_cones)
        out.write(_format_slices(fan))
    return EXIT_OK


def cmd_prevariety(args, text, out):
    doc = parse_input_document(text)
    fan = tropical_prevariety(doc.polynomials)
    cones = fan.cones
    lines = [f"Ambient dimension: {doc.ring.n}"]
    lines.append(f"Number of maximal cones: {len(cones)}")
    for i, c in enumerate(cones):
        lines.append(f"Maximal cone {i}:")
        lines.append(f" dimension: {c.dim}")
        lines.append(" equations: " + _format_vector_block(c.equations))
        lines.append(" inequalities: " + _format_vector_block(c.inequalities))
    out.write("\n".join(lines) + "\n")
    if args.restrict_northern:
        out.write(_format_slices(fan))
    return EXIT_OK


def cmd_curvebasis(args, text, out):
    doc = parse_input_document(text)
    ideal = Ideal(doc.polynomials, doc.ring)
    basis = tropical_basis_of_curve(ideal, args.seed)
    body = ",\n".join(format_polynomial(g) for g in basis)
    out.write("{\n" + body + "}\n")
    return EXIT_OK


def cmd_monomial(args, text, out):
    doc = parse_input_document(text)
    ideal = Ideal(doc.polynomials, doc.ring)
    mono = monomial_in_ideal(ideal)
    if mono is None:
        out.write("no\n")
    else:
        out.write((format_monomial(mono, doc.ring) or "1") + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tropfan",
        description="Tropical varieties of polynomial ideals, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, seed=False, traversal=False):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if traversal:
            p.add_argument("--symmetry", action="store_true")
            p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--restrict-northern", action="store_true")
        return p

    add("startingcone", cmd_startingcone, seed=True)
    add("traverse", cmd_traverse, seed=True, traversal=True)
    add("prevariety", cmd_prevariety)
    add("curvebasis", cmd_curvebasis, seed=True)
    add("monomial", cmd_monomial)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    text = sys.stdin.read()
    try:
        return args.func(args, text, sys.stdout)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except RetryExhausted as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RETRY
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
