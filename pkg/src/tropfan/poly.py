"""Sparse multivariate polynomials over Q, term orders and initial forms.

Monomials are exponent tuples of machine ints, coefficients are gmpy2
rationals.  The weight convention is MIN throughout: the initial form of a
polynomial with respect to a weight vector is the sum of its terms of
lowest weight, and a weight-refined term order prefers lower weight,
breaking ties with an ordinary (max) term order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from gmpy2 import mpq

from .linalg import vec_dot

MAX_EXPONENT = 2**62  # checked bound; degrees in all workloads are tiny


@dataclass(frozen=True)
class RingDescriptor:
    names: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names) or not self.names:
            raise ValueError("ring variable names must be distinct and nonempty")

    @property
    def n(self):
        return len(self.names)

    def extended(self, name="x0"):
        """Ring with one extra homogenizing variable prepended."""
        new = name
        k = 0
        while new in self.names:
            k += 1
            new = f"{name}_{k}"
        return RingDescriptor((new,) + tuple(self.names))


class Polynomial:
    """Immutable sparse polynomial: dict from exponent tuple to nonzero mpq."""

    __slots__ = ("terms", "ring", "_hash")

    def __init__(self, terms, ring):
        clean = {}
        for e, c in terms.items():
            c = mpq(c)
            if c != 0:
                if any(x < 0 or x > MAX_EXPONENT for x in e):
                    raise OverflowError("exponent out of range")
                clean[tuple(e)] = c
        self.terms = clean
        self.ring = ring
        self._hash = None

    @classmethod
    def zero(cls, ring):
        return cls({}, ring)

    @classmethod
    def constant(cls, c, ring):
        return cls({(0,) * ring.n: mpq(c)}, ring)

    @classmethod
    def variable(cls, i, ring):
        e = [0] * ring.n
        e[i] = 1
        return cls({tuple(e): mpq(1)}, ring)

    @classmethod
    def monomial(cls, exponents, ring, coeff=1):
        return cls({tuple(exponents): mpq(coeff)}, ring)

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def support(self):
        return list(self.terms)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, mpq().__class__)):
            other = Polynomial.constant(other, self.ring)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(out, self.ring)

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, mpq().__class__)):
            return Polynomial({e: c * other for e, c in self.terms.items()}, self.ring)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k >>= 1
        return result

    def scale_to_integer(self):
        """Multiply by the positive rational making the coefficients coprime integers."""
        if not self.terms:
            return self
        lcm = 1
        for c in self.terms.values():
            d = int(c.denominator)
            lcm = lcm * d // _gcd(lcm, d)
        g = 0
        for c in self.terms.values():
            g = _gcd(g, abs(int(c * lcm)))
        factor = mpq(lcm, g)
        return Polynomial({e: c * factor for e, c in self.terms.items()}, self.ring)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Term orders


@dataclass(frozen=True)
class TermOrder:
    """Total (pre)order on monomials; the maximum is the initial term.

    kinds:
      "lex", "degrevlex"     -- ordinary max term orders
      "weight"               -- compare weights in sequence, LOWER weight
                                first (min convention), then tiebreak
      "elim1"                -- eliminate the first variable, degrevlex on
                                the rest (used for saturation)
    """

    kind: str
    weights: tuple = ()
    tiebreak: str = "degrevlex"

    def key(self, e):
        if self.kind == "lex":
            return e
        if self.kind == "degrevlex":
            return _drl_key(e)
        if self.kind == "elim1":
            return (e[0], _drl_key(e[1:]))
        if self.kind == "weight":
            head = tuple(-vec_dot(w, e) for w in self.weights)
            tail = e if self.tiebreak == "lex" else _drl_key(e)
            return head + (tail,)
        raise ValueError(f"unknown term order kind {self.kind!r}")


def _drl_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


LEX = TermOrder("lex")
DEGREVLEX = TermOrder("degrevlex")


def weight_order(*weights, tiebreak="degrevlex"):
    return TermOrder("weight", tuple(tuple(w) for w in weights), tiebreak)


def compare(order, a, b):
    """-1, 0 or 1; positive means a is preferred as initial term over b."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of different lengths")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def leading_exponent(f, order):
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    return max(f.terms, key=order.key)


# ---------------------------------------------------------------------------
# Initial forms, weight homogeneity, homogenization


def initial_form(f, w):
    """Sum of the terms of f of lowest w-weight."""
    if f.is_zero():
        return f
    if len(w) != f.ring.n:
        raise ValueError("weight vector length does not match ring")
    weights = {e: vec_dot(w, e) for e in f.terms}
    lo = min(weights.values())
    return Polynomial(
        {e: c for e, c in f.terms.items() if weights[e] == lo}, f.ring
    )


def is_w_homogeneous(f, w):
    """True iff all terms of f have equal w-weight."""
    ws = {vec_dot(w, e) for e in f.terms}
    return len(ws) <= 1


def homogenize(f, ring_ext=None):
    """Homogenize with an extra variable prepended; setting it to 1 recovers f."""
    ring = ring_ext if ring_ext is not None else f.ring.extended()
    if f.is_zero():
        return Polynomial.zero(ring)
    d = f.total_degree()
    return Polynomial(
        {(d - sum(e),) + e: c for e, c in f.terms.items()}, ring
    )


def dehomogenize(f, ring_orig=None):
    """Set the first variable to 1."""
    ring = ring_orig if ring_orig is not None else RingDescriptor(f.ring.names[1:])
    out = {}
    for e, c in f.terms.items():
        rest = e[1:]
        out[rest] = out.get(rest, 0) + c
    return Polynomial(out, ring)


# ---------------------------------------------------------------------------
# Text grammar


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|\-|\(|\))")


class ParseError(ValueError):
    def __init__(self, message, pos=None):
        super().__init__(message if pos is None else f"{message} (at offset {pos})")
        self.pos = pos


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.i = 0
        self.ring = ring
        self.var_index = {name: k for k, name in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            tok, _ = self.next()
            sign = -1 if tok == "-" else 1
        result = self.term() * sign
        while self.peek() in ("+", "-"):
            tok, _ = self.next()
            t = self.term()
            result = result - t if tok == "-" else result + t
        return result

    def term(self):
        result = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.next()
                result = result * self.factor()
            elif nxt is not None and (nxt[0].isdigit() or nxt in self.var_index or nxt == "("):
                # implicit product, e.g. "2d*e*f"
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.base()
        if self.peek() == "^":
            self.next()
            tok, pos = self.next() if self.i < len(self.tokens) else (None, None)
            if tok is None or not tok.isdigit():
                raise ParseError("expected integer exponent after '^'", pos)
            return base ** int(tok)
        return base

    def base(self):
        if self.i >= len(self.tokens):
            raise ParseError("unexpected end of input")
        tok, pos = self.next()
        if tok.isdigit():
            return Polynomial.constant(int(tok), self.ring)
        if tok in self.var_index:
            return Polynomial.variable(self.var_index[tok], self.ring)
        if tok == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", pos)
            self.next()
            return inner
        if tok == "-":
            return -self.factor()
        raise ParseError(f"unexpected token {tok!r}", pos)


def parse_polynomial(text, ring):
    """Parse the integer-coefficient polynomial grammar."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    p = _Parser(tokens, ring)
    result = p.expr()
    if p.i != len(p.tokens):
        raise ParseError(f"trailing input {p.tokens[p.i][0]!r}", p.tokens[p.i][1])
    return result


def format_monomial(e, ring):
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(ring.names[i])
        elif k > 1:
            parts.append(f"{ring.names[i]}^{k}")
    return "*".join(parts)


def format_polynomial(f, first=None, order=DEGREVLEX):
    """Render with integer coefficients, optionally a distinguished term first.

    Denominators are cleared by the least common multiple; integer content
    is kept so integer-coefficient polynomials round-trip unchanged.
    """
    if f.is_zero():
        return "0"
    lcm = 1
    for c in f.terms.values():
        d = int(c.denominator)
        lcm = lcm * d // _gcd(lcm, d)
    g = f * lcm
    exps = sorted(g.terms, key=order.key, reverse=True)
    if first is not None:
        exps = [first] + [e for e in exps if e != first]
    out = []
    for e, exp in enumerate(exps):
        c = int(g.terms[exp])
        mono = format_monomial(exp, f.ring)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if e == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)
