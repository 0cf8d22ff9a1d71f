import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropfan.poly import (
    DEGREVLEX,
    ParseError,
    Polynomial,
    RingDescriptor,
    TermOrder,
    compare,
    dehomogenize,
    format_polynomial,
    homogenize,
    initial_form,
    is_w_homogeneous,
    parse_polynomial,
    weight_order,
)

R3 = RingDescriptor(("x", "y", "z"))


def p(s, ring=R3):
    return parse_polynomial(s, ring)


# ---------------------------------------------------------------------------
# Initial forms


def test_initial_form_examples():
    f = p("x+y+z+1")
    assert initial_form(f, (0, 0, 1)) == p("x+y+1")
    assert initial_form(f, (0, 0, -1)) == p("z")
    assert initial_form(f, (0, 0, 0)) == f


def test_initial_form_dimension_mismatch():
    with pytest.raises(ValueError):
        initial_form(p("x"), (1, 0))


def test_is_w_homogeneous():
    assert is_w_homogeneous(p("x^2*y-z^3"), (1, 1, 1))
    r1 = RingDescriptor(("x",))
    assert not is_w_homogeneous(parse_polynomial("x+1", r1), (1,))
    r7 = RingDescriptor(tuple("abcdefg"))
    minor = parse_polynomial("-c^3+2*b*c*d-a*d^2-b^2*e+a*c*e", r7)
    assert is_w_homogeneous(minor, (1,) * 7)


# ---------------------------------------------------------------------------
# Homogenization


def test_homogenize_affine_line():
    f = parse_polynomial("x+y+1", RingDescriptor(("x", "y")))
    h = homogenize(f)
    assert h == parse_polynomial("x+y+x0", h.ring)


def test_homogenize_already_homogeneous():
    f = p("x^2+y*z")
    h = homogenize(f)
    assert all(e[0] == 0 for e in h.terms)


def test_homogenize_cubic_hand_expanded():
    f = p("x-(z+1)^3")
    h = homogenize(f)
    assert h == parse_polynomial("x0^2*x-(z+x0)^3", h.ring)


@given(st.lists(st.tuples(st.integers(-5, 5).filter(bool),
                          st.tuples(st.integers(0, 3), st.integers(0, 3))),
                min_size=0, max_size=6))
def test_homogenize_round_trip(term_list):
    ring = RingDescriptor(("x", "y"))
    f = Polynomial.zero(ring)
    for c, e in term_list:
        f = f + Polynomial.monomial(e, ring, c)
    assert dehomogenize(homogenize(f)) == f
    assert homogenize(f).is_homogeneous()


# ---------------------------------------------------------------------------
# Term orders


def test_degrevlex_example():
    assert compare(DEGREVLEX, (2, 1, 0), (1, 2, 0)) > 0


def test_weight_order_min_convention():
    # weight (1,0): y has lower weight, so it is preferred as initial term
    order = weight_order((1, 0), tiebreak="lex")
    assert compare(order, (0, 1), (1, 0)) > 0


def test_weight_sequence_decided_by_first_vector():
    order = weight_order((0, 0, 1), (0, 1, 0), tiebreak="lex")
    # z has weight 1 under the first vector, y has 0: y preferred
    assert compare(order, (0, 1, 0), (0, 0, 1)) > 0


def test_compare_total_order():
    exps = [(i, j, k) for i in range(3) for j in range(3) for k in range(3)]
    for order in (DEGREVLEX, TermOrder("lex"), weight_order((1, 2, 3))):
        for a in exps:
            for b in exps:
                c = compare(order, a, b)
                assert c == -compare(order, b, a)
                if a != b:
                    assert c != 0


@given(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)))
def test_initial_form_idempotent(e, w):
    f = p("x+y+z+x*y+x*z+y*z+1") + Polynomial.monomial(e, R3, 7)
    g = initial_form(f, w)
    assert initial_form(g, w) == g


# ---------------------------------------------------------------------------
# Text grammar


def test_parse_hankel_style_strings():
    r7 = RingDescriptor(tuple("abcdefg"))
    f = parse_polynomial("-c^3+2*b*c*d-a*d^2-b^2*e+a*c*e", r7)
    assert len(f.terms) == 5
    # implicit multiplication after a coefficient
    g = parse_polynomial("e^3-2d*e*f", r7)
    assert g == parse_polynomial("e^3-2*d*e*f", r7)


def test_parse_parentheses_and_powers():
    assert p("(x+y)^2") == p("x^2+2*x*y+y^2")


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_polynomial("", R3)
    with pytest.raises(ParseError):
        parse_polynomial("x+%", R3)
    with pytest.raises(ParseError):
        parse_polynomial("w+x", R3)  # unknown variable
    with pytest.raises(ParseError):
        parse_polynomial("x^", R3)


def test_format_parse_round_trip():
    for s in ("x+y+z+1", "-c", "x^2-2*x*y+y^2", "3*x*y*z"):
        ring = R3 if "c" not in s else RingDescriptor(("c",))
        f = parse_polynomial(s, ring)
        assert parse_polynomial(format_polynomial(f), ring) == f


def test_format_distinguished_first_term():
    f = p("x+y")
    assert format_polynomial(f, first=(0, 1, 0)) == "y+x"
