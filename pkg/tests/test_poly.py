from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import golden_lines
from sturmcert.expr import parse_expr, to_poly
from sturmcert.paperlib import build_eta, build_mu
from sturmcert.poly import (
    MINUS_INFINITY,
    UniPoly,
    VariableMismatch,
    content_primitive,
    derivative,
    divrem,
    evaluate,
    normalize_leading,
    ring_ops,
)

y = UniPoly([0, 1], "y")
coeff = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(coeff, max_size=8).map(lambda c: UniPoly(c, "y"))
nonzero_polys = polys.filter(lambda p: not p.is_zero())
points = st.fractions(min_value=-5, max_value=5, max_denominator=20)


def P(text, var="x"):
    return to_poly(parse_expr(text), var)


def test_difference_of_squares():
    assert (y + 1) * (y - 1) == UniPoly([-1, 0, 1], "y")
    ops = ring_ops(y + 1, y - 1)
    assert ops["mul"] == P("y^2-1", "y")
    assert ops["add"] == 2 * y


@given(polys)
def test_additive_identity(p):
    assert p + UniPoly([], "y") == p
    assert p + 0 == p


def test_mu_from_eta():
    eta = build_eta()
    mu = eta * eta.derivative().derivative() - Fraction(1, 2) * eta.derivative() ** 2
    assert mu.coeffs[-3:] == (Fraction(-1890), Fraction(1200), Fraction(1200))
    assert mu.render() == golden_lines("mu.txt")[0]


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        UniPoly([0, 1], "x") + UniPoly([0, 1], "y")
    # constants adopt the other operand's variable
    assert (UniPoly([3], "x") * y).var == "y"


def test_zero_degree_sentinel():
    zero = UniPoly([])
    assert zero.degree is MINUS_INFINITY
    assert zero.degree < 0
    assert zero.degree != -1
    with pytest.raises(TypeError):
        zero.degree + 1


def test_trailing_zeros_stripped():
    p = UniPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1


def test_derivative_examples():
    assert derivative(UniPoly([7])).is_zero()
    assert derivative(build_eta()) == P("60*x^5+30*x^4-48*x^3-33/2*x^2+29/4*x+11/8")
    assert normalize_leading(derivative(build_mu())).render() == golden_lines("mu_chain_1_4.txt")[0]


def test_derivative_term_by_term_oracle():
    # symbolic differentiation of each term k c x^(k-1), done by hand
    eta = build_eta()
    expected = [k * c for k, c in enumerate(eta.coeffs)][1:]
    assert list(derivative(eta).coeffs) == expected


@given(polys, polys, coeff, coeff)
def test_derivative_linear(p, q, a, b):
    assert derivative(a * p + b * q) == a * derivative(p) + b * derivative(q)


def test_divrem_examples():
    q, r = divrem(P("y^2-2", "y"), y)
    assert q == y and r == UniPoly([-2], "y")
    mu = build_mu()
    mu1 = normalize_leading(mu.derivative())
    _, r = divrem(mu, mu1)
    assert normalize_leading(-r).render() == golden_lines("mu_chain_1_4.txt")[1]


@given(nonzero_polys)
def test_self_division(p):
    q, r = divrem(p, p)
    assert q == 1 and r.is_zero()


@given(polys, nonzero_polys)
def test_divrem_reconstruction(a, b):
    q, r = divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(y, UniPoly([], "y"))


def test_normalize_leading_examples():
    assert normalize_leading(P("-3*y+6", "y")) == P("-y+2", "y")
    p = 12000 * UniPoly.monomial(9) + 10800 * UniPoly.monomial(8)
    assert normalize_leading(p) == UniPoly.monomial(9) + Fraction(9, 10) * UniPoly.monomial(8)
    with pytest.raises(ValueError):
        normalize_leading(UniPoly([]))


@given(nonzero_polys, points)
def test_normalize_preserves_sign(p, t):
    a, b = evaluate(p, t), evaluate(normalize_leading(p), t)
    assert (a > 0) == (b > 0) and (a < 0) == (b < 0)
    assert abs(normalize_leading(p).leading) == 1


def test_evaluate_examples():
    from sturmcert.paperlib import build_nu

    assert evaluate(build_mu(), 0) == Fraction(401, 128)
    assert evaluate(build_nu(), 0) == Fraction(160801, 16384)
    assert evaluate(UniPoly([]), Fraction(3, 7)) == 0


@given(polys, points)
def test_evaluate_matches_naive_sum(p, t):
    assert evaluate(p, t) == sum((c * t**k for k, c in enumerate(p.coeffs)), Fraction(0))


@given(polys, polys, points)
def test_evaluate_multiplicative(p, q, t):
    assert evaluate(p * q, t) == evaluate(p, t) * evaluate(q, t)


def test_content_primitive_examples():
    c, prim = content_primitive(P("6*y+4", "y"))
    assert c == 2 and prim == P("3*y+2", "y")
    c, prim = content_primitive(P("1/2*y-1/3", "y"))
    assert c == Fraction(1, 6) and prim == P("3*y-2", "y")
    c, prim = content_primitive(P("-3*y+6", "y"))
    assert c == -3 and prim == P("y-2", "y")
    with pytest.raises(ValueError):
        content_primitive(UniPoly([]))


def test_content_primitive_round_trip():
    import math
    import random

    rng = random.Random(7)
    for _ in range(100):
        coeffs = [Fraction(rng.randint(-99, 99), rng.randint(1, 40)) for _ in range(rng.randint(1, 9))]
        coeffs[-1] = coeffs[-1] or Fraction(1)
        p = UniPoly(coeffs, "y")
        c, prim = content_primitive(p)
        assert all(x.denominator == 1 for x in prim.coeffs)
        assert math.gcd(*(int(x) for x in prim.coeffs)) == 1
        assert prim.leading > 0
        assert prim * c == p


def test_render_style():
    assert build_eta().render() == "10*x^6+6*x^5-12*x^4-11/2*x^3+29/8*x^2+11/8*x+9/16"
    assert UniPoly([]).render() == "0"
    assert UniPoly([0, -1]).render() == "-x"
