import math
from fractions import Fraction

import pytest

from conftest import golden_lines
from sturmcert.expr import parse_expr, to_poly
from sturmcert.paperlib import (
    build_C_n,
    build_Delta,
    build_eta,
    build_I,
    build_mu,
    build_nu,
    build_T_n,
    d_coeff,
    pochhammer,
    vietoris_b,
    vietoris_b_factorial_form,
)
from sturmcert.trig import TrigPoly, cos_to_alg


def test_vietoris_b_examples():
    assert vietoris_b(0) == vietoris_b(1) == 1
    assert vietoris_b(4) == vietoris_b(5) == Fraction(3, 8)
    # big-integer binomial oracle at k = 11
    assert vietoris_b(22) == Fraction(math.comb(22, 11), 4**11) == Fraction(88179, 524288)


def test_factorial_form_examples():
    assert vietoris_b_factorial_form(2) == Fraction(1, 2)
    assert vietoris_b_factorial_form(4) == Fraction(3, 8)
    assert vietoris_b_factorial_form(5) == vietoris_b(5)
    with pytest.raises(ValueError):
        vietoris_b_factorial_form(1)


def test_factorial_form_agrees_to_50():
    for n in range(2, 51):
        assert vietoris_b(n) == vietoris_b_factorial_form(n)


def test_pochhammer():
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(Fraction(69, 100), 1) == Fraction(69, 100)
    assert pochhammer(Fraction(69, 100), 2) == Fraction(11661, 10000)
    assert pochhammer(1, 5) == math.factorial(5)


def test_d_coeff():
    assert d_coeff(0) == d_coeff(1) == 1
    assert d_coeff(2) == d_coeff(3) == Fraction(69, 100)
    # independent product for (69/100)_11 / 11!
    prod = Fraction(1)
    for j in range(11):
        prod *= Fraction(69 + 100 * j, 100)
    assert d_coeff(22) == prod / math.factorial(11)


def test_pairing():
    for k in range(26):
        assert vietoris_b(2 * k) == vietoris_b(2 * k + 1)
        assert d_coeff(2 * k) == d_coeff(2 * k + 1)


def test_d_even_strictly_decreasing():
    for k in range(1, 31):
        assert d_coeff(2 * k + 2) < d_coeff(2 * k)
        assert d_coeff(2 * k + 2) / d_coeff(2 * k) == (k + Fraction(69, 100)) / (k + 1)


def test_index_cap():
    with pytest.raises(ValueError):
        vietoris_b(65)


def test_build_C2():
    assert build_C_n(2) == TrigPoly([1, -1, Fraction(1, 2)], (), "x")


def test_T6_gives_eta():
    assert cos_to_alg(build_T_n(6), "x") == build_eta()


def test_eta():
    assert build_eta()(0) == Fraction(9, 16)
    assert build_eta() == to_poly(parse_expr("10*x^6+6*x^5-12*x^4-11/2*x^3+29/8*x^2+11/8*x+9/16"))


def test_mu_golden():
    mu = build_mu()
    assert mu.degree == 10
    assert mu.render() == golden_lines("mu.txt")[0]
    assert mu(0) == Fraction(401, 128)


def test_nu_golden():
    nu = build_nu()
    assert nu.degree == 26
    assert nu.leading == -1440000
    assert nu.coeffs[0] == Fraction(160801, 16384)
    assert nu.render() == golden_lines("nu.txt")[0]
    # the golden text parses back to the same polynomial
    assert to_poly(parse_expr(golden_lines("nu.txt")[0])) == nu


def test_build_I_top_coefficient():
    ratio = vietoris_b(22) / d_coeff(22)
    I = build_I()
    assert len(I.cos_coeffs) == 22
    assert I.cos_coeffs[21] == vietoris_b(21) - ratio * d_coeff(21)


def test_build_Delta_structure():
    D = build_Delta()
    assert len(D.cos_coeffs) == 211
    b22 = vietoris_b(22)
    assert D.cos_coeffs[210] == -(vietoris_b(21) - b22)
    assert D.cos_coeffs[1] == Fraction(820, 33)
    assert D.cos_coeffs[0] == 1 - b22 - Fraction(820, 33)
    assert all(c == 0 for k, c in enumerate(D.cos_coeffs) if k % 10 and k != 1)
