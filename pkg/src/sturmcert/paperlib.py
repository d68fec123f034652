"""Coefficient families and the concrete polynomials of the Vietoris-type claims.

``b_k``: the Vietoris coefficients, ``b_{2k} = b_{2k+1} = binom(2k, k) / 4^k``.
``d_k``: ``d_{2k} = d_{2k+1} = (69/100)_k / k!`` with the rising factorial.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .poly import UniPoly
from .trig import TrigPoly, scale_argument

MAX_INDEX = 64

# exact readings of the decimal constants that appear in the claims
LEMMA1_ALPHA = Fraction(1229, 10000)
LEMMA7_FACTOR = Fraction(820, 33)
D_PARAMETER = Fraction(69, 100)


def _check_index(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise ValueError("index must be a nonnegative integer")
    if k > MAX_INDEX:
        raise ValueError(f"index {k} beyond supported range {MAX_INDEX}")


@functools.lru_cache(maxsize=None)
def vietoris_b(k: int) -> Fraction:
    _check_index(k)
    h = k // 2
    return Fraction(math.comb(2 * h, h), 4**h)


def vietoris_b_factorial_form(n: int) -> Fraction:
    """``b_n`` through the factorial expression with ``n1 = floor(n/2) + 1``.

    Kept only as an independent cross-check of :func:`vietoris_b`.
    """
    if n < 2:
        raise ValueError("factorial form is defined for n >= 2")
    n1 = n // 2 + 1
    return Fraction(
        math.factorial(2 * n1 - 3),
        2 ** (2 * n1 - 3) * math.factorial(n1 - 1) * math.factorial(n1 - 2),
    )


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; 1 for ``n = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Fraction(1)
    a = Fraction(a)
    for k in range(n):
        out *= a + k
    return out


@functools.lru_cache(maxsize=None)
def d_coeff(k: int) -> Fraction:
    _check_index(k)
    h = k // 2
    return pochhammer(D_PARAMETER, h) / math.factorial(h)


def build_T_n(n: int, var: str = "x") -> TrigPoly:
    """``sum_{k<=n} b_k cos(kx)``."""
    _check_index(n)
    return TrigPoly([vietoris_b(k) for k in range(n + 1)], (), var)


def build_C_n(n: int, var: str = "x") -> TrigPoly:
    """``sum_{k<=n} (-1)^k b_k cos(kx)``."""
    _check_index(n)
    return TrigPoly([(-1) ** k * vietoris_b(k) for k in range(n + 1)], (), var)


def _minus_lemma7_bound(var: str) -> TrigPoly:
    # -(820/33) (1 - cos(y)) in the variable y
    return TrigPoly([-LEMMA7_FACTOR, LEMMA7_FACTOR], (), var)


def build_P_n(n: int, var: str = "y") -> TrigPoly:
    """``C_n(10y) - (820/33)(1 - cos y)`` in the variable ``y = x/10``."""
    return scale_argument(build_C_n(n), 10, var) + _minus_lemma7_bound(var)


def build_Delta(var: str = "y") -> TrigPoly:
    """``sum_{k<=21} (-1)^k (b_k - b_22) cos(kx) - (820/33)(1 - cos(x/10))`` in ``y = x/10``.

    ``cos(kx)`` sits at index ``10k`` and ``cos(x/10)`` at index 1.
    """
    b22 = vietoris_b(22)
    in_x = TrigPoly([(-1) ** k * (vietoris_b(k) - b22) for k in range(22)], (), "x")
    return scale_argument(in_x, 10, var) + _minus_lemma7_bound(var)


def build_I(var: str = "x") -> TrigPoly:
    """``sum_{k<=21} (b_k - (b_22/d_22) d_k) cos(kx)``."""
    ratio = vietoris_b(22) / d_coeff(22)
    return TrigPoly([vietoris_b(k) - ratio * d_coeff(k) for k in range(22)], (), var)


def build_eta(var: str = "x") -> UniPoly:
    return UniPoly(
        [Fraction(9, 16), Fraction(11, 8), Fraction(29, 8), Fraction(-11, 2), -12, 6, 10],
        var,
    )


def build_mu(var: str = "x") -> UniPoly:
    """``eta * eta'' - eta'^2 / 2``."""
    eta = build_eta(var)
    d1 = eta.derivative()
    return eta * d1.derivative() - (d1 * d1) / 2


def build_nu(var: str = "x", alpha: Fraction = LEMMA1_ALPHA) -> UniPoly:
    """``(1 - x^2)^3 mu^2 - 4 alpha x^2 eta^3`` with ``alpha = 1229/10000``."""
    eta = build_eta(var)
    mu = build_mu(var)
    one_minus_x2 = UniPoly([1, 0, -1], var)
    return one_minus_x2**3 * mu * mu - UniPoly.monomial(2, 4 * alpha, var) * eta**3
