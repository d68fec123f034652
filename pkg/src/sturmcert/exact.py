"""Exact rational scalars and certified rational enclosures of pi and cos.

Everything here works on :class:`fractions.Fraction`; no floating point is
used on any path that produces an enclosure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

_DECIMAL_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)")


class ParseError(ValueError):
    """Raised for malformed numeric literals."""


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval ``[lo, hi]`` known to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def contains(self, other: Enclosure) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def rational_from_decimal(text: str) -> Fraction:
    """Exact value of a decimal literal such as ``"0.1229"`` or ``"-3"``."""
    s = text.strip()
    if not _DECIMAL_RE.fullmatch(s):
        raise ParseError(f"not a decimal literal: {text!r}")
    return Fraction(s)


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or string (decimal or ``num/den``) exactly.

    Floats are refused: they are already rounded.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if "/" in s:
            num, _, den = s.partition("/")
            try:
                return Fraction(int(num), int(den))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"not a rational literal: {value!r}") from exc
        return rational_from_decimal(s)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def _alternating_enclosure(terms, eps: Fraction) -> Enclosure:
    # terms must alternate in sign with non-increasing magnitudes
    total = Fraction(0)
    for term in terms:
        if abs(term) < eps / 2:
            a, b = total, total + term
            return Enclosure(min(a, b), max(a, b))
        total += term
    raise AssertionError("series generator exhausted")


def cos_enclosure(x, eps) -> Enclosure:
    """Enclose ``cos(x)`` with a width below ``eps``.

    Sums the Taylor series until the first term of magnitude below ``eps/2``;
    that term bounds the tail (alternating series with decreasing terms).
    """
    x = to_rational(x)
    eps = to_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if abs(x) > 4:
        raise ValueError("cos_enclosure supports |x| <= 4")
    x2 = x * x
    total = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        # stopping is only sound once term magnitudes decrease for good
        if x2 <= (2 * k + 1) * (2 * k + 2) and abs(term) < eps / 2:
            a, b = total, total + term
            return Enclosure(min(a, b), max(a, b))
        total += term
        term = -term * x2 / ((2 * k + 1) * (2 * k + 2))
        k += 1


def arctan_inv_enclosure(m: int, eps) -> Enclosure:
    """Enclose ``arctan(1/m)`` for an integer ``m >= 2`` with width below ``eps``."""
    eps = to_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if m < 2:
        raise ValueError("m must be at least 2")

    def terms():
        k = 0
        while True:
            yield Fraction((-1) ** k, (2 * k + 1) * m ** (2 * k + 1))
            k += 1

    return _alternating_enclosure(terms(), eps)


def pi_enclosure(eps) -> Enclosure:
    """Enclose pi via Machin's formula, ``pi = 16 atan(1/5) - 4 atan(1/239)``."""
    eps = to_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    # never coarser than 1e-3, so the result always sits inside (3, 22/7)
    eps = min(eps, Fraction(1, 1000))
    a = arctan_inv_enclosure(5, eps / 32)
    b = arctan_inv_enclosure(239, eps / 8)
    return Enclosure(16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo)


def cos_enclosure_decreasing(x: Enclosure, eps) -> Enclosure:
    """Enclose ``cos`` over an argument range inside ``[0, pi]``.

    cos is decreasing there, so the image of ``[x.lo, x.hi]`` is bounded by the
    lower enclosure at ``x.hi`` and the upper enclosure at ``x.lo``.
    """
    if x.lo < 0 or x.hi > 3:
        # 3 < pi keeps the monotonicity claim trivially true
        raise ValueError("argument range must lie in [0, 3]")
    return Enclosure(cos_enclosure(x.hi, eps).lo, cos_enclosure(x.lo, eps).hi)


def floor_to(value: Fraction, step: Fraction) -> Fraction:
    """Largest multiple of ``step`` not above ``value``."""
    return (value // step) * step


def ceil_to(value: Fraction, step: Fraction) -> Fraction:
    """Smallest multiple of ``step`` not below ``value``."""
    return -((-value) // step) * step
