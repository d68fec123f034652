"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import to_rational


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so ``deg(0) + 1``
    fails loudly instead of producing a plausible number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class VariableMismatch(ValueError):
    """Operands use different variable names."""


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, eq=False)
class UniPoly:
    """``sum(coeffs[k] * var**k)``; ``coeffs`` is ascending and has no trailing zeros."""

    coeffs: tuple
    var: str = "x"

    def __init__(self, coeffs: Sequence = (), var: str = "x"):
        object.__setattr__(self, "coeffs", _strip(to_rational(c) for c in coeffs))
        object.__setattr__(self, "var", var)

    # construction helpers

    @classmethod
    def constant(cls, c, var: str = "x") -> UniPoly:
        return cls([c], var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> UniPoly:
        return cls([0] * k + [c], var)

    @classmethod
    def from_roots(cls, roots, var: str = "x") -> UniPoly:
        p = cls([1], var)
        for r in roots:
            p = p * cls([-to_rational(r), 1], var)
        return p

    @classmethod
    def _raw(cls, coeffs: tuple, var: str) -> UniPoly:
        # trusted path: coeffs are already Fractions with no trailing zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "var", var)
        return obj

    # basic properties

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and (
                self.var == other.var or len(self.coeffs) <= 1
            )
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self.render()!r})"

    def __str__(self):
        return self.render()

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # ring operations

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.var != self.var and not (self.is_constant() or other.is_constant()):
                raise VariableMismatch(f"{self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UniPoly([other], self.var)
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def _var_with(self, other: UniPoly) -> str:
        return self.var if not self.is_constant() or other.is_constant() else other.var

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(_strip(out), self._var_with(o))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly._raw((), self._var_with(o))
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly._raw(_strip(out), self._var_with(o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UniPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> UniPoly:
        c = to_rational(c)
        if c == 0:
            return UniPoly._raw((), self.var)
        return UniPoly._raw(tuple(a * c for a in self.coeffs), self.var)

    def __truediv__(self, c):
        c = to_rational(c)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return self.scale(1 / c)

    def shift_degree(self, k: int) -> UniPoly:
        """Multiply by ``var**k``."""
        if not self.coeffs:
            return self
        return UniPoly._raw((Fraction(0),) * k + self.coeffs, self.var)

    def with_var(self, var: str) -> UniPoly:
        return UniPoly._raw(self.coeffs, var)

    # calculus and division

    def derivative(self) -> UniPoly:
        return UniPoly._raw(
            _strip(k * c for k, c in enumerate(self.coeffs) if k), self.var
        )

    def divrem(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        return divrem(self, other)

    def __call__(self, t):
        return evaluate(self, t)

    def render(self, var: str | None = None) -> str:
        return render(self, var)


def ring_ops(p: UniPoly, q: UniPoly) -> dict:
    """Sum, difference and product of two polynomials, keyed by operation."""
    return {"add": p + q, "sub": p - q, "mul": p * q}


def derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def divrem(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division: ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    b = a._coerce(b)
    var = a._var_with(b)
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(r) - 1 < db:
        return UniPoly._raw((), var), UniPoly._raw(tuple(r), var)
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                r[k + j] -= c * bj
        r.pop()
    return UniPoly._raw(_strip(q), var), UniPoly._raw(_strip(r), var)


def normalize_leading(p: UniPoly) -> UniPoly:
    """Divide by ``|leading coefficient|`` so the leading coefficient is +1 or -1."""
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    return p / abs(p.leading)


def evaluate(p: UniPoly, t) -> Fraction:
    """Exact value of ``p`` at the rational ``t``."""
    t = to_rational(t)
    if not p.coeffs:
        return Fraction(0)
    # homogenized integer Horner: one reduction at the end instead of per step
    num, den = t.numerator, t.denominator
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ints = [c.numerator * (scale // c.denominator) for c in p.coeffs]
    acc = ints[-1]
    dpow = 1
    for c in reversed(ints[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return Fraction(acc, dpow * scale)


def content_primitive(p: UniPoly) -> tuple[Fraction, UniPoly]:
    """Split ``p`` as ``content * primitive``.

    The primitive part has coprime integer coefficients and a positive leading
    coefficient; the sign of ``p`` lives in the content.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no primitive part")
    ints, scale = integer_primitive(p.coeffs)
    if ints[-1] < 0:
        ints = [-c for c in ints]
        scale = -scale
    return scale, UniPoly(ints, p.var)


def integer_primitive(coeffs: Sequence[Fraction]) -> tuple[list[int], Fraction]:
    """Integer coefficients ``ints`` and a positive rational ``scale`` with ``coeffs = scale * ints``.

    ``ints`` has gcd 1 and keeps the signs of ``coeffs``.
    """
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
        if g == 1:
            break
    if g > 1:
        ints = [c // g for c in ints]
    return ints, Fraction(g, den)


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: UniPoly, var: str | None = None) -> str:
    """Descending-degree text such as ``10*x^6+6*x^5-11/2*x^3+9/16``."""
    v = var or p.var
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _fmt_rational(mag)
        else:
            power = v if k == 1 else f"{v}^{k}"
            body = power if mag == 1 else f"{_fmt_rational(mag)}*{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out
