"""Cosine and sine polynomials and their rewriting as polynomials in ``Y = cos``.

``cos(kx) = T_k(cos x)`` and ``sin(kx) = sin(x) * U_{k-1}(cos x)``, so a
cosine polynomial becomes ``sum a_k T_k(Y)`` and a sine polynomial becomes
``sin(x)`` times ``sum a_k U_{k-1}(Y)``.  Multiple angles are handled by the
index of the Chebyshev polynomial alone, so there is no limit on ``k``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import to_rational
from .poly import UniPoly, _fmt_rational, _strip

_lock = threading.Lock()
_T_CACHE: list[list[int]] = [[1], [0, 1]]
_U_CACHE: list[list[int]] = [[1], [0, 2]]


def _extend(cache: list[list[int]], k: int) -> list[int]:
    # both kinds share P_k = 2Y P_{k-1} - P_{k-2}
    if k < len(cache):
        return cache[k]
    with _lock:
        while len(cache) <= k:
            a, b = cache[-1], cache[-2]
            nxt = [0] + [2 * c for c in a]
            for i, c in enumerate(b):
                nxt[i] -= c
            cache.append(nxt)
    return cache[k]


def chebyshev_T(k: int, var: str = "Y") -> UniPoly:
    """First-kind Chebyshev polynomial, ``T_k(cos x) = cos(kx)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return UniPoly(_extend(_T_CACHE, k), var)


def chebyshev_U(k: int, var: str = "Y") -> UniPoly:
    """Second-kind Chebyshev polynomial, ``U_k(cos x) sin x = sin((k+1)x)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return UniPoly(_extend(_U_CACHE, k), var)


def _clean(coeffs) -> tuple:
    return _strip(to_rational(c) for c in coeffs)


@dataclass(frozen=True)
class TrigPoly:
    """``sum cos_coeffs[k] cos(k*var) + sum sin_coeffs[k] sin(k*var)``.

    ``sin_coeffs[0]`` multiplies ``sin(0)`` and is always zero.
    """

    cos_coeffs: tuple = ()
    sin_coeffs: tuple = ()
    var: str = "x"

    def __init__(self, cos_coeffs: Sequence = (), sin_coeffs: Sequence = (), var: str = "x"):
        sin = list(_clean(sin_coeffs))
        if sin and sin[0] != 0:
            raise ValueError("sin(0*x) vanishes; sin_coeffs[0] must be zero")
        object.__setattr__(self, "cos_coeffs", _clean(cos_coeffs))
        object.__setattr__(self, "sin_coeffs", tuple(sin))
        object.__setattr__(self, "var", var)

    @classmethod
    def cos(cls, k: int, c=1, var: str = "x") -> TrigPoly:
        return cls([0] * k + [c], (), var)

    @classmethod
    def sin(cls, k: int, c=1, var: str = "x") -> TrigPoly:
        return cls((), [0] * k + [c], var)

    @classmethod
    def constant(cls, c, var: str = "x") -> TrigPoly:
        return cls([c], (), var)

    @property
    def is_cosine(self) -> bool:
        return not self.sin_coeffs

    @property
    def is_sine(self) -> bool:
        return not self.cos_coeffs

    def is_constant(self) -> bool:
        return len(self.cos_coeffs) <= 1 and not self.sin_coeffs

    def _same_var(self, other: TrigPoly) -> str:
        if self.var == other.var or other.is_constant():
            return self.var
        if self.is_constant():
            return other.var
        raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TrigPoly.constant(other, self.var)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        var = self._same_var(other)
        return TrigPoly(_add(self.cos_coeffs, other.cos_coeffs), _add(self.sin_coeffs, other.sin_coeffs), var)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TrigPoly:
        c = to_rational(c)
        return TrigPoly([a * c for a in self.cos_coeffs], [a * c for a in self.sin_coeffs], self.var)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        var = self._same_var(other)
        n = max(len(self.cos_coeffs), len(self.sin_coeffs)) + max(
            len(other.cos_coeffs), len(other.sin_coeffs)
        )
        cos = [Fraction(0)] * n
        sin = [Fraction(0)] * n
        # product-to-sum identities
        for i, a in enumerate(self.cos_coeffs):
            for j, b in enumerate(other.cos_coeffs):
                if a and b:
                    cos[i + j] += a * b / 2
                    cos[abs(i - j)] += a * b / 2
            for j, b in enumerate(other.sin_coeffs):
                if a and b:
                    sin[i + j] += a * b / 2
                    _add_sin(sin, j - i, a * b / 2)
        for i, a in enumerate(self.sin_coeffs):
            for j, b in enumerate(other.cos_coeffs):
                if a and b:
                    sin[i + j] += a * b / 2
                    _add_sin(sin, i - j, a * b / 2)
            for j, b in enumerate(other.sin_coeffs):
                if a and b:
                    cos[abs(i - j)] += a * b / 2
                    cos[i + j] -= a * b / 2
        if sin:
            sin[0] = Fraction(0)
        return TrigPoly(cos, sin, var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = TrigPoly.constant(1, self.var)
        for _ in range(n):
            out = out * self
        return out

    def render(self) -> str:
        return render_trig(self)

    def __str__(self):
        return self.render()


def _add(a: tuple, b: tuple) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _add_sin(sin: list, k: int, c: Fraction) -> None:
    # sin(k x) for possibly negative k
    if k > 0:
        sin[k] += c
    elif k < 0:
        sin[-k] -= c


def cos_to_alg(t: TrigPoly, var: str = "Y") -> UniPoly:
    """``sum a_k cos(k x)`` as ``sum a_k T_k(Y)`` in the monomial basis."""
    if not t.is_cosine:
        raise ValueError("sine terms present; use sin_to_alg")
    if not t.cos_coeffs:
        return UniPoly((), var)
    out = [Fraction(0)] * len(t.cos_coeffs)
    for k, a in enumerate(t.cos_coeffs):
        if a:
            for i, c in enumerate(_extend(_T_CACHE, k)):
                if c:
                    out[i] += a * c
    return UniPoly(out, var)


def sin_to_alg(t: TrigPoly, var: str = "Y") -> UniPoly:
    """The factor ``Q`` with ``sum a_k sin(k x) = sin(x) * Q(cos x)``."""
    if not t.is_sine:
        raise ValueError("cosine terms present; use cos_to_alg")
    if not t.sin_coeffs:
        return UniPoly((), var)
    out = [Fraction(0)] * (len(t.sin_coeffs) - 1)
    for k, a in enumerate(t.sin_coeffs):
        if k and a:
            for i, c in enumerate(_extend(_U_CACHE, k - 1)):
                if c:
                    out[i] += a * c
    return UniPoly(out, var)


def scale_argument(t: TrigPoly, m: int, var: str | None = None) -> TrigPoly:
    """Substitute ``x = m*y``: the coefficient of ``cos(kx)`` moves to ``cos(k m y)``."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("scale must be a positive integer")

    def spread(coeffs):
        out = [Fraction(0)] * ((len(coeffs) - 1) * m + 1) if coeffs else []
        for k, c in enumerate(coeffs):
            out[k * m] = c
        return out

    return TrigPoly(spread(t.cos_coeffs), spread(t.sin_coeffs), var or t.var)


def from_chebyshev_T(p: UniPoly, var: str = "x") -> TrigPoly:
    """Inverse of :func:`cos_to_alg`: re-express ``p(Y)`` in the ``T_k`` basis."""
    rem = list(p.coeffs)
    out = [Fraction(0)] * len(rem)
    for k in range(len(rem) - 1, -1, -1):
        c = rem[k]
        if c:
            tk = _extend(_T_CACHE, k)
            a = c / tk[-1]
            out[k] = a
            for i, ti in enumerate(tk):
                rem[i] -= a * ti
    return TrigPoly(out, (), var)


def render_trig(t: TrigPoly) -> str:
    """Text such as ``1-cos(10*y)+1/2*cos(20*y)``."""
    v = t.var
    terms = []
    for k, c in enumerate(t.cos_coeffs):
        if c:
            atom = "" if k == 0 else (f"cos({v})" if k == 1 else f"cos({k}*{v})")
            terms.append((c, atom))
    for k, c in enumerate(t.sin_coeffs):
        if c:
            terms.append((c, f"sin({v})" if k == 1 else f"sin({k}*{v})"))
    if not terms:
        return "0"
    out = ""
    for i, (c, atom) in enumerate(terms):
        sign = "-" if c < 0 else ("+" if i else "")
        mag = abs(c)
        if not atom:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = atom
        else:
            body = f"{_fmt_rational(mag)}*{atom}"
        out += sign + body
    return out
