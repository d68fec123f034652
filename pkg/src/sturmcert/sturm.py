"""Sturm chains, sign variations and certified real-root counts.

Two chain normalizations are supported:

``"paper"``
    every member after ``X0`` divided by the absolute value of its leading
    coefficient (leading coefficient +1 or -1), computed over the rationals.
``"primitive"``
    every member scaled by a positive constant to coprime integer
    coefficients, computed with integer pseudo-remainders.  Much faster on
    high degrees; both give the same signs at every point.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import to_rational
from .poly import UniPoly, divrem, integer_primitive, normalize_leading

log = logging.getLogger(__name__)

NORMALIZATIONS = ("paper", "primitive")


class EndpointRootError(ValueError):
    """An interval endpoint is a root and the strict policy is in force."""

    def __init__(self, endpoint: str, value: Fraction):
        self.endpoint = endpoint
        self.value = value
        super().__init__(f"{endpoint} endpoint {value} is a root of the polynomial")


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __init__(self, lo, hi):
        lo, hi = to_rational(lo), to_rational(hi)
        if not lo < hi:
            raise ValueError(f"interval needs lo < hi, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def of(cls, iv) -> Interval:
        return iv if isinstance(iv, Interval) else cls(*iv)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, t) -> bool:
        return self.lo <= t <= self.hi


@dataclass(frozen=True)
class EndpointAdjustment:
    endpoint: str
    original: Fraction
    adjusted: Fraction


@dataclass(frozen=True)
class RootCount:
    """Distinct real roots in ``(lo, hi]`` as a variation difference."""

    count: int
    variations_at_lo: int
    variations_at_hi: int
    interval: Interval | None = None
    adjustments: tuple[EndpointAdjustment, ...] = ()

    def __post_init__(self):
        if self.count != self.variations_at_lo - self.variations_at_hi:
            raise AssertionError("root count is not the variation difference")
        if self.count < 0:
            raise AssertionError("negative variation difference")


def _int_sign_at(ints: Sequence[int], num: int, dpows: Sequence[int]) -> int:
    # sign of sum(c_k num^k den^(n-k)) = sign of p(num/den) since den > 0
    acc = ints[-1]
    for i, c in enumerate(reversed(ints[:-1]), start=1):
        acc = acc * num + c * dpows[i]
    return (acc > 0) - (acc < 0)


def _neg_prem_primitive(a: list[int], b: list[int]) -> list[int]:
    """Primitive part of ``-r`` where ``m*a = q*b + r`` for some integer ``m > 0``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    m = abs(lb)
    s = 1 if lb > 0 else -1
    while r and len(r) - 1 >= db:
        c = r[-1] * s
        shift = len(r) - 1 - db
        if m != 1:
            r = [m * x for x in r]
        for j, bj in enumerate(b):
            if bj:
                r[shift + j] -= c * bj
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    if not r:
        return []
    g = 0
    for x in r:
        g = math.gcd(g, x)
        if g == 1:
            break
    return [-x // g for x in r]


@dataclass(frozen=True, eq=False)
class SturmChain:
    members: tuple[UniPoly, ...]
    normalization: str
    _ints: tuple = field(repr=False, compare=False, default=())

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def signs_at(self, t) -> list[int]:
        t = to_rational(t)
        num, den = t.numerator, t.denominator
        top = max(len(c) for c in self._ints)
        dpows = [1] * top
        for i in range(1, top):
            dpows[i] = dpows[i - 1] * den
        return [_int_sign_at(c, num, dpows) for c in self._ints]

    def sign_variations(self, t) -> int:
        return sign_variations(self, t)


def _positive_int_form(p: UniPoly) -> list[int]:
    ints, _ = integer_primitive(p.coeffs)
    return ints


def build_chain(p: UniPoly, normalization: str = "paper") -> SturmChain:
    """Sturm chain of ``p`` down to the last nonzero remainder."""
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    if p.is_constant():
        raise ValueError("Sturm chain needs a polynomial of degree >= 1")

    if normalization == "paper":
        members = [p, normalize_leading(p.derivative())]
        while True:
            _, r = divrem(members[-2], members[-1])
            if r.is_zero():
                break
            members.append(normalize_leading(-r))
        ints = tuple(_positive_int_form(m) for m in members)
        return SturmChain(tuple(members), normalization, ints)

    ints = [_positive_int_form(p), _positive_int_form(p.derivative())]
    while True:
        nxt = _neg_prem_primitive(ints[-2], ints[-1])
        if not nxt:
            break
        ints.append(nxt)
        log.debug("chain member %d: degree %d", len(ints) - 1, len(nxt) - 1)
    members = tuple(UniPoly._raw(tuple(Fraction(c) for c in m), p.var) for m in ints)
    return SturmChain(members, normalization, tuple(ints))


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sign_variations(chain: SturmChain, t) -> int:
    """Sign changes in ``[X_i(t)]`` after dropping zeros."""
    return _variations(chain.signs_at(t))


def _is_root(chain: SturmChain, t: Fraction) -> bool:
    return chain.signs_at(t)[0] == 0


def reduced_chain(chain: SturmChain) -> SturmChain:
    """The chain divided through by its last member (the gcd of ``p`` and ``p'``).

    Its variation counts agree with ``chain`` away from roots and stay
    meaningful at multiple roots, where every member of ``chain`` vanishes.
    """
    g = chain.members[-1]
    if g.is_constant():
        return chain
    members = []
    for m in chain.members:
        q, r = divrem(m, g)
        assert r.is_zero(), "chain member not divisible by its last member"
        members.append(q)
    ints = tuple(_positive_int_form(m) for m in members)
    return SturmChain(tuple(members), chain.normalization, ints)


def _shrink(chain, endpoint, value, toward, margin, other_v):
    # move an endpoint root inward by margin, margin/2, ... until the moved
    # point is not a root and no other root lies in between
    step = margin
    while True:
        cand = value + step if toward > 0 else value - step
        if not _is_root(chain, cand):
            v_cand = sign_variations(chain, cand)
            if endpoint == "lo" and sign_variations(chain, value) - v_cand == 0:
                return cand, v_cand
            if endpoint == "hi" and v_cand - other_v == 1:
                return cand, v_cand
        step /= 2


def count_roots(
    p: UniPoly,
    iv,
    endpoint_policy: str = "strict",
    *,
    margin=None,
    chain: SturmChain | None = None,
    normalization: str = "primitive",
) -> RootCount:
    """Number of distinct real roots of ``p`` in ``(iv.lo, iv.hi]``.

    ``endpoint_policy="strict"`` raises :class:`EndpointRootError` when an
    endpoint is a root.  ``"shrink"`` moves such an endpoint inward (by
    ``margin``, halved as needed; default a quarter of the width) so that the
    count is over the open interval without its endpoint roots, and records the
    move in ``adjustments``.
    """
    iv = Interval.of(iv)
    if endpoint_policy not in ("strict", "shrink"):
        raise ValueError(f"unknown endpoint policy {endpoint_policy!r}")
    if chain is None:
        chain = build_chain(p, normalization)
    lo, hi = iv.lo, iv.hi
    lo_root, hi_root = _is_root(chain, lo), _is_root(chain, hi)
    if endpoint_policy == "strict":
        if lo_root:
            raise EndpointRootError("lo", lo)
        if hi_root:
            raise EndpointRootError("hi", hi)
        v_lo, v_hi = sign_variations(chain, lo), sign_variations(chain, hi)
        return RootCount(v_lo - v_hi, v_lo, v_hi, iv)

    margin = iv.width / 4 if margin is None else to_rational(margin)
    if margin <= 0:
        raise ValueError("margin must be positive")
    chain = reduced_chain(chain)
    adjustments = []
    v_lo, v_hi = sign_variations(chain, lo), sign_variations(chain, hi)
    new_lo, new_hi = lo, hi
    if lo_root:
        new_lo, v_lo = _shrink(chain, "lo", lo, +1, min(margin, iv.width / 2), v_hi)
        adjustments.append(EndpointAdjustment("lo", lo, new_lo))
    if hi_root:
        new_hi, v_hi = _shrink(chain, "hi", hi, -1, min(margin, (hi - new_lo) / 2), v_hi)
        adjustments.append(EndpointAdjustment("hi", hi, new_hi))
    return RootCount(v_lo - v_hi, v_lo, v_hi, Interval(new_lo, new_hi), tuple(adjustments))


class Verdict(str, enum.Enum):
    POSITIVE = "POSITIVE"
    ZERO_FREE = "ZERO-FREE"
    NOT_CERTIFIED = "NOT-CERTIFIED"


@dataclass(frozen=True)
class PositivityVerdict:
    verdict: Verdict
    roots: RootCount
    value_at_lo: Fraction
    value_at_hi: Fraction
    sample: Fraction
    value_at_sample: Fraction
    failed_check: str | None = None

    @property
    def certified(self) -> bool:
        return self.verdict is not Verdict.NOT_CERTIFIED


def certify_positive(
    p: UniPoly, iv, sample=None, *, chain: SturmChain | None = None
) -> PositivityVerdict:
    """POSITIVE iff no roots in the interval and ``p`` is positive at both ends and at ``sample``."""
    iv = Interval.of(iv)
    sample = iv.midpoint if sample is None else to_rational(sample)
    if sample not in iv:
        raise ValueError(f"sample {sample} outside [{iv.lo}, {iv.hi}]")
    roots = count_roots(p, iv, "strict", chain=chain)
    at_lo, at_hi, at_s = p(iv.lo), p(iv.hi), p(sample)
    failed = None
    if roots.count:
        failed = f"root count {roots.count} on ({iv.lo}, {iv.hi}]"
    elif at_lo <= 0:
        failed = "value at lo not positive"
    elif at_hi <= 0:
        failed = "value at hi not positive"
    elif at_s <= 0:
        failed = "value at sample not positive"
    verdict = Verdict.NOT_CERTIFIED if failed else Verdict.POSITIVE
    return PositivityVerdict(verdict, roots, at_lo, at_hi, sample, at_s, failed)


def certify_zero_free(
    p: UniPoly, iv, sample=None, *, chain: SturmChain | None = None
) -> PositivityVerdict:
    """ZERO-FREE iff ``p`` has no root on the closed interval."""
    iv = Interval.of(iv)
    sample = iv.midpoint if sample is None else to_rational(sample)
    roots = count_roots(p, iv, "strict", chain=chain)
    at_lo, at_hi, at_s = p(iv.lo), p(iv.hi), p(sample)
    failed = f"root count {roots.count} on ({iv.lo}, {iv.hi}]" if roots.count else None
    verdict = Verdict.NOT_CERTIFIED if failed else Verdict.ZERO_FREE
    return PositivityVerdict(verdict, roots, at_lo, at_hi, sample, at_s, failed)


def isolate_roots(
    p: UniPoly,
    iv,
    width,
    *,
    offsets: list | None = None,
    chain: SturmChain | None = None,
) -> list[Interval]:
    """Disjoint intervals of width at most ``width``, one per distinct root in ``(lo, hi]``.

    Bisects at midpoints; a midpoint that is itself a root is shifted right by
    a quarter of the current width, then an eighth, and so on.  Each shift is
    appended to ``offsets`` when given.
    """
    iv = Interval.of(iv)
    width = to_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if chain is None:
        chain = build_chain(p, "primitive")
    if _is_root(chain, iv.lo):
        raise EndpointRootError("lo", iv.lo)
    if _is_root(chain, iv.hi):
        raise EndpointRootError("hi", iv.hi)

    out: list[Interval] = []
    stack = [(iv.lo, iv.hi, sign_variations(chain, iv.lo), sign_variations(chain, iv.hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1 and b - a <= width:
            out.append(Interval(a, b))
            continue
        mid = (a + b) / 2
        step = (b - a) / 4
        while _is_root(chain, mid):
            shifted = (a + b) / 2 + step
            if offsets is not None:
                offsets.append(shifted - (a + b) / 2)
            mid = shifted
            step /= 2
        vm = sign_variations(chain, mid)
        # right half pushed first so results come out in increasing order
        stack.append((mid, b, vm, vb))
        stack.append((a, mid, va, vm))
    return out
