"""Parser and printer for polynomial and trigonometric-polynomial expressions.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*``/``/``, which bind tighter than binary ``+``/``-``)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | VAR | '(' expr ')' | ('cos' | 'sin') '(' [INT '*'] VAR ')'

Numbers are integers or decimals and are read exactly.  Multiplication must
be explicit.  Trig atoms are only legal in trig mode, bare variables only in
algebraic mode.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exact import ParseError, rational_from_decimal
from .poly import UniPoly
from .trig import TrigPoly

ALGEBRAIC = "algebraic"
TRIG = "trig"


class ExprSyntaxError(ParseError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


# --- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Trig:
    func: str  # "cos" or "sin"
    k: int
    var: str


# --- tokenizer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        value = m.group(kind)
        if value == "**":
            value = "^"
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, mode: str):
        if mode not in (ALGEBRAIC, TRIG):
            raise ValueError(f"unknown mode {mode!r}")
        self.tokens = _tokenize(text)
        self.i = 0
        self.mode = mode

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value or kind == "end":
            what = "end of input" if kind == "end" else repr(v)
            raise ExprSyntaxError(f"expected {value!r}, found {what}", pos)

    def parse(self):
        e = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {v!r}", pos)
        return e

    def expr(self):
        e = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            e = BinOp(op, e, self.term())
        return e

    def term(self):
        e = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            e = BinOp(op, e, self.unary())
        return e

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, v, pos = self.take()
            if kind != "num" or not v.isdigit():
                what = "end of input" if kind == "end" else repr(v)
                raise ExprSyntaxError(f"exponent must be a nonnegative integer literal, found {what}", pos)
            return Pow(base, int(v))
        return base

    def atom(self):
        kind, v, pos = self.take()
        if kind == "num":
            return Num(rational_from_decimal(v))
        if kind == "name":
            if v in ("cos", "sin") and self.peek()[:2] == ("op", "("):
                if self.mode != TRIG:
                    raise ExprSyntaxError(f"{v}(...) is only allowed in trig mode", pos)
                return self.trig_atom(v)
            if self.mode == TRIG:
                raise ExprSyntaxError(f"bare variable {v!r} in trig mode", pos)
            return Var(v)
        if (kind, v) == ("op", "("):
            e = self.expr()
            self.expect(")")
            return e
        what = "end of input" if kind == "end" else repr(v)
        raise ExprSyntaxError(f"unexpected {what}", pos)

    def trig_atom(self, func: str):
        self.expect("(")
        kind, v, pos = self.take()
        k = 1
        if kind == "num":
            if not v.isdigit():
                raise ExprSyntaxError("trig multiple must be a nonnegative integer", pos)
            k = int(v)
            self.expect("*")
            kind, v, pos = self.take()
        if kind != "name":
            raise ExprSyntaxError("expected a variable inside trig atom", pos)
        self.expect(")")
        return Trig(func, k, v)


def parse_expr(text: str, mode: str = ALGEBRAIC):
    """Parse ``text`` into an AST of :class:`Num`, :class:`Var`, :class:`Neg`,
    :class:`BinOp`, :class:`Pow` and :class:`Trig` nodes."""
    return _Parser(text, mode).parse()


# --- printing --------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(e) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Pow):
        return 4
    return 5


def _fmt_num(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1 or q < 0:
        return f"({q.numerator}/{q.denominator})"
    n = max(twos, fives)
    digits = str(q.numerator * 10**n // q.denominator).rjust(n + 1, "0")
    return f"{digits[:-n]}.{digits[-n:]}"


def print_expr(e) -> str:
    """Text for ``e`` that :func:`parse_expr` reads back to the same tree."""
    if isinstance(e, Num):
        return _fmt_num(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Trig):
        return f"{e.func}({e.var})" if e.k == 1 else f"{e.func}({e.k}*{e.var})"
    if isinstance(e, Neg):
        inner = print_expr(e.operand)
        return "-" + (f"({inner})" if _prec(e.operand) < 3 else inner)
    if isinstance(e, Pow):
        inner = print_expr(e.base)
        return (f"({inner})" if _prec(e.base) < 5 else inner) + f"^{e.exponent}"
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        left, right = print_expr(e.left), print_expr(e.right)
        if _prec(e.left) < p:
            left = f"({left})"
        if _prec(e.right) <= p:
            right = f"({right})"
        return f"{left}{e.op}{right}"
    raise TypeError(f"not an expression node: {e!r}")


# --- evaluation ------------------------------------------------------------


def variables(e) -> set[str]:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Trig):
        return {e.var}
    if isinstance(e, Neg):
        return variables(e.operand)
    if isinstance(e, Pow):
        return variables(e.base)
    if isinstance(e, BinOp):
        return variables(e.left) | variables(e.right)
    return set()


def _single_var(e, var: str | None, default: str) -> str:
    found = variables(e)
    if var is not None:
        extra = found - {var}
        if extra:
            raise ValueError(f"unexpected variable(s) {sorted(extra)}; expected {var!r}")
        return var
    if len(found) > 1:
        raise ValueError(f"expression uses several variables: {sorted(found)}")
    return found.pop() if found else default


def to_poly(e, var: str | None = None) -> UniPoly:
    """Evaluate an algebraic-mode AST to a :class:`UniPoly`."""
    v = _single_var(e, var, "x")

    def ev(n) -> UniPoly:
        if isinstance(n, Num):
            return UniPoly([n.value], v)
        if isinstance(n, Var):
            return UniPoly([0, 1], v)
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Pow):
            return ev(n.base) ** n.exponent
        if isinstance(n, BinOp):
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            if n.op == "*":
                return a * b
            if not b.is_constant():
                raise ValueError("division by a non-constant polynomial")
            return a / b[0]
        raise TypeError(f"node {n!r} not allowed in algebraic mode")

    return ev(e)


def to_trig(e, var: str | None = None) -> TrigPoly:
    """Evaluate a trig-mode AST to a :class:`TrigPoly` (products via product-to-sum)."""
    v = _single_var(e, var, "x")

    def ev(n) -> TrigPoly:
        if isinstance(n, Num):
            return TrigPoly.constant(n.value, v)
        if isinstance(n, Trig):
            if n.func == "cos":
                return TrigPoly.cos(n.k, 1, v)
            return TrigPoly.sin(n.k, 1, v) if n.k else TrigPoly((), (), v)
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Pow):
            return ev(n.base) ** n.exponent
        if isinstance(n, BinOp):
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            if n.op == "*":
                return a * b
            if not b.is_constant():
                raise ValueError("division by a non-constant expression")
            c = b.cos_coeffs[0] if b.cos_coeffs else Fraction(0)
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return a.scale(1 / c)
        raise TypeError(f"node {n!r} not allowed in trig mode")

    return ev(e)
