"""Expressions in one variable ``t``: parsing, printing, exact expansion and
dual-number evaluation.

Grammar (whitespace ignored)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ["^" exponent]
    exponent := INT | "(" ["-" | "+"] INT ")"
    atom     := NUMBER | "t" | "exp" "(" expr ")" | "(" expr ")"

Decimal literals become exact fractions.  Only integer exponents are accepted.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .dual import Dual
from .poly import Poly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        super().__init__(f"{message} at position {pos}" + (f" in {src!r}" if src else ""))


class EvaluationError(ArithmeticError):
    pass


# -- tree -----------------------------------------------------------------

class Expr:
    """Base node.  Subclasses are immutable."""

    prec = 100

    def eval(self, t: Dual) -> Dual:
        raise NotImplementedError

    def diff(self) -> Expr:
        raise NotImplementedError

    def to_poly(self) -> Poly | None:
        """Exact expansion as a polynomial in t, or None if not polynomial."""
        return None

    def _wrap(self, prec: int) -> str:
        s = str(self)
        return f"({s})" if self.prec < prec else s

    # building helpers with light constant folding
    def __add__(self, o) -> Expr:
        return add(self, lift(o))

    def __radd__(self, o) -> Expr:
        return add(lift(o), self)

    def __sub__(self, o) -> Expr:
        return sub(self, lift(o))

    def __rsub__(self, o) -> Expr:
        return sub(lift(o), self)

    def __mul__(self, o) -> Expr:
        return mul(self, lift(o))

    def __rmul__(self, o) -> Expr:
        return mul(lift(o), self)

    def __truediv__(self, o) -> Expr:
        return div(self, lift(o))

    def __neg__(self) -> Expr:
        return neg(self)


@dataclass(frozen=True, eq=False)
class Const(Expr):
    value: Fraction

    def eval(self, t):
        return Dual(float(self.value) + 0.0 * t.val, 0.0 * t.val)

    def diff(self):
        return ZERO

    def to_poly(self):
        return Poly.const(1, self.value)

    @property
    def prec(self):
        return 100 if self.value >= 0 and self.value.denominator == 1 else 0

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, eq=False)
class Var(Expr):
    def eval(self, t):
        return t

    def diff(self):
        return ONE

    def to_poly(self):
        return Poly.var(1, 0)

    def __str__(self):
        return "t"


@dataclass(frozen=True, eq=False)
class Add(Expr):
    left: Expr
    right: Expr
    prec = 1

    def eval(self, t):
        return self.left.eval(t) + self.right.eval(t)

    def diff(self):
        return add(self.left.diff(), self.right.diff())

    def to_poly(self):
        a, b = self.left.to_poly(), self.right.to_poly()
        return None if a is None or b is None else a + b

    def __str__(self):
        return f"{self.left._wrap(1)} + {self.right._wrap(2)}"


@dataclass(frozen=True, eq=False)
class Sub(Expr):
    left: Expr
    right: Expr
    prec = 1

    def eval(self, t):
        return self.left.eval(t) - self.right.eval(t)

    def diff(self):
        return sub(self.left.diff(), self.right.diff())

    def to_poly(self):
        a, b = self.left.to_poly(), self.right.to_poly()
        return None if a is None or b is None else a - b

    def __str__(self):
        return f"{self.left._wrap(1)} - {self.right._wrap(2)}"


@dataclass(frozen=True, eq=False)
class Mul(Expr):
    left: Expr
    right: Expr
    prec = 2

    def eval(self, t):
        return self.left.eval(t) * self.right.eval(t)

    def diff(self):
        return add(mul(self.left.diff(), self.right), mul(self.left, self.right.diff()))

    def to_poly(self):
        a, b = self.left.to_poly(), self.right.to_poly()
        return None if a is None or b is None else a * b

    def __str__(self):
        return f"{self.left._wrap(2)}*{self.right._wrap(3)}"


@dataclass(frozen=True, eq=False)
class Div(Expr):
    left: Expr
    right: Expr
    prec = 2

    def eval(self, t):
        den = self.right.eval(t)
        if np.any(np.asarray(den.val) == 0):
            raise EvaluationError(f"division by zero evaluating {self}")
        return self.left.eval(t) / den

    def diff(self):
        num = sub(mul(self.left.diff(), self.right), mul(self.left, self.right.diff()))
        return div(num, power(self.right, 2))

    def to_poly(self):
        a, b = self.left.to_poly(), self.right.to_poly()
        if a is None or b is None or not b.is_constant() or b.is_zero():
            return None
        return a / b.constant_term()

    def __str__(self):
        return f"{self.left._wrap(2)}/{self.right._wrap(3)}"


@dataclass(frozen=True, eq=False)
class Neg(Expr):
    arg: Expr
    prec = 2

    def eval(self, t):
        return -self.arg.eval(t)

    def diff(self):
        return neg(self.arg.diff())

    def to_poly(self):
        a = self.arg.to_poly()
        return None if a is None else -a

    def __str__(self):
        return f"-{self.arg._wrap(3)}"


@dataclass(frozen=True, eq=False)
class Pow(Expr):
    base: Expr
    exponent: int
    prec = 4

    def eval(self, t):
        b = self.base.eval(t)
        if self.exponent < 0 and np.any(np.asarray(b.val) == 0):
            raise EvaluationError(f"negative power of zero evaluating {self}")
        return b**self.exponent

    def diff(self):
        k = self.exponent
        return mul(mul(Const(Fraction(k)), power(self.base, k - 1)), self.base.diff())

    def to_poly(self):
        if self.exponent < 0:
            return None
        a = self.base.to_poly()
        return None if a is None else a**self.exponent

    def __str__(self):
        k = self.exponent
        return f"{self.base._wrap(5)}^{k if k >= 0 else f'({k})'}"


@dataclass(frozen=True, eq=False)
class Exp(Expr):
    arg: Expr

    def eval(self, t):
        return self.arg.eval(t).exp()

    def diff(self):
        return mul(self.arg.diff(), self)

    def __str__(self):
        return f"exp({self.arg})"


@dataclass(frozen=True, eq=False)
class Numeric(Expr):
    """Leaf backed by a callable ``t -> (value, derivative)``.

    ``derivative`` may be None, in which case ``diff()`` yields a leaf whose own
    derivative is unknown (NaN).
    """

    fn: Callable
    label: str = "numeric"
    derivative: Callable | None = None

    def eval(self, t):
        val, der = self.fn(t.val)
        if der is None:
            der = np.full_like(np.asarray(val, dtype=float), np.nan)
        return Dual(val, der * t.der)

    def diff(self):
        if self.derivative is not None:
            return Numeric(self.derivative, f"d/dt {self.label}")
        fn = self.fn
        return Numeric(lambda t: (fn(t)[1], None), f"d/dt {self.label}")

    def __str__(self):
        return f"<{self.label}>"


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))
T = Var()


def lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, ScalarFn):
        return x.expr
    if isinstance(x, float):
        return Const(Fraction(repr(x)))
    return Const(Fraction(x))


def _is(e: Expr, v) -> bool:
    return isinstance(e, Const) and e.value == v


def add(a: Expr, b: Expr) -> Expr:
    if _is(a, 0):
        return b
    if _is(b, 0):
        return a
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value + b.value)
    return Add(a, b)


def sub(a: Expr, b: Expr) -> Expr:
    if _is(b, 0):
        return a
    if _is(a, 0):
        return neg(b)
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value - b.value)
    return Sub(a, b)


def mul(a: Expr, b: Expr) -> Expr:
    if _is(a, 0) or _is(b, 0):
        return ZERO
    if _is(a, 1):
        return b
    if _is(b, 1):
        return a
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value * b.value)
    return Mul(a, b)


def div(a: Expr, b: Expr) -> Expr:
    if _is(b, 0):
        raise ZeroDivisionError("division by the constant 0")
    if _is(a, 0):
        return ZERO
    if _is(b, 1):
        return a
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value / b.value)
    return Div(a, b)


def neg(a: Expr) -> Expr:
    if isinstance(a, Const):
        return Const(-a.value)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def power(a: Expr, k: int) -> Expr:
    if k == 0:
        return ONE
    if k == 1:
        return a
    if isinstance(a, Const) and (k > 0 or a.value):
        return Const(a.value**k)
    return Pow(a, k)


def exp(a: Expr) -> Expr:
    if _is(a, 0):
        return ONE
    return Exp(a)


# -- parser ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+\.\d*|\.\d+|\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    pos = 0
    out = []
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            bad = len(src) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[bad]!r}", bad, src)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op: str):
        kind, text, pos = self.take()
        if text != op or kind != "op":
            raise ParseError(f"expected {op!r}, found {text or 'end of input'!r}", pos, self.src)

    def error(self, msg: str, pos: int):
        raise ParseError(msg, pos, self.src)

    def parse(self) -> Expr:
        e = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            self.error(f"unexpected {text!r}", pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.unary()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def unary(self) -> Expr:
        kind, text, _ = self.peek()
        if kind == "op" and text in "+-":
            self.take()
            arg = self.unary()
            return Neg(arg) if text == "-" else arg
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        kind, text, pos = self.peek()
        if kind == "op" and text == "^":
            self.take()
            k = self.exponent()
            if self.peek()[1] == "^":
                self.error("chained exponents are ambiguous; add parentheses", self.peek()[2])
            return Pow(base, k)
        return base

    def exponent(self) -> int:
        kind, text, pos = self.take()
        if kind == "num":
            if not text.isdigit():
                self.error("non-integer exponent", pos)
            return int(text)
        if kind == "op" and text == "(":
            sign = 1
            if self.peek()[1] in ("+", "-"):
                sign = -1 if self.take()[1] == "-" else 1
            kind, text, p2 = self.take()
            if kind != "num" or not text.isdigit():
                self.error("non-integer exponent", p2)
            if self.peek()[1] != ")":
                self.error("non-integer exponent", self.peek()[2])
            self.take()
            return sign * int(text)
        self.error("non-integer exponent", pos)

    def atom(self) -> Expr:
        kind, text, pos = self.take()
        if kind == "num":
            return Const(Fraction(text))
        if kind == "name":
            if text == "t":
                return T
            if text == "exp":
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Exp(arg)
            self.error(f"unknown identifier {text!r}", pos)
        if kind == "op" and text == "(":
            e = self.expr()
            self.expect(")")
            return e
        self.error(f"unexpected {text or 'end of input'!r}", pos)


def parse(src: str) -> Expr:
    """Parse an expression in ``t``; raises :class:`ParseError` with a position."""
    if not isinstance(src, str):
        raise TypeError("expression source must be a string")
    return _Parser(src).parse()


# -- scalar functions -----------------------------------------------------

def eval_dual(expr: Expr, t):
    """``(value, derivative)`` of ``expr`` at ``t`` (scalar or array)."""
    arr = np.asarray(t, dtype=float)
    out = expr.eval(Dual(arr, np.ones_like(arr)))
    val = np.broadcast_to(out.val, arr.shape).astype(float)
    der = np.broadcast_to(out.der, arr.shape).astype(float)
    if arr.ndim == 0:
        return float(val), float(der)
    return val.copy(), der.copy()


class ScalarFn:
    """A function of ``t`` carried as an expression tree."""

    __slots__ = ("expr",)

    def __init__(self, expr):
        if isinstance(expr, str):
            expr = parse(expr)
        self.expr = lift(expr)

    @classmethod
    def const(cls, c) -> ScalarFn:
        return cls(lift(c))

    def eval_dual(self, t):
        return eval_dual(self.expr, t)

    def __call__(self, t):
        return self.eval_dual(t)[0]

    def derivative(self) -> ScalarFn:
        return ScalarFn(self.expr.diff())

    def to_poly(self) -> Poly | None:
        return self.expr.to_poly()

    def is_zero(self) -> bool:
        return _is(self.expr, 0)

    def __add__(self, o):
        return ScalarFn(add(self.expr, lift(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return ScalarFn(sub(self.expr, lift(o)))

    def __rsub__(self, o):
        return ScalarFn(sub(lift(o), self.expr))

    def __mul__(self, o):
        return ScalarFn(mul(self.expr, lift(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return ScalarFn(div(self.expr, lift(o)))

    def __neg__(self):
        return ScalarFn(neg(self.expr))

    def __str__(self):
        return str(self.expr)

    def __repr__(self):
        return f"ScalarFn({self.expr})"


# -- parity ---------------------------------------------------------------

class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"
    UNKNOWN = "unknown"


def poly_parity(p: Poly) -> Parity:
    """Parity of a univariate polynomial; the zero polynomial counts as even."""
    degrees = {e[0] % 2 for e in p.terms}
    if degrees <= {0}:
        return Parity.EVEN
    if degrees == {1}:
        return Parity.ODD
    return Parity.NONE


PARITY_GRID = np.linspace(0.05, 2.0, 40)


def parity(expr, grid=PARITY_GRID, tol: float = 1e-10) -> Parity:
    """Parity of ``expr``.

    Polynomial expressions are decided exactly.  Anything else is sampled at
    ``+-grid``: a failure of both ``f(-t) = f(t)`` and ``f(-t) = -f(t)`` proves
    ``NONE``; otherwise the answer is ``UNKNOWN``.
    """
    expr = lift(expr)
    p = expr.to_poly()
    if p is not None:
        return poly_parity(p)
    try:
        fp = eval_dual(expr, grid)[0]
        fm = eval_dual(expr, -grid)[0]
    except (EvaluationError, ZeroDivisionError, FloatingPointError):
        return Parity.UNKNOWN
    scale = np.maximum(1.0, np.maximum(np.abs(fp), np.abs(fm)))
    even = np.all(np.abs(fm - fp) <= tol * scale)
    odd = np.all(np.abs(fm + fp) <= tol * scale)
    if not even and not odd:
        return Parity.NONE
    return Parity.UNKNOWN
