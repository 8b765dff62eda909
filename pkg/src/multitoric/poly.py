"""Exact multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

MAX_VARS = 8

Exponent = tuple[int, ...]


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


class Poly:
    """Polynomial in ``x0 .. x{nvars-1}`` with :class:`~fractions.Fraction` coefficients.

    Terms are stored as a mapping from exponent tuples to nonzero coefficients.
    Instances are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        if not 0 <= nvars <= MAX_VARS:
            raise ValueError(f"nvars must lie in 0..{MAX_VARS}, got {nvars}")
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            c = _coerce(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, nvars: int, value=0) -> Poly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, nvars: int, i: int) -> Poly:
        if not 0 <= i < nvars:
            raise IndexError(f"variable x{i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def variables(cls, nvars: int) -> list[Poly]:
        return [cls.var(nvars, i) for i in range(nvars)]

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def coefficient(self, exp: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    # -- arithmetic ---------------------------------------------------
    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = _coerce(other)
            return Poly(self.nvars, {e: c * v for e, v in self._terms.items()})
        other = self._lift(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly:
        c = _coerce(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == Poly.const(self.nvars, other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus -----------------------------------------------------
    def diff(self, i: int) -> Poly:
        """Partial derivative with respect to ``x_i``."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable x{i} out of range")
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return Poly(self.nvars, out)

    def integrate(self, i: int) -> Poly:
        """Antiderivative in ``x_i`` with no constant of integration."""
        out = {}
        for e, c in self._terms.items():
            ne = list(e)
            ne[i] += 1
            out[tuple(ne)] = c / ne[i]
        return Poly(self.nvars, out)

    def substitute(self, i: int, value) -> Poly:
        """Set ``x_i`` to an exact constant."""
        v = _coerce(value)
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c * v**k
        return Poly(self.nvars, out)

    def __call__(self, *point):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        total = 0
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x**k
            total = total + term
        return total

    # -- display ------------------------------------------------------
    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        # univariate polynomials in this package are functions of t
        names = ["t"] if self.nvars == 1 else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self._terms, key=lambda x: (-sum(x), tuple(-v for v in x))):
            c = self._terms[e]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
