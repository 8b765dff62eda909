"""Dual numbers ``a + b eps`` over floats or numpy arrays."""

from __future__ import annotations

import numpy as np


class Dual:
    __slots__ = ("val", "der")

    def __init__(self, val, der=0.0):
        self.val = val
        self.der = der

    @staticmethod
    def lift(x) -> Dual:
        return x if isinstance(x, Dual) else Dual(x, 0.0)

    def __add__(self, o) -> Dual:
        o = Dual.lift(o)
        return Dual(self.val + o.val, self.der + o.der)

    __radd__ = __add__

    def __sub__(self, o) -> Dual:
        o = Dual.lift(o)
        return Dual(self.val - o.val, self.der - o.der)

    def __rsub__(self, o) -> Dual:
        return Dual.lift(o) - self

    def __neg__(self) -> Dual:
        return Dual(-self.val, -self.der)

    def __mul__(self, o) -> Dual:
        o = Dual.lift(o)
        return Dual(self.val * o.val, self.val * o.der + self.der * o.val)

    __rmul__ = __mul__

    def __truediv__(self, o) -> Dual:
        o = Dual.lift(o)
        if np.any(np.asarray(o.val) == 0):
            raise ZeroDivisionError("division by a dual number with zero real part")
        return Dual(self.val / o.val, (self.der * o.val - self.val * o.der) / (o.val * o.val))

    def __rtruediv__(self, o) -> Dual:
        return Dual.lift(o) / self

    def __pow__(self, k: int) -> Dual:
        if not isinstance(k, (int, np.integer)):
            raise TypeError("dual numbers support integer powers only")
        if k == 0:
            return Dual(np.ones_like(self.val) * 1.0, np.zeros_like(self.val) * 1.0)
        if k < 0:
            return 1.0 / (self ** (-k))
        return Dual(self.val**k, k * self.val ** (k - 1) * self.der)

    def exp(self) -> Dual:
        ev = np.exp(self.val)
        return Dual(ev, self.der * ev)

    def __repr__(self) -> str:
        return f"Dual({self.val!r}, {self.der!r})"
