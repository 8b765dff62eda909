"""Left-invariant forms on R x SU(2).

Basis one-forms are indexed ``0 = dt`` and ``1, 2, 3 = theta_1, theta_2,
theta_3`` with ``d theta_1 = theta_2 ^ theta_3`` and cyclic permutations.
Coefficients are :class:`~multitoric.exprparse.ScalarFn` functions of ``t``.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from .exprparse import ScalarFn
from .exterior import merge_indices, sort_with_sign

DIM = 4
VOL = (0, 1, 2, 3)
CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))

Index = tuple[int, ...]

# d theta_p = theta_q ^ theta_r for cyclic (p q r)
_D_BASIS = {0: [], 1: [(2, 3)], 2: [(3, 1)], 3: [(1, 2)]}


def _fn(c) -> ScalarFn:
    return c if isinstance(c, ScalarFn) else ScalarFn.const(c) if not isinstance(c, str) else ScalarFn(c)


class InvForm:
    """Homogeneous left-invariant form with coefficients depending on ``t``."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Sequence[int], object] | None = None):
        if not 0 <= degree <= DIM:
            raise ValueError(f"degree {degree} out of range 0..{DIM}")
        self.degree = degree
        out: dict[Index, ScalarFn] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or any(not 0 <= i < DIM for i in idx):
                raise ValueError(f"bad index {idx} for a {degree}-form")
            sign, key = sort_with_sign(idx)
            if not sign:
                continue
            c = _fn(c)
            c = c if sign > 0 else -c
            out[key] = out[key] + c if key in out else c
        self._coeffs = {k: v for k, v in out.items() if not v.is_zero()}

    @classmethod
    def basis(cls, *idx: int) -> InvForm:
        return cls(len(idx), {idx: 1})

    @property
    def coeffs(self) -> dict[Index, ScalarFn]:
        return dict(self._coeffs)

    def __getitem__(self, idx) -> ScalarFn:
        sign, key = sort_with_sign(tuple(idx))
        c = self._coeffs.get(key)
        if c is None or not sign:
            return ScalarFn.const(0)
        return c if sign > 0 else -c

    def __add__(self, other: InvForm) -> InvForm:
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        merged = dict(self._coeffs)
        for k, c in other._coeffs.items():
            merged[k] = merged[k] + c if k in merged else c
        return InvForm(self.degree, merged)

    def __neg__(self) -> InvForm:
        return InvForm(self.degree, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: InvForm) -> InvForm:
        return self + (-other)

    def __mul__(self, f) -> InvForm:
        return InvForm(self.degree, {k: c * f for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate(self, t) -> dict[Index, np.ndarray]:
        """Coefficient values at ``t``."""
        return {k: c(t) for k, c in self._coeffs.items()}

    def max_abs(self, t) -> float:
        """Largest coefficient magnitude over the sample points ``t``."""
        vals = [np.max(np.abs(np.atleast_1d(c(t)))) for c in self._coeffs.values()]
        return float(max(vals, default=0.0))

    def __repr__(self) -> str:
        terms = [f"({c})*{''.join('dt' if i == 0 else f'th{i}' for i in k) or '1'}" for k, c in sorted(self._coeffs.items())]
        return f"InvForm(deg={self.degree}, " + (" + ".join(terms) or "0") + ")"


def wedge_inv(a: InvForm, b: InvForm) -> InvForm:
    if a.degree + b.degree > DIM:
        raise ValueError(f"degree {a.degree}+{b.degree} exceeds {DIM}")
    out: dict[Index, ScalarFn] = {}
    for i, ca in a._coeffs.items():
        for j, cb in b._coeffs.items():
            sign, k = merge_indices(i, j)
            if sign:
                term = ca * cb if sign > 0 else -(ca * cb)
                out[k] = out[k] + term if k in out else term
    return InvForm(a.degree + b.degree, out)


def _d_basis(idx: Index) -> list[tuple[int, Index]]:
    """``d(e_idx)`` as signed basis terms."""
    terms = []
    for pos, i in enumerate(idx):
        for repl in _D_BASIS[i]:
            sign, key = sort_with_sign(idx[:pos] + repl + idx[pos + 1:])
            if sign:
                terms.append((sign * (-1) ** pos, key))
    return terms


def d_inv(a: InvForm) -> InvForm:
    """Exterior derivative: ``dt ^ d/dt`` on coefficients plus the structure equations."""
    if a.degree >= DIM:
        raise ValueError("exterior derivative of a top-degree form")
    out: dict[Index, ScalarFn] = {}

    def put(k, c):
        out[k] = out[k] + c if k in out else c

    for idx, c in a._coeffs.items():
        if 0 not in idx:
            put((0,) + idx, c.derivative())
        for sign, key in _d_basis(idx):
            put(key, c if sign > 0 else -c)
    return InvForm(a.degree + 1, out)


def closed_two_form(column: Sequence) -> InvForm:
    """``sum_p b_p' dt ^ theta_p + b_p theta_q ^ theta_r`` for coefficients ``b_1, b_2, b_3``."""
    coeffs: dict[Index, ScalarFn] = {}
    for p, q, r in CYCLIC:
        b = _fn(column[p - 1])
        coeffs[(0, p)] = b.derivative()
        coeffs[(q, r)] = b
    return InvForm(2, coeffs)


def sigma_from_B(B) -> list[InvForm]:
    """The three closed two-forms built from the columns of ``B = (b_pi)``.

    ``B[p][i]`` must give ``b_{p+1, i+1}`` as a ScalarFn (or something coercible).
    """
    return [closed_two_form([B[p][i] for p in range(3)]) for i in range(3)]


def top_coeff(a: InvForm) -> ScalarFn:
    """Coefficient of ``vol = dt ^ theta_1 ^ theta_2 ^ theta_3``."""
    if a.degree != DIM:
        raise ValueError(f"expected a 4-form, got degree {a.degree}")
    return a[VOL]


def pairing_matrix(forms_a: Sequence[InvForm], forms_b: Sequence[InvForm], t) -> np.ndarray:
    """``M[..., i, j]`` = top coefficient of ``a_i ^ b_j`` evaluated at ``t``."""
    t = np.asarray(t, dtype=float)
    out = np.zeros(t.shape + (len(forms_a), len(forms_b)))
    for i, a in enumerate(forms_a):
        for j, b in enumerate(forms_b):
            out[..., i, j] = top_coeff(wedge_inv(a, b))(t)
    return out
