"""Exterior calculus on R^n with exact polynomial coefficients.

Forms are homogeneous: a :class:`Form` of degree ``p`` maps strictly increasing
index tuples ``(i1 < ... < ip)`` to :class:`~multitoric.poly.Poly`
coefficients.  The Hodge star is the Euclidean one for the orthonormal coframe
``e^0, ..., e^{n-1}`` (or a caller-supplied sub-frame), oriented by the wedge
of the frame in the order given.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import Poly

Index = tuple[int, ...]


class ExteriorError(ValueError):
    """Raised on dimension mismatches or unsupported operations."""


def sort_with_sign(idx: Sequence[int]) -> tuple[int, Index]:
    """Sort ``idx`` by bubble passes, returning ``(sign, sorted)``.

    ``sign`` is 0 when an index repeats.
    """
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
            elif arr[j] == arr[j + 1]:
                return 0, ()
    if len(set(arr)) != len(arr):
        return 0, ()
    return sign, tuple(arr)


def merge_indices(a: Index, b: Index) -> tuple[int, Index]:
    """Sign and index of ``e_a ^ e_b`` for increasing tuples (sign 0 if they overlap)."""
    if set(a) & set(b):
        return 0, ()
    return sort_with_sign(a + b)


class Form:
    """Homogeneous alternating form with polynomial coefficients."""

    __slots__ = ("nvars", "degree", "_coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: Mapping[Sequence[int], object] | None = None):
        if not 0 <= degree <= nvars:
            raise ExteriorError(f"degree {degree} impossible on R^{nvars}")
        self.nvars = nvars
        self.degree = degree
        out: dict[Index, Poly] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ExteriorError(f"index {idx} has wrong length for a {degree}-form")
            if any(not 0 <= i < nvars for i in idx):
                raise ExteriorError(f"index {idx} out of range for R^{nvars}")
            sign, key = sort_with_sign(idx)
            if not sign:
                continue
            c = c if isinstance(c, Poly) else Poly.const(nvars, c)
            if c.nvars != nvars:
                raise ExteriorError("coefficient variable count differs from form dimension")
            total = out.get(key, Poly.const(nvars)) + c * sign
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
        self._coeffs = out

    @classmethod
    def zero(cls, nvars: int, degree: int) -> Form:
        return cls(nvars, degree)

    @classmethod
    def scalar(cls, f: Poly) -> Form:
        return cls(f.nvars, 0, {(): f})

    @classmethod
    def basis(cls, nvars: int, *idx: int) -> Form:
        """``e^{i1} ^ ... ^ e^{ip}``; indices may be given in any order."""
        return cls(nvars, len(idx), {idx: 1})

    @property
    def coeffs(self) -> dict[Index, Poly]:
        return dict(self._coeffs)

    def __getitem__(self, idx: Sequence[int]) -> Poly:
        sign, key = sort_with_sign(tuple(idx))
        c = self._coeffs.get(key, Poly.const(self.nvars))
        return c * sign if sign else Poly.const(self.nvars)

    def __len__(self) -> int:
        return len(self._coeffs)

    def num_terms(self) -> int:
        """Number of (index, monomial) pairs in the expanded form."""
        return sum(len(c) for c in self._coeffs.values())

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self._coeffs.values())

    def _check(self, other: Form) -> None:
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ExteriorError(f"dimension mismatch: R^{self.nvars} vs R^{other.nvars}")

    def __add__(self, other: Form) -> Form:
        self._check(other)
        if other.degree != self.degree:
            raise ExteriorError(f"cannot add forms of degree {self.degree} and {other.degree}")
        merged: dict[Index, Poly] = dict(self._coeffs)
        for k, c in other._coeffs.items():
            merged[k] = merged[k] + c if k in merged else c
        return Form(self.nvars, self.degree, merged)

    def __neg__(self) -> Form:
        return Form(self.nvars, self.degree, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __mul__(self, f) -> Form:
        """Multiply by a scalar or a :class:`Poly` function."""
        if isinstance(f, Form):
            raise TypeError("use wedge() for the exterior product")
        return Form(self.nvars, self.degree, {k: c * f for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> Form:
        return self * (1 / Fraction(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (self.nvars, self.degree, self._coeffs) == (other.nvars, other.degree, other._coeffs)

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, frozenset(self._coeffs.items())))

    def wedge(self, other: Form) -> Form:
        return wedge(self, other)

    def __repr__(self) -> str:
        return f"Form(R^{self.nvars}, deg={self.degree}, {self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs):
            name = "e^" + "".join(map(str, k)) if k else "1"
            parts.append(f"({self._coeffs[k]})*{name}")
        return " + ".join(parts)


class VectorField:
    """Vector field on R^n given by polynomial components."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Poly]):
        comps = tuple(components)
        if not comps:
            raise ExteriorError("vector field needs at least one component")
        n = comps[0].nvars
        if len(comps) != n or any(c.nvars != n for c in comps):
            raise ExteriorError("component count must equal the number of variables")
        self.components = comps

    @property
    def nvars(self) -> int:
        return len(self.components)

    @classmethod
    def coordinate(cls, nvars: int, i: int) -> VectorField:
        return cls(Poly.const(nvars, int(j == i)) for j in range(nvars))

    @classmethod
    def linear(cls, matrix: Sequence[Sequence[object]]) -> VectorField:
        """The field ``x -> A x``."""
        n = len(matrix)
        xs = Poly.variables(n)
        comps = []
        for row in matrix:
            acc = Poly.const(n)
            for a, x in zip(row, xs):
                if a:
                    acc = acc + x * a
            comps.append(acc)
        return cls(comps)

    def linear_matrix(self) -> list[list[Fraction]]:
        """Coefficient matrix, for fields whose components are linear forms."""
        n = self.nvars
        rows = []
        for c in self.components:
            if c.degree() > 1 or c.constant_term():
                raise ExteriorError("vector field is not linear")
            rows.append([c.coefficient(tuple(int(j == i) for j in range(n))) for i in range(n)])
        return rows

    def __eq__(self, other) -> bool:
        return isinstance(other, VectorField) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        terms = [f"({c})*d/dx{i}" for i, c in enumerate(self.components) if c]
        return "VectorField(" + (" + ".join(terms) or "0") + ")"


def wedge(a: Form, b: Form) -> Form:
    """Exterior product ``a ^ b``."""
    a._check(b)
    if a.degree + b.degree > a.nvars:
        raise ExteriorError(f"degree {a.degree}+{b.degree} exceeds dimension {a.nvars}")
    out: dict[Index, Poly] = {}
    for i, ca in a._coeffs.items():
        for j, cb in b._coeffs.items():
            sign, k = merge_indices(i, j)
            if sign:
                term = ca * cb * sign
                out[k] = out[k] + term if k in out else term
    return Form(a.nvars, a.degree + b.degree, out)


def wedge_all(*forms: Form) -> Form:
    result = forms[0]
    for f in forms[1:]:
        result = wedge(result, f)
    return result


def d(a: Form) -> Form:
    """Exterior derivative."""
    if a.degree >= a.nvars:
        raise ExteriorError("exterior derivative of a top-degree form is not defined here")
    out: dict[Index, Poly] = {}
    for idx, c in a._coeffs.items():
        for j in range(a.nvars):
            dc = c.diff(j)
            if dc.is_zero():
                continue
            sign, k = merge_indices((j,), idx)
            if sign:
                term = dc * sign
                out[k] = out[k] + term if k in out else term
    return Form(a.nvars, a.degree + 1, out)


def contract(X: VectorField, a: Form) -> Form:
    """Interior product: ``X`` goes into the first slot of ``a``."""
    if a.degree == 0:
        raise ExteriorError("cannot contract a vector field into a 0-form")
    if X.nvars != a.nvars:
        raise ExteriorError(f"dimension mismatch: field on R^{X.nvars}, form on R^{a.nvars}")
    out: dict[Index, Poly] = {}
    for idx, c in a._coeffs.items():
        for pos, i in enumerate(idx):
            xi = X.components[i]
            if xi.is_zero():
                continue
            k = idx[:pos] + idx[pos + 1:]
            term = c * xi * (-1 if pos % 2 else 1)
            out[k] = out[k] + term if k in out else term
    return Form(a.nvars, a.degree - 1, out)


def evaluate_on(a: Form, *fields: VectorField) -> Form:
    """``a(X1, ..., Xk, .)`` with the fields filling the leading slots in order."""
    for X in fields:
        a = contract(X, a)
    return a


def hodge(a: Form, frame: Sequence[int] | None = None) -> Form:
    """Euclidean Hodge star for constant-coefficient forms.

    ``frame`` lists the coframe indices spanning the space, in orientation
    order; ``vol = e^{frame[0]} ^ ... ^ e^{frame[-1]}``.  The defining relation is
    ``alpha ^ *beta = <alpha, beta> vol``.
    """
    frame = tuple(range(a.nvars)) if frame is None else tuple(frame)
    if len(set(frame)) != len(frame) or any(not 0 <= i < a.nvars for i in frame):
        raise ExteriorError(f"invalid frame {frame}")
    if not a.is_constant():
        raise ExteriorError("Hodge star is only implemented for constant coefficients")
    pos = {f: n for n, f in enumerate(frame)}
    out: dict[Index, Poly] = {}
    for idx, c in a._coeffs.items():
        if any(i not in pos for i in idx):
            raise ExteriorError(f"index {idx} lies outside the frame {frame}")
        comp = tuple(f for f in frame if f not in idx)
        local = [pos[i] for i in idx] + [pos[j] for j in comp]
        sign, _ = sort_with_sign(local)
        # comp is in frame order; storing it sorted costs a sign
        csign, key = sort_with_sign(comp)
        sign *= csign
        out[key] = c * sign
    return Form(a.nvars, len(frame) - a.degree, out)


def solve_potential(alpha: Form) -> Poly:
    """Return ``f`` with ``df = alpha`` and ``f(0) = 0`` for a closed polynomial 1-form."""
    if alpha.degree != 1:
        raise ExteriorError(f"expected a 1-form, got degree {alpha.degree}")
    if not d(alpha).is_zero():
        raise ExteriorError("1-form is not closed; no potential exists")
    n = alpha.nvars
    xs = Poly.variables(n)
    f = Poly.const(n)
    # radial homotopy: f(x) = sum_i x_i * int_0^1 alpha_i(s x) ds
    for (i,), c in alpha._coeffs.items():
        scaled = Poly(n, {e: v / (sum(e) + 1) for e, v in c.terms.items()})
        f = f + xs[i] * scaled
    return f


def one_form(f: Poly) -> Form:
    """``df`` as a 1-form."""
    return d(Form.scalar(f))
