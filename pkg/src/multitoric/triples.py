"""SU(2)-invariant weakly coherent triples on R x SU(2).

A triple is encoded by a 3x3 matrix ``B = (b_pi)`` of functions of ``t`` whose
columns give the closed two-forms; curvature data by a second matrix ``C``.
The triple is weakly coherent where ``d/dt(B^T B)`` is positive definite, and
the curvature is admissible where ``d/dt(C^T B)`` is symmetric.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import bisect

from .exprparse import EvaluationError, Numeric, Parity, ScalarFn, parity, poly_parity
from .poly import Poly

DEFAULT_SCAN = 2048
DEFAULT_GRID = 512
GRID_MARGIN = 1e-4
XTOL = 1e-8
EIG_FLOOR = 1e-12


class TripleError(ValueError):
    pass


class MatrixFn:
    """3x3 matrix of :class:`ScalarFn` entries on an open ``domain``."""

    def __init__(self, entries: Sequence[Sequence], domain: tuple[float, float] = (-math.inf, math.inf)):
        rows = [[e if isinstance(e, ScalarFn) else ScalarFn(e) if isinstance(e, str) else ScalarFn.const(e)
                 for e in row] for row in entries]
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise TripleError("matrix must be 3x3")
        lo, hi = float(domain[0]), float(domain[1])
        if not lo < hi:
            raise TripleError(f"empty domain ({lo}, {hi})")
        self.entries = rows
        self.domain = (lo, hi)

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], domain=(-math.inf, math.inf)) -> MatrixFn:
        return cls([[ScalarFn(s) for s in row] for row in rows], domain)

    @classmethod
    def constant(cls, values, domain=(-math.inf, math.inf)) -> MatrixFn:
        return cls([[ScalarFn.const(Fraction(v)) for v in row] for row in values], domain)

    def __getitem__(self, p: int) -> list[ScalarFn]:
        return self.entries[p]

    def evaluate(self, t) -> tuple[np.ndarray, np.ndarray]:
        """Values and t-derivatives, each of shape ``t.shape + (3, 3)``."""
        t = np.asarray(t, dtype=float)
        val = np.empty(t.shape + (3, 3))
        der = np.empty(t.shape + (3, 3))
        for p in range(3):
            for i in range(3):
                try:
                    v, dv = self.entries[p][i].eval_dual(t)
                except (EvaluationError, ZeroDivisionError) as exc:
                    raise TripleError(f"entry ({p + 1},{i + 1}) cannot be evaluated: {exc}") from None
                val[..., p, i] = v
                der[..., p, i] = dv
        return val, der

    def __call__(self, t) -> np.ndarray:
        return self.evaluate(t)[0]

    def polys(self) -> list[list[Poly | None]]:
        return [[e.to_poly() for e in row] for row in self.entries]

    def grid(self, n: int = DEFAULT_GRID, margin: float = GRID_MARGIN) -> np.ndarray:
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise TripleError("a finite domain is needed to build a grid")
        return np.linspace(lo + margin, hi - margin, n)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.entries) + "]"


def _swap(m: np.ndarray) -> np.ndarray:
    return np.swapaxes(m, -1, -2)


def gram_derivative_raw(B: MatrixFn, t) -> np.ndarray:
    """``sum_p d/dt(b_pi b_pj)`` without symmetrisation."""
    val, der = B.evaluate(t)
    return np.einsum("...pi,...pj->...ij", der, val) + np.einsum("...pi,...pj->...ij", val, der)


def gram_derivative(B: MatrixFn, t) -> np.ndarray:
    """``d/dt (B^T B)`` at ``t`` (scalar or array), symmetrised."""
    g = gram_derivative_raw(B, t)
    return 0.5 * (g + _swap(g))


def cross_derivative(B: MatrixFn, C: MatrixFn, t) -> np.ndarray:
    """``d/dt (C^T B)`` at ``t``."""
    vb, db = B.evaluate(t)
    vc, dc = C.evaluate(t)
    return _swap(dc) @ vb + _swap(vc) @ db


# -- smallest eigenvalue ---------------------------------------------------

def _tridiagonal(m: np.ndarray):
    """Givens rotation in the (1, 2) plane clearing ``m[0, 2]``; returns diagonals."""
    a, b = m[:, 0, 1], m[:, 0, 2]
    h = np.hypot(a, b)
    c = np.where(h > 0, a / np.where(h > 0, h, 1.0), 1.0)
    s = np.where(h > 0, b / np.where(h > 0, h, 1.0), 0.0)
    m11, m12, m22 = m[:, 1, 1], m[:, 1, 2], m[:, 2, 2]
    d = np.stack([m[:, 0, 0],
                  c * c * m11 + 2 * c * s * m12 + s * s * m22,
                  s * s * m11 - 2 * c * s * m12 + c * c * m22], axis=1)
    e = np.stack([h, c * s * (m22 - m11) + (c * c - s * s) * m12], axis=1)
    return d, e


def _count_below(d: np.ndarray, e: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Sturm count: eigenvalues of the tridiagonal matrix below ``x``."""
    tiny = np.finfo(float).tiny
    count = np.zeros(x.shape, dtype=int)
    q = d[:, 0] - x
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        for k in range(3):
            if k:
                q = d[:, k] - x - e[:, k - 1] ** 2 / q
            q = np.where((q == 0) | np.isnan(q), -tiny, q)
            count += q < 0
    return count


def min_eig(M) -> np.ndarray | float:
    """Smallest eigenvalue of symmetric 3x3 matrices by the trigonometric cubic solution.

    Accepts a single matrix or a stack ``(..., 3, 3)``.  The closed form loses
    accuracy near repeated roots (``arccos`` at +-1), so the estimate seeds a
    short Sturm-count bisection on a tridiagonal copy, which is stable.
    """
    m = np.asarray(M, dtype=float)
    single = m.ndim == 2
    m = m.reshape((-1, 3, 3))
    q = np.trace(m, axis1=1, axis2=2) / 3.0
    off = m[:, 0, 1] ** 2 + m[:, 0, 2] ** 2 + m[:, 1, 2] ** 2
    shifted = m - q[:, None, None] * np.eye(3)
    p2 = (shifted[:, 0, 0] ** 2 + shifted[:, 1, 1] ** 2 + shifted[:, 2, 2] ** 2 + 2 * off) / 6.0
    p = np.sqrt(p2)
    with np.errstate(invalid="ignore", divide="ignore"):
        r = np.linalg.det(shifted / np.where(p > 0, p, 1.0)[:, None, None]) / 2.0
    r = np.clip(r, -1.0, 1.0)
    phi = np.arccos(r) / 3.0
    lam = np.where(p > 0, q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0), q)
    diag = off == 0
    lam = np.where(diag, np.min(np.diagonal(m, axis1=1, axis2=2), axis=1), lam)

    polish = ~diag
    if np.any(polish):
        sub = m[polish]
        d, e = _tridiagonal(sub)
        scale = np.max(np.abs(sub), axis=(1, 2))
        est = lam[polish]
        width = 1e-6 * scale
        lo, hi = est - width, est + width
        # fall back to Gershgorin bounds if the seed bracket is wrong
        bad = (_count_below(d, e, lo) != 0) | (_count_below(d, e, hi) == 0)
        radius = np.sum(np.abs(sub), axis=2).max(axis=1)
        lo = np.where(bad, -radius, lo)
        hi = np.where(bad, radius, hi)
        for _ in range(64):
            mid = 0.5 * (lo + hi)
            below = _count_below(d, e, mid) >= 1
            hi = np.where(below, mid, hi)
            lo = np.where(below, lo, mid)
        lam[polish] = 0.5 * (lo + hi)
    return float(lam[0]) if single else lam.reshape(np.asarray(M).shape[:-2])


def max_eig(M):
    return -min_eig(-np.asarray(M, dtype=float))


def sylvester_positive(m: Sequence[Sequence[Fraction]]) -> bool:
    """Exact positive-definiteness of a symmetric rational matrix (leading minors)."""
    a, b, c = m[0][0], m[0][1], m[0][2]
    d, e, f = m[1][1], m[1][2], m[2][2]
    m2 = a * d - b * b
    det = a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c)
    return a > 0 and m2 > 0 and det > 0


# -- positive-definite intervals -------------------------------------------

def _runs(mask: np.ndarray) -> list[tuple[int, int]]:
    runs = []
    start = None
    for i, ok in enumerate(mask):
        if ok and start is None:
            start = i
        elif not ok and start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(mask) - 1))
    return runs


def _refine(f, a: float, b: float) -> float:
    try:
        fa, fb = f(a), f(b)
        if np.sign(fa) == np.sign(fb):
            return 0.5 * (a + b)
        return float(bisect(f, a, b, xtol=XTOL))
    except (TripleError, ValueError, ZeroDivisionError):
        return 0.5 * (a + b)


def sign_intervals(f, bracket: tuple[float, float], n: int = DEFAULT_SCAN) -> list[tuple[float, float]]:
    """Maximal intervals in ``bracket`` where the vectorised ``f`` is positive.

    The grid includes both bracket ends; interior endpoints are bisected.
    """
    lo, hi = map(float, bracket)
    ts = np.linspace(lo, hi, n)
    vals = f(ts)
    out = []
    scalar = lambda x: float(f(np.array([x]))[0])  # noqa: E731
    for i, j in _runs(vals > 0):
        left = lo if i == 0 else _refine(scalar, ts[i - 1], ts[i])
        right = hi if j == n - 1 else _refine(scalar, ts[j], ts[j + 1])
        out.append((left, right))
    return out


def _definiteness(B: MatrixFn, sign: int):
    # eigenvalues within EIG_FLOOR * |M| of zero are rounding noise, not definiteness
    def f(t):
        m = sign * gram_derivative(B, t)
        return min_eig(m) - EIG_FLOOR * np.max(np.abs(m), axis=(-2, -1))
    return f


def pd_interval(B: MatrixFn, bracket: tuple[float, float] | None = None, n: int = DEFAULT_SCAN):
    """Open intervals where ``d/dt(B^T B)`` is positive definite."""
    bracket = bracket or B.domain
    _check_bracket(B, bracket)
    return sign_intervals(_definiteness(B, 1), bracket, n)


def nd_interval(B: MatrixFn, bracket: tuple[float, float] | None = None, n: int = DEFAULT_SCAN):
    """Open intervals where ``d/dt(B^T B)`` is negative definite."""
    bracket = bracket or B.domain
    _check_bracket(B, bracket)
    return sign_intervals(_definiteness(B, -1), bracket, n)


def _check_bracket(B: MatrixFn, bracket) -> None:
    lo, hi = bracket
    if not (B.domain[0] <= lo < hi <= B.domain[1]):
        raise TripleError(f"bracket {bracket} is not inside the domain {B.domain}")


def reflect(B: MatrixFn) -> MatrixFn:
    """``t -> -t``, turning a negative-definite branch into a positive one."""
    from .exprparse import T, lift

    def sub(e):
        return ScalarFn(_substitute_neg(e.expr))

    return MatrixFn([[sub(e) for e in row] for row in B.entries], (-B.domain[1], -B.domain[0]))


def _substitute_neg(e):
    from . import exprparse as ep

    if isinstance(e, ep.Var):
        return ep.neg(ep.T)
    if isinstance(e, ep.Const):
        return e
    if isinstance(e, (ep.Add, ep.Sub, ep.Mul, ep.Div)):
        return type(e)(_substitute_neg(e.left), _substitute_neg(e.right))
    if isinstance(e, ep.Neg):
        return ep.Neg(_substitute_neg(e.arg))
    if isinstance(e, ep.Pow):
        return ep.Pow(_substitute_neg(e.base), e.exponent)
    if isinstance(e, ep.Exp):
        return ep.Exp(_substitute_neg(e.arg))
    raise TripleError("cannot reflect numerically backed entries")


# -- curvature ---------------------------------------------------------------

def symmetry_residual(B: MatrixFn, C: MatrixFn, grid) -> float:
    """Max over ``grid`` of the max-norm of the skew part of ``d/dt(C^T B)`` (times two)."""
    m = cross_derivative(B, C, grid)
    return float(np.max(np.abs(m - _swap(m))))


def _check_symmetric(S: MatrixFn, grid) -> None:
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = S[i][j].to_poly(), S[j][i].to_poly()
            if a is not None and b is not None:
                if a != b:
                    raise TripleError(f"S is not symmetric: S[{i + 1}][{j + 1}] != S[{j + 1}][{i + 1}]")
                continue
            va, vb = S[i][j](grid), S[j][i](grid)
            if np.max(np.abs(va - vb)) > 1e-12 * max(1.0, float(np.max(np.abs(va)))):
                raise TripleError(f"S is not symmetric: S[{i + 1}][{j + 1}] != S[{j + 1}][{i + 1}]")


def curvature_from_potentials(B: MatrixFn, S: MatrixFn, D, grid=None) -> MatrixFn:
    """``C = (B^T)^{-1} (S(t) + D)`` with numerically backed entries.

    The derivative comes from differentiating the linear solve:
    ``C' = (B^T)^{-1} (S' - B'^T C)``.
    """
    grid = B.grid() if grid is None else np.asarray(grid, dtype=float)
    D = np.array([[float(Fraction(x)) for x in row] for row in D], dtype=float)
    if D.shape != (3, 3):
        raise TripleError("D must be a constant 3x3 matrix")
    _check_symmetric(S, grid)
    dets = np.linalg.det(B(grid))
    if np.min(np.abs(dets)) <= 1e-12:
        bad = float(grid[np.argmin(np.abs(dets))])
        raise TripleError(f"B is singular (|det| <= 1e-12) near t = {bad:.6g}")

    cache: dict = {}

    def solve(t):
        t = np.asarray(t, dtype=float)
        key = (t.shape, t.tobytes())
        if key not in cache:
            vb, db = B.evaluate(t)
            vs, ds = S.evaluate(t)
            bt = _swap(vb)
            c = np.linalg.solve(bt, vs + D)
            cdot = np.linalg.solve(bt, ds - _swap(db) @ c)
            cache.clear()
            cache[key] = (c, cdot)
        return cache[key]

    def entry(p, i):
        return Numeric(lambda t: tuple(x[..., p, i] for x in solve(t)), f"C{p + 1}{i + 1}")

    return MatrixFn([[ScalarFn(entry(p, i)) for i in range(3)] for p in range(3)], B.domain)


@dataclass
class Invertibility:
    applicable: bool
    invertible: bool
    min_abs_det: float | None
    samples: int
    note: str = ""


def invertibility_check(B: MatrixFn, grid, intervals=None) -> Invertibility:
    """``det B != 0`` at every grid point inside the positive-definite intervals."""
    grid = np.asarray(grid, dtype=float)
    if intervals is None:
        intervals = pd_interval(B, (float(grid[0]), float(grid[-1])))
    if not intervals:
        return Invertibility(False, False, None, 0, "no positive-definite interval; lemma not applicable")
    inside = np.zeros(grid.shape, dtype=bool)
    for lo, hi in intervals:
        inside |= (grid > lo) & (grid < hi)
    pts = grid[inside]
    if pts.size == 0:
        return Invertibility(False, False, None, 0, "no grid point inside the positive-definite intervals")
    dets = np.abs(np.linalg.det(B(pts)))
    return Invertibility(True, bool(np.all(dets > 0)), float(np.min(dets)), int(pts.size))


# -- singular-orbit extensions -------------------------------------------------

@dataclass
class ExtensionVerdict:
    kind: str
    status: str  # pass | fail | unknown
    reasons: list[str] = field(default_factory=list)
    numbers: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def _low_order(p: Poly) -> int:
    return min((e[0] for e in p.terms), default=math.inf)


def _shift(p: Poly, k: int) -> Poly:
    return Poly(1, {(e[0] - k,): c for e, c in p.terms.items()})


def _fraction_matrix(m) -> list[list[str]]:
    return [[str(x) for x in row] for row in m]


def _numeric_parity_evidence(fn: ScalarFn, k: int) -> str:
    grid = np.linspace(0.05, 1.0, 20)
    q = lambda s: fn(s) / s**k  # noqa: E731
    try:
        even = float(np.max(np.abs(q(-grid) - q(grid))))
        odd = float(np.max(np.abs(q(-grid) + q(grid))))
    except (EvaluationError, ZeroDivisionError, TripleError) as exc:
        return f"numeric evaluation failed: {exc}"
    return f"max|f(-t)-f(t)| = {even:.3g}, max|f(-t)+f(t)| = {odd:.3g}"


def extension_check_su2(B: MatrixFn) -> ExtensionVerdict:
    """Smooth extension over an SU(2) singular orbit at ``t = 0``.

    Every entry must be ``t^2 f(t)`` with ``f`` even, and ``F^T F`` must be
    positive definite at ``t = 0``.
    """
    out = ExtensionVerdict("su2", "pass")
    polys = B.polys()
    F0 = [[Fraction(0)] * 3 for _ in range(3)]
    unknown = False
    for p in range(3):
        for i in range(3):
            poly = polys[p][i]
            where = f"b{p + 1}{i + 1}"
            if poly is None:
                unknown = True
                par = parity(B[p][i].expr)
                out.reasons.append(
                    f"{where} is not polynomial; parity {par.value} "
                    f"({_numeric_parity_evidence(B[p][i], 2)})"
                )
                continue
            if poly.is_zero():
                continue
            if _low_order(poly) < 2:
                out.status = "fail"
                out.reasons.append(f"{where} = {poly} is not divisible by t^2")
                continue
            f = _shift(poly, 2)
            if poly_parity(f) is not Parity.EVEN:
                out.status = "fail"
                out.reasons.append(f"{where}/t^2 = {f} is not even")
                continue
            F0[p][i] = f.constant_term()
    if unknown and out.status == "pass":
        out.status = "unknown"
    ftf = [[sum(F0[p][i] * F0[p][j] for p in range(3)) for j in range(3)] for i in range(3)]
    out.numbers["FtF0"] = _fraction_matrix(ftf)
    out.numbers["FtF0_min_eig"] = min_eig(np.array(ftf, dtype=float))
    if not unknown and not sylvester_positive(ftf):
        out.status = "fail"
        out.reasons.append("F^T F is not positive definite at t = 0")
    return out


def _gram_poly(polys) -> list[list[Poly]]:
    """Exact ``d/dt(B^T B)`` for polynomial entries."""
    zero = Poly.const(1)
    g = [[zero] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            s = zero
            for p in range(3):
                s = s + polys[p][i] * polys[p][j]
            g[i][j] = s.diff(0)
    return g


def extension_check_circle(B: MatrixFn, m: int, n: int) -> ExtensionVerdict:
    """Smooth, non-degenerate extension over a circle singular orbit at ``t = 0``.

    Row 1 entries must be even.  In each column, rows 2 and 3 are either both
    identically zero or both of the form ``t^(m/n) f(t)`` with ``f`` even.  The
    triple is non-degenerate there when ``lim d/dt(B^T B) / t`` exists and is
    positive definite.
    """
    if not (isinstance(m, int) and isinstance(n, int) and m > 0 and n > 0):
        raise TripleError("m and n must be positive integers")
    out = ExtensionVerdict("circle", "pass", numbers={"m": m, "n": n})
    k = Fraction(m, n)
    polys = B.polys()
    if any(p is None for row in polys for p in row):
        bad = [f"b{p + 1}{i + 1}" for p in range(3) for i in range(3) if polys[p][i] is None]
        out.status = "unknown"
        out.reasons.append(f"non-polynomial entries {', '.join(bad)}; parity undecidable")
        for p in range(3):
            for i in range(3):
                if polys[p][i] is None:
                    out.reasons.append(f"b{p + 1}{i + 1}: {_numeric_parity_evidence(B[p][i], 0)}")
        return out

    def fail(msg):
        out.status = "fail"
        out.reasons.append(msg)

    for i in range(3):
        if poly_parity(polys[0][i]) is not Parity.EVEN:
            fail(f"b1{i + 1} = {polys[0][i]} is not even")
        lower = [polys[1][i], polys[2][i]]
        if all(p.is_zero() for p in lower):
            continue
        if k.denominator != 1:
            fail(f"column {i + 1}: m/n = {k} is not an integer but rows 2-3 are nonzero polynomials")
            continue
        for p, poly in zip((2, 3), lower):
            if poly.is_zero():
                continue
            if _low_order(poly) < k:
                fail(f"b{p}{i + 1} = {poly} is not divisible by t^{k}")
            elif poly_parity(_shift(poly, int(k))) is not Parity.EVEN:
                fail(f"b{p}{i + 1}/t^{k} = {_shift(poly, int(k))} is not even")

    gram = _gram_poly(polys)
    if any(not g.constant_term() == 0 for row in gram for g in row):
        fail("d/dt(B^T B) does not vanish at t = 0, so the limit of d/dt(B^T B)/t does not exist")
        return out
    limit = [[g.coefficient((1,)) for g in row] for row in gram]
    out.numbers["limit"] = _fraction_matrix(limit)
    out.numbers["limit_min_eig"] = min_eig(np.array(limit, dtype=float))
    if not sylvester_positive(limit):
        fail("lim d/dt(B^T B)/t is not positive definite")

    h = 1e-3
    f1 = gram_derivative(B, h) / h
    f2 = gram_derivative(B, h / 10) / (h / 10)
    richardson = (10 * f2 - f1) / 9
    err = float(np.max(np.abs(richardson - np.array(limit, dtype=float))))
    out.numbers["richardson_error"] = err
    if err > 1e-6:
        fail(f"numerical limit disagrees with the exact one by {err:.3g}")

    cases = []
    for i in range(3):
        b1 = polys[0][i]
        case_i = b1.coefficient((0,)) != 0 and b1.coefficient((2,)) != 0
        case_ii = m == n and any(polys[p][i].coefficient((1,)) != 0 for p in (1, 2))
        cases.append({"column": i + 1, "case_i": case_i, "case_ii": case_ii})
    out.numbers["nondegeneracy_cases"] = cases
    return out


# -- monotonicity --------------------------------------------------------------

@dataclass
class ColumnMonotonicity:
    column: int
    sign_changes: list[float]
    monotone_on_pd: bool
    direction: str


def monotonicity_check(B: MatrixFn, grid, intervals=None) -> list[ColumnMonotonicity]:
    """Sign behaviour of ``d/dt sum_p b_pi^2`` (the diagonal of the Gram derivative)."""
    grid = np.asarray(grid, dtype=float)
    if intervals is None:
        intervals = pd_interval(B, (float(grid[0]), float(grid[-1])))
    diag = np.diagonal(gram_derivative(B, grid), axis1=-2, axis2=-1)
    out = []
    for i in range(3):
        s = diag[:, i]
        f = lambda x, i=i: float(gram_derivative(B, x)[i, i])  # noqa: E731
        changes = []
        sgn = np.sign(s)
        for a in range(len(grid) - 1):
            if sgn[a] * sgn[a + 1] < 0:
                changes.append(_refine(f, grid[a], grid[a + 1]))
        on_pd = True
        for lo, hi in intervals:
            inside = (grid > lo) & (grid < hi)
            if np.any(s[inside] <= 0):
                on_pd = False
        if np.all(s > 0):
            direction = "increasing"
        elif np.all(s < 0):
            direction = "decreasing"
        elif np.all(s == 0):
            direction = "constant"
        else:
            direction = "mixed"
        out.append(ColumnMonotonicity(i + 1, changes, on_pd and bool(intervals), direction))
    return out


# -- aggregate report ----------------------------------------------------------

@dataclass
class TripleReport:
    domain: tuple[float, float]
    pd_intervals: list[tuple[float, float]]
    min_eig_range: tuple[float, float]
    negative_intervals: list[tuple[float, float]] = field(default_factory=list)
    symmetry_residual: float | None = None
    invertibility: Invertibility | None = None
    monotonicity: list[ColumnMonotonicity] = field(default_factory=list)
    extensions: list[ExtensionVerdict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def analyse(B: MatrixFn, C: MatrixFn | None = None, n_grid: int = DEFAULT_GRID,
            n_scan: int = DEFAULT_SCAN) -> TripleReport:
    """Positive-definiteness, invertibility, monotonicity and (with ``C``) symmetry."""
    grid = B.grid(n_grid)
    bracket = (float(grid[0]), float(grid[-1]))
    intervals = pd_interval(B, bracket, n_scan)
    eigs = min_eig(gram_derivative(B, grid))
    report = TripleReport(B.domain, intervals, (float(np.min(eigs)), float(np.max(eigs))))
    if not intervals:
        report.negative_intervals = nd_interval(B, bracket, n_scan)
        if report.negative_intervals:
            report.notes.append("negative-definite region found; substitute t -> -t to obtain a positive one")
        else:
            report.notes.append("no symplectic region: d/dt(B^T B) is nowhere definite")
    report.invertibility = invertibility_check(B, grid, intervals)
    report.monotonicity = monotonicity_check(B, grid, intervals)
    if C is not None:
        report.symmetry_residual = symmetry_residual(B, C, grid)
        report.notes.append("C may be rescaled by a constant to make curvature periods integral")
    return report
