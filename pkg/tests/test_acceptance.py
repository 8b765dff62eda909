"""Acceptance criteria, one pass/fail line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import itertools
import math
import time
from fractions import Fraction

import numpy as np

from multitoric import graph, models, triples
from multitoric.coframe import pairing_matrix, sigma_from_B
from multitoric.exprparse import eval_dual, parse
from multitoric.exterior import Form, VectorField, contract, d, hodge, wedge
from multitoric.models import Geometry
from multitoric.poly import Poly
from multitoric.triples import MatrixFn

from conftest import ACCEPTANCE
from oracles import random_poly_matrix

EX1 = MatrixFn.from_strings([["exp(t)", "1", "0"], ["0", "exp(t)", "1"], ["0", "0", "exp(t)"]], (-2, 2))
EX2 = MatrixFn.from_strings([["t^2", "t^4", "0"], ["0", "t^2", "t^4"], ["0", "0", "t^2"]], (0, 2))
EX3 = MatrixFn.from_strings([["1 + t^2/2", "0", "0"], ["t^4", "t", "0"], ["0", "t^3", "t"]], (0, 2))
X = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
E1, E2, E3, E4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def record(label, ok, detail=""):
    line = f"{label:<28s} {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


# -- flat models ---------------------------------------------------------------

def test_flat_model_identities():
    start = time.perf_counter()
    reports = [models.verify_multi_moment(g) for g in Geometry]
    elapsed = time.perf_counter() - start
    n = sum(len(r.checks) for r in reports)
    ok = all(r.passed for r in reports) and elapsed < 1.0
    record("1  moment identities", ok, f"{n} exact identities, {elapsed:.3f} s")


def test_structure_hierarchy():
    phi, psi = models.g2_forms()
    omega, _, om = models.cy_forms()
    frame = Geometry.G2.frame
    e1 = Form.basis(8, 1)
    star = hodge(phi, frame)
    ok1 = star == wedge(e1, om) + wedge(omega, omega) / 2
    e0 = Form.basis(8, 0)
    ok2 = wedge(e0, phi) + star == models.spin7_form_printed()
    Phi = models.spin7_form()
    ok3 = hodge(Phi) == Phi
    record("2  hierarchy", ok1 and ok2 and ok3,
           f"*7phi={ok1}, e0^phi+*7phi=Phi {ok2}, *8Phi=Phi {ok3}")


# -- graphs ----------------------------------------------------------------------

def test_calabi_yau_graph():
    G = graph.model_graph(Geometry.CY)
    dirs = set(G.outward(0))
    expected = {(1, 1, 0, 0), (0, -1, 0, 0), (-1, 0, 0, 0)}
    total = tuple(sum(c) for c in zip(*dirs))
    record("3  CY toric graph", dirs == expected and total == (0, 0, 0, 0),
           f"directions {sorted(dirs)}, sum {total}")


# -- the three worked triples -------------------------------------------

def test_triple_example1():
    rng = np.random.default_rng(4)
    err = max(np.abs(triples.gram_derivative(EX1, t)
                     - (2 * math.exp(2 * t) * np.eye(3) + math.exp(t) * X)).max()
              for t in rng.uniform(-2, 2, 10))
    eig_err = abs(triples.min_eig(X) + math.sqrt(2))
    (iv,) = triples.pd_interval(EX1, (-2, 2))
    end_err = abs(iv[0] + math.log(2) / 2)
    record("4  example 1", err <= 1e-12 and eig_err <= 1e-12 and end_err <= 1e-6,
           f"gram err {err:.1e}, min_eig err {eig_err:.1e}, endpoint {iv[0]:.10f} (err {end_err:.1e})")


def test_triple_example2():
    grid = np.linspace(0.01, 0.99, 2048)
    pd = bool(np.all(triples.min_eig(triples.gram_derivative(EX2, grid)) > 0))
    v = triples.extension_check_su2(EX2)
    ident = v.numbers["FtF0"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    record("5  example 2", pd and v.passed and ident,
           f"pd on (0.01, 0.99): {pd}, su2 extension {v.status}, FtF(0) = Id: {ident}")


def test_triple_example3_numerics():
    rng = np.random.default_rng(6)
    err = 0.0
    for t in rng.uniform(0, 2, 10):
        ref = t * np.array([[2 + t ** 2 + 8 * t ** 6, 5 * t ** 3, 0],
                            [5 * t ** 3, 2 + 6 * t ** 4, 4 * t ** 2],
                            [0, 4 * t ** 2, 2]])
        err = max(err, np.abs(triples.gram_derivative(EX3, t) - ref).max())
    h = 1e-4
    approx = (10 * triples.gram_derivative(EX3, h / 10) / (h / 10) - triples.gram_derivative(EX3, h) / h) / 9
    lim_err = np.abs(approx - 2 * np.eye(3)).max()
    (iv,) = triples.pd_interval(EX3, (0.001, 2))
    ok = err <= 1e-12 and lim_err <= 1e-6 and abs(iv[1] - 0.778) <= 0.005
    record("6  example 3 (numerics)", ok,
           f"gram err {err:.1e}, limit err {lim_err:.1e}, upper endpoint {iv[1]:.5f}")


def test_triple_example3_circle_extension():
    v = triples.extension_check_circle(EX3, 1, 1)
    record("6  example 3 (extension)", v.passed,
           f"circle m = n: {v.status}; " + "; ".join(v.reasons))


# -- random triples -------------------------------------------------------------------

def test_pairing_oracles():
    ts = np.linspace(-1.5, 1.5, 64)
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        bs, _ = random_poly_matrix(rng)
        cs, _ = random_poly_matrix(rng)
        B, C = MatrixFn.from_strings(bs), MatrixFn.from_strings(cs)
        sig, F = sigma_from_B(B), sigma_from_B(C)
        worst = max(worst,
                    np.abs(pairing_matrix(sig, sig, ts) - triples.gram_derivative(B, ts)).max(),
                    np.abs(pairing_matrix(F, sig, ts) - triples.cross_derivative(B, C, ts)).max())
    record("7  q/r oracle", worst <= 1e-10, f"100 trials, max abs diff {worst:.1e}")


def test_symmetry_solution():
    rng = np.random.default_rng(8)
    worst = 0.0
    invertible = True
    for _ in range(100):
        rows = [[("(2 + t)" if p == i else "0")
                 + "".join(f" + ({c / 20})*t^{k}" for k, c in enumerate(rng.integers(-2, 3, 3), 1))
                 for i in range(3)] for p in range(3)]
        B = MatrixFn.from_strings(rows, (0.5, 1.5))
        srows = [[None] * 3 for _ in range(3)]
        for p, i in itertools.combinations_with_replacement(range(3), 2):
            srows[p][i] = srows[i][p] = " + ".join(f"({c})*t^{k}" for k, c in enumerate(rng.integers(-3, 4, 5)))
        S = MatrixFn.from_strings(srows, (0.5, 1.5))
        D = rng.integers(-5, 6, (3, 3))
        grid = B.grid(128)
        C = triples.curvature_from_potentials(B, S, D, grid)
        worst = max(worst, triples.symmetry_residual(B, C, grid))
        inv = triples.invertibility_check(B, grid)
        invertible &= inv.applicable and inv.invertible
    record("8  symmetry solution", worst <= 1e-9 and invertible,
           f"100 trials, max residual {worst:.1e}, det B != 0 on pd grid: {invertible}")


# -- stabiliser cycles ----------------------------------------------------------------------------

def test_quadrilateral_obstruction():
    rep = graph.quadrilateral_obstruction([[E1, E3], [E2, E3], [E2, E4], [E1, E4]])
    record("9  quadrilateral", rep.contradiction,
           f"edges {rep.edge_directions}, rank {rep.rank}, contradiction {rep.contradiction}")


def test_triangle_configuration():
    rep = graph.quadrilateral_obstruction([[E1, E2], [E2, E3], [E3, E1]])
    record("9  triangle", not rep.contradiction,
           f"edges {rep.edge_directions}, rank {rep.rank}, contradiction {rep.contradiction}")


# -- property suites ------------------------------------------------------------------------------

def _rand_poly(rng, n=4):
    terms = {}
    for _ in range(rng.integers(0, 4)):
        exp = tuple(int(x) for x in rng.multinomial(int(rng.integers(0, 3)), [1 / n] * n))
        terms[exp] = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
    return Poly(n, terms)


def _rand_form(rng, p, n=4, constant=False):
    coeffs = {}
    for idx in itertools.combinations(range(n), p):
        if rng.random() < 0.5:
            coeffs[idx] = Poly.const(n, int(rng.integers(-4, 5))) if constant else _rand_poly(rng, n)
    return Form(n, p, coeffs)


def test_exterior_laws():
    rng = np.random.default_rng(10)
    n, trials = 4, 500
    counts = dict.fromkeys(["graded", "dd", "leibniz", "interior", "starstar"], 0)
    for _ in range(trials):
        p, q = (int(x) for x in rng.integers(0, 3, 2))
        if p + q > n - 1:
            p, q = p - 1, q
        a, b = _rand_form(rng, p), _rand_form(rng, q)
        counts["graded"] += wedge(a, b) == wedge(b, a) * (-1) ** (p * q)
        counts["dd"] += d(d(a)).is_zero()
        lhs = d(wedge(a, b))
        counts["leibniz"] += lhs == wedge(d(a), b) + wedge(a, d(b)) * (-1) ** p
        Xf = VectorField([_rand_poly(rng) for _ in range(n)])
        a1, b1 = _rand_form(rng, p + 1), _rand_form(rng, q)
        rhs = wedge(contract(Xf, a1), b1)
        if q:
            rhs = rhs + wedge(a1, contract(Xf, b1)) * (-1) ** (p + 1)
        counts["interior"] += contract(Xf, wedge(a1, b1)) == rhs
        r = int(rng.integers(0, n + 1))
        c = _rand_form(rng, r, constant=True)
        counts["starstar"] += hodge(hodge(c)) == c * (-1) ** (r * (n - r))
    ok = all(v == trials for v in counts.values())
    record("10 exterior laws", ok, ", ".join(f"{k} {v}/{trials}" for k, v in counts.items()))


def test_parser_derivatives():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(500):
        cs = [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6))) for _ in range(int(rng.integers(1, 8)))]
        e = parse(" + ".join(f"({c})*t^{k}" for k, c in enumerate(cs)))
        exact = e.to_poly().diff(0)
        t = float(rng.uniform(-2, 2))
        ref = float(exact(Fraction(t)))
        worst = max(worst, abs(eval_dual(e, t)[1] - ref) / max(1.0, abs(ref)))
    record("10 parser derivatives", worst <= 1e-12, f"500 cases, max rel err {worst:.1e}")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
