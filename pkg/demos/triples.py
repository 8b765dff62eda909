"""
Weakly coherent triples on R x SU(2)
====================================

A 3x3 matrix B(t) gives three closed invariant two-forms on R x SU(2).  They
form a weakly coherent triple where d/dt(B^T B) is positive definite.  The
scripts below walk through the three bundled examples.
"""

import math

import numpy as np

from multitoric import triples
from multitoric.cli import bundled_config
from multitoric.coframe import pairing_matrix, sigma_from_B
from multitoric.config import load_config

ex1 = load_config(bundled_config("example1"))
B = ex1.B
print(B)

# the pairing of the two-forms is the Gram derivative
ts = np.linspace(-1, 1, 5)
sig = sigma_from_B(B)
print(np.abs(pairing_matrix(sig, sig, ts) - triples.gram_derivative(B, ts)).max())

X = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
print("min eig of X:", triples.min_eig(X), -math.sqrt(2))

iv = triples.pd_interval(B, ex1.scan_bracket)
print("positive definite on", iv, " expected lower end", -math.log(2) / 2)

# %%
# Example 2 vanishes to second order at t = 0, where an SU(2) orbit is
# collapsed.  The extension test checks the t^2 * even structure and that
# F^T F is positive definite at the origin.
ex2 = load_config(bundled_config("example2"))
print(triples.pd_interval(ex2.B, ex2.scan_bracket))
v = triples.extension_check_su2(ex2.B)
print(v.status, v.numbers["FtF0"])

# Curvature from symmetric potentials, away from t = 0 where B is invertible.
cfg = load_config(bundled_config("example2_curvature"))
C = triples.curvature_from_potentials(cfg.B, cfg.S, cfg.D)
grid = cfg.B.grid(256)
print("symmetry residual", triples.symmetry_residual(cfg.B, C, grid))

# %%
# Example 3 has a circle orbit collapsing at t = 0.
ex3 = load_config(bundled_config("example3"))
print(triples.pd_interval(ex3.B, ex3.scan_bracket))
v = triples.extension_check_circle(ex3.B, 1, 1)
print(v.status, v.reasons)
print("limit of d/dt(B^T B)/t:", v.numbers["limit"])

# with b21 = t^3 in place of t^4 every entry has the required shape
fixed = triples.MatrixFn.from_strings(
    [["1 + t^2/2", "0", "0"], ["t^3", "t", "0"], ["0", "t^3", "t"]], (0, 2))
print(triples.extension_check_circle(fixed, 1, 1).status)

# %%
# Summary report for example 1.
rep = triples.analyse(B)
print(rep.pd_intervals, rep.invertibility, [c.direction for c in rep.monotonicity])
