"""Exact and numerical tools for multi-toric special-holonomy geometries."""

__version__ = "0.1.0"

from .coframe import InvForm, d_inv, sigma_from_B, top_coeff, wedge_inv
from .exprparse import ParseError, Parity, ScalarFn, eval_dual, parity, parse
from .exterior import Form, VectorField, contract, d, hodge, solve_potential, wedge
from .graph import (
    ToricGraph,
    check_graph,
    lambda_T,
    model_graph,
    quadrilateral_obstruction,
)
from .models import (
    Geometry,
    admissible_stabilizer,
    hierarchy_check,
    moment_maps,
    structure_forms,
    torus_generators,
    verify_multi_moment,
)
from .poly import Poly
from .triples import (
    MatrixFn,
    curvature_from_potentials,
    extension_check_circle,
    extension_check_su2,
    gram_derivative,
    invertibility_check,
    min_eig,
    monotonicity_check,
    pd_interval,
    symmetry_residual,
)
