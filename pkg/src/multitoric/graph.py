"""Toric image graphs: the volume identification, trivalence/zero-tension checks,
graph extraction for the flat Calabi-Yau model and the quadrilateral obstruction."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np
import sympy

from .exterior import Form, merge_indices
from .models import COMPLEX_COORDS, Geometry, moment_maps

RANK = 4
Vector = tuple[int, ...]


class GraphError(ValueError):
    """Malformed graph or stabiliser data."""


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries (orientation kept)."""
    v = tuple(int(x) for x in v)
    g = math.gcd(*v)
    if g == 0:
        raise GraphError("zero direction vector")
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return math.gcd(*(int(x) for x in v)) == 1


def canonical_line(v: Sequence[int]) -> Vector:
    """Primitive generator of the line through ``v``, first nonzero entry positive."""
    p = primitive(v)
    first = next(x for x in p if x)
    return p if first > 0 else tuple(-x for x in p)


# -- the volume identification Lambda^3 R^4 = R^4 -------------------------

def vol_contract(x: Sequence) -> Form:
    """``vol_T(X, ., ., .)`` for ``vol_T = e1^e2^e3^e4`` (indices 0..3 here)."""
    coeffs = {}
    for i in range(RANK):
        rest = tuple(j for j in range(RANK) if j != i)
        coeffs[rest] = Fraction(x[i]) * (-1) ** i
    return Form(RANK, 3, coeffs)


def lambda_T(xi: Form) -> tuple[Fraction, ...]:
    """Inverse of ``X -> vol_T(X, ., ., .)`` on constant 3-forms over R^4."""
    if xi.nvars != RANK or xi.degree != 3:
        raise GraphError("lambda_T takes a 3-form on R^4")
    if not xi.is_constant():
        raise GraphError("lambda_T needs constant coefficients")
    out = []
    for i in range(RANK):
        rest = tuple(j for j in range(RANK) if j != i)
        sign, _ = merge_indices((i,), rest)
        out.append(xi[rest].constant_term() * sign)
    return tuple(out)


# -- graphs ---------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    """Edge from vertex ``start``; ``end is None`` marks a ray to infinity.

    ``direction`` points from ``start`` towards ``end``.
    """

    start: int
    end: int | None
    direction: Vector

    def __post_init__(self):
        if len(self.direction) != RANK:
            raise GraphError(f"direction {self.direction} must have {RANK} entries")
        if not any(self.direction):
            raise GraphError("edge direction must be nonzero")
        if not is_primitive(self.direction):
            raise GraphError(f"direction {self.direction} is not primitive")


@dataclass
class ToricGraph:
    vertices: list[tuple[Fraction, ...]]
    edges: list[Edge] = field(default_factory=list)

    def __post_init__(self):
        self.vertices = [tuple(Fraction(c) for c in v) for v in self.vertices]
        for v in self.vertices:
            if len(v) != RANK:
                raise GraphError(f"vertex {v} must have {RANK} coordinates")
        n = len(self.vertices)
        for ed in self.edges:
            for end in (ed.start, ed.end):
                if end is not None and not 0 <= end < n:
                    raise GraphError(f"edge endpoint {end} is not a vertex")

    def outward(self, v: int) -> list[Vector]:
        dirs = []
        for ed in self.edges:
            if ed.start == v:
                dirs.append(ed.direction)
            if ed.end == v:
                dirs.append(tuple(-x for x in ed.direction))
        return dirs

    def to_dict(self) -> dict:
        return {
            "vertices": [[str(c) for c in v] for v in self.vertices],
            "edges": [
                {"from": ed.start, "to": ed.end, "direction": list(ed.direction)} for ed in self.edges
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ToricGraph:
        try:
            verts = data["vertices"]
            raw_edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"graph needs 'vertices' and 'edges': missing {exc}") from None
        edges = []
        for n, item in enumerate(raw_edges):
            try:
                edges.append(Edge(int(item["from"]), item.get("to"), tuple(int(x) for x in item["direction"])))
            except GraphError as exc:
                raise GraphError(f"edges[{n}]: {exc}") from None
            except (KeyError, TypeError, ValueError) as exc:
                raise GraphError(f"edges[{n}]: malformed edge ({exc})") from None
        try:
            vertices = [tuple(Fraction(str(c)) for c in v) for v in verts]
        except (TypeError, ValueError) as exc:
            raise GraphError(f"vertices: {exc}") from None
        return cls(vertices, edges)


def model_graph(g: Geometry = Geometry.CY) -> ToricGraph:
    """Image of the complex coordinate axes of C^3 under ``(nu1, nu2)``.

    Each axis ``{z^a != 0}`` is a ray from the origin; its tangent is read off
    from the moment maps evaluated at a unit point on the axis.
    """
    if g is not Geometry.CY:
        raise GraphError("only the flat Calabi-Yau model graph is implemented")
    nu = moment_maps(g)[:2]
    coords = COMPLEX_COORDS["cy"]
    edges = []
    for key in ("z1", "z2", "z3"):
        a, _, _ = coords[key]
        point = [0] * 8
        point[a] = 1
        image = [int(2 * p(*point)) for p in nu]
        edges.append(Edge(0, None, primitive(image + [0] * (RANK - 2))))
    return ToricGraph([(0, 0, 0, 0)], edges)


@dataclass
class VertexCheck:
    vertex: int
    valence: int
    tension: Vector
    passed: bool


def check_graph(G: ToricGraph) -> list[VertexCheck]:
    """Trivalence and zero tension at every finite vertex."""
    out = []
    for v in range(len(G.vertices)):
        dirs = G.outward(v)
        tension = tuple(sum(col) for col in zip(*dirs)) if dirs else (0,) * RANK
        ok = len(dirs) == 3 and not any(tension)
        out.append(VertexCheck(v, len(dirs), tension, ok))
    return out


def graph_passes(G: ToricGraph) -> bool:
    return all(c.passed for c in check_graph(G))


def to_dot(G: ToricGraph, name: str = "toric") -> str:
    """Graphviz rendering; rays end at invisible sink nodes."""
    lines = [f"graph {name} {{"]
    for i, v in enumerate(G.vertices):
        label = "(" + ", ".join(str(c) for c in v) + ")"
        lines.append(f'  v{i} [label="{label}"];')
    sinks = 0
    for ed in G.edges:
        label = "(" + ", ".join(map(str, ed.direction)) + ")"
        if ed.end is None:
            lines.append(f'  inf{sinks} [shape=point, style=invis];')
            lines.append(f'  v{ed.start} -- inf{sinks} [label="{label}"];')
            sinks += 1
        else:
            lines.append(f'  v{ed.start} -- v{ed.end} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- quadrilateral obstruction ---------------------------------------------

@dataclass
class ObstructionReport:
    edge_directions: list[Vector]
    rank: int
    contradiction: bool
    closing_coefficients: list[int] | None

    def to_dict(self) -> dict:
        return {
            "edge_directions": [list(v) for v in self.edge_directions],
            "rank": self.rank,
            "contradiction": self.contradiction,
            "closing_coefficients": self.closing_coefficients,
        }


def _span_intersection(a: np.ndarray, b: np.ndarray) -> list[Vector]:
    """Integer basis of span(a) ∩ span(b) for integer row bases."""
    m = sympy.Matrix(np.vstack([a, -b]).T.tolist())
    basis = []
    for null in m.nullspace():
        coeffs = null[: a.shape[0], :]
        vec = sympy.Matrix(a.T.tolist()) * coeffs
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
        basis.append(primitive([int(x * den) for x in vec]))
    return basis


def quadrilateral_obstruction(stabilizers: Sequence[Sequence[Sequence[int]]]) -> ObstructionReport:
    """Can a closed polygon have edges along the adjacent-stabiliser intersections?

    ``stabilizers`` is a cyclic list of two-dimensional subalgebras, each given by
    two integer generators.  The edge between consecutive stabilisers is parallel
    to their (one-dimensional) intersection.  A closed polygon needs a linear
    dependence among the edge directions with every coefficient nonzero; if the
    directions are linearly independent the configuration is contradictory.
    """
    if len(stabilizers) < 3:
        raise GraphError("need at least three stabilisers to form a cycle")
    bases = []
    for n, gens in enumerate(stabilizers):
        arr = np.array(gens, dtype=int)
        if arr.ndim != 2 or arr.shape[1] != RANK:
            raise GraphError(f"stabiliser {n}: generators must be vectors in Z^{RANK}")
        if sympy.Matrix(arr.tolist()).rank() != arr.shape[0] or arr.shape[0] != 2:
            raise GraphError(f"stabiliser {n}: need two linearly independent generators")
        bases.append(arr)
    dirs = []
    k = len(bases)
    for n in range(k):
        inter = _span_intersection(bases[n], bases[(n + 1) % k])
        if len(inter) != 1:
            raise GraphError(
                f"stabilisers {n} and {(n + 1) % k} meet in dimension {len(inter)}, expected 1"
            )
        dirs.append(inter[0])
    rank = sympy.Matrix([list(v) for v in dirs]).rank()
    closing = _closing_combination(dirs) if rank < len(dirs) else None
    return ObstructionReport(dirs, rank, closing is None, closing)


def _closing_combination(dirs: list[Vector], tries: int = 4) -> list[int] | None:
    """Integer coefficients, all nonzero, with ``sum c_i d_i = 0``.

    Searches small integer combinations of a nullspace basis; a relation with
    no zero coefficient exists iff no coordinate vanishes on the whole
    nullspace, in which case a generic combination finds one.
    """
    null = sympy.Matrix([list(v) for v in dirs]).T.nullspace()
    if not null:
        return None
    for weights in product(range(1, tries + 1), repeat=len(null)):
        vec = sum((w * b for w, b in zip(weights, null)), sympy.zeros(len(dirs), 1))
        if all(x != 0 for x in vec):
            den = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
            ints = primitive([int(x * den) for x in vec])
            return list(ints) if ints[0] > 0 else [-x for x in ints]
    return None
