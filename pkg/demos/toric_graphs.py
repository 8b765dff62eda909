"""
Toric image graphs
==================

The image of the singular set under the multi-moment map is a graph whose
edges carry primitive integer directions.  At a trivalent vertex the three
outgoing directions sum to zero.
"""

from multitoric import graph
from multitoric.models import Geometry

G = graph.model_graph(Geometry.CY)
for v, _ in enumerate(G.vertices):
    print("vertex", v, "outgoing", G.outward(v))

for vc in graph.check_graph(G):
    print(vc)

# Graphviz source; rays end at invisible sink nodes
print(graph.to_dot(G))

# %%
# Lambda^3 R^4 is identified with R^4 through the torus volume form.
xi = graph.vol_contract((1, 2, 0, -1))
print(xi, "->", graph.lambda_T(xi))

# %%
# Stabiliser cycles.  Consecutive two-dimensional stabilisers meet in a line,
# which gives the direction of the edge between them.  A polygon closes only
# if these directions admit a relation with every coefficient nonzero.
E1, E2, E3, E4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
quad = [[E1, E3], [E2, E3], [E2, E4], [E1, E4]]
rep = graph.quadrilateral_obstruction(quad)
print("edges", rep.edge_directions, "rank", rep.rank, "contradiction", rep.contradiction)

# A quadrilateral that does close, sitting in a 3-dimensional subspace.
closing = [[E1, (0, 1, 1, 0)], [E1, E2], [E2, (-1, 0, 1, 0)], [(-1, 0, 1, 0), (0, 1, 1, 0)]]
rep = graph.quadrilateral_obstruction(closing)
print("edges", rep.edge_directions, "relation", rep.closing_coefficients)

# The coordinate triangle has three independent edge directions, so it
# cannot close either.
rep = graph.quadrilateral_obstruction([[E1, E2], [E2, E3], [E3, E1]])
print("triangle contradiction:", rep.contradiction)
