"""
Multi-moment maps on the flat models
====================================

Each flat model R^4, R^6, R^7, R^8 carries closed structure forms and a
torus acting on complex coordinates.  The multi-moment map components are
polynomials whose differentials equal the forms with torus generators
plugged in.  Everything here is exact rational arithmetic.
"""

from multitoric import models
from multitoric.exterior import d, evaluate_on, hodge, wedge
from multitoric.models import Geometry

# the hyperKaehler forms on R^4 (coordinates x4..x7 of R^8)
w1, w2, w3 = models.hk_forms()
print("omega1 =", w1)

# one generator, three moment map components
U, = models.torus_generators(Geometry.HK)
nu = models.moment_maps(Geometry.HK)
print("nu1 =", nu[0])
print("d nu1 == omega1(U, .):", d(models.Form.scalar(nu[0])) == evaluate_on(w1, U))

# %%
# The G2 three-form and its dual.  The Hodge star is taken in the
# frame e1..e7 with its standard orientation.
phi, psi = models.g2_forms()
frame = Geometry.G2.frame
print("terms in phi:", len(phi), " terms in *phi:", len(psi))
print("*phi == hodge(phi):", psi == hodge(phi, frame))
print("phi ^ *phi =", wedge(phi, psi))

# %%
# Full verification, one line per identity.
for g in Geometry:
    rep = models.verify_multi_moment(g)
    for c in rep.checks:
        print(f"{g.label:6s} {c.status}  {c.name}")
    for note in rep.notes:
        print(f"{g.label:6s} note  {note}")

# The sign pattern of the Spin(7) identities only works for one reading of
# the index convention; the other is rejected.
print(models.spin7_convention_scan())

# %%
# Smaller structures embed in larger ones.
for c in models.hierarchy_check().checks:
    print(c.status, c.name)

# admissible stabilisers for a k-torus acting on the Spin(7) model
for k in range(1, 6):
    print(k, models.admissible_stabilizer(k))
