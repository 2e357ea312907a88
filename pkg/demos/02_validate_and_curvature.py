"""Defining a manifold from raw frame data and walking the curvature stack.

The manifold is given entirely by constants: a bracket table, a frame
metric, the (1,1)-tensor phi and the index of the Reeb vector.  Everything
downstream -- connection, curvature, Ricci, star-Ricci, the derived flat
tensors -- is finite exact algebra in those constants.
"""

from fractions import Fraction

from framegeom import (
    ManifoldSpec,
    curvature_bundle,
    einstein_classify,
    levi_civita,
    q_flat_psi,
    q_tensor,
    star_ricci_kenmotsu,
    validate_almost_contact,
    validate_kenmotsu,
    w2_tensor,
)
from framegeom.linalg import identity

# The 5-dimensional warped frame: [e_i, e_5] = e_i for i <= 4, identity
# metric, phi pairing e1 <-> e3 and e2 <-> e4, Reeb vector e5.
dim = 5
c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
for i in range(4):
    c[i][4][i] = Fraction(1)
    c[4][i][i] = Fraction(-1)
phi = [[Fraction(0)] * dim for _ in range(dim)]
phi[2][0], phi[0][2] = Fraction(1), Fraction(-1)   # phi(e1) = e3, phi(e3) = -e1
phi[3][1], phi[1][3] = Fraction(1), Fraction(-1)   # phi(e2) = e4, phi(e4) = -e2
spec = ManifoldSpec("warped-5d", dim, c, identity(dim), phi, xi_index=4)

report = validate_almost_contact(spec)
print("almost contact:", report.is_almost_contact)

conn = levi_civita(spec)
print("connection samples: nabla_1 e1 =", conn.gamma[0][0],
      " nabla_1 e5 =", conn.gamma[0][4])

report = validate_kenmotsu(spec, conn)
print("kenmotsu:", report.is_kenmotsu)

bundle = curvature_bundle(spec, conn)
print("R(e1,e5)e5 =", bundle.riemann[0][4][4])
print("ricci diagonal:", [str(bundle.ricci[i][i]) for i in range(dim)])
print("scalar curvature:", bundle.scalar_r)

# Two independent routes to the star-Ricci tensor: the half-trace of
# Z -> phi(R(X, phi Y)Z), and the closed form Ric + (2n-1) g + eta x eta.
closed = star_ricci_kenmotsu(spec, bundle)
assert closed == bundle.star_ricci
print("star-ricci diagonal:", [str(bundle.star_ricci[i][i]) for i in range(dim)])
print("star scalar:", bundle.star_scalar, " offset r* - r =",
      bundle.star_scalar - bundle.scalar_r)

# This frame has constant curvature, so the projective-type tensor vanishes
# and the psi-deformed tensor flattens exactly at the Einstein factor.
print("w2 flat:", w2_tensor(spec, bundle).is_flat)
psi = q_flat_psi(spec, bundle)
print("q flat at psi =", psi, ":", q_tensor(spec, bundle, psi).is_flat)

einstein = einstein_classify(spec, bundle)
print("ricci class:", einstein.ricci.kind, "lambda =", einstein.ricci.lam)
print("star-ricci class:", einstein.star_ricci.kind,
      "lambda =", einstein.star_ricci.lam, "c =", einstein.star_ricci.c)
