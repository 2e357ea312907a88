"""Vector-field analysis: divergence, metric Lie derivative, field classes.

Fields carry ring-function components on the frame.  The catalog's 5d entry
ships with two fields: the Reeb vector xi and a position-type field z whose
components are (y1 e^{y5}, ..., y4 e^{y5}, 1).
"""

from framegeom import (
    RingElement,
    VectorField,
    catalog_load,
    conformal_killing_classify,
    covariant_derivative,
    curvature_bundle,
    divergence,
    lie_derivative_metric,
    torse_forming_decompose,
)

parsed = catalog_load("kenmotsu-example-5d")
spec, fields = parsed.spec, parsed.fields
conn = curvature_bundle(spec).conn
z, xi = fields["z"], fields["xi"]

# Covariant derivatives mix the derivation action with the connection:
nabla_1_z = covariant_derivative(spec, conn, 0, z)
print("nabla_{e1} z components:", [str(comp) for comp in nabla_1_z.components])

# Divergence is the frame trace of X -> nabla_X z:
print("div z  =", divergence(spec, conn, z))
print("div xi =", divergence(spec, conn, xi))

# The Lie derivative of the metric is the symmetrized covariant derivative;
# for both catalog fields it is a multiple of g - eta x eta:
lie = lie_derivative_metric(spec, conn, z)
print("(L_z g)(e1,e1) =", lie[0, 0], "  (L_z g)(e5,e5) =", lie[4, 4])

# Conformal-Killing detection with refinement.  Neither catalog field is
# conformal, but exp(y5) * xi is a proper conformal field:
print("z conformal:", conformal_killing_classify(spec, conn, z).label)
scaled = [RingElement.zero(5) for _ in range(5)]
scaled[4] = RingElement.exponential(5, 1)
w = VectorField("w", tuple(scaled))
report = conformal_killing_classify(spec, conn, w)
print("exp(y5) xi conformal:", report.label, "with factor", report.factor)

# Torse-forming decomposition nabla_X rho = Psi X + gamma(X) rho.  The Reeb
# field always decomposes with Psi = 1 and gamma = -eta:
torse = torse_forming_decompose(spec, conn, xi)
print("xi: Psi =", torse.psi, " gamma =", [str(g) for g in torse.gamma],
      " subclass =", torse.subclass)

# The scaled Reeb field has vanishing one-form, making it concircular:
torse = torse_forming_decompose(spec, conn, w)
print("exp(y5) xi: Psi =", torse.psi, " subclass =", torse.subclass)

# On the flat abelian frame the catalog carries the classic flat examples:
flat = catalog_load("abelian-flat-3d")
flat_conn = curvature_bundle(flat.spec).conn
for name in ("e1", "position"):
    torse = torse_forming_decompose(flat.spec, flat_conn, flat.fields[name])
    print(f"flat frame, field {name}: subclass = {torse.subclass}")
