"""The theorem matrix: structural claims re-derived on a concrete manifold.

Each entry re-checks one claim through the engine's own traces and
decompositions.  Hypotheses that fail on the instance are reported as
"hypothesis-not-met", and every known discrepancy in quoted constants is
computed on both readings and surfaced as a note.
"""

from fractions import Fraction

from framegeom import (
    RingElement,
    VectorField,
    catalog_load,
    curvature_bundle,
    theorem_suite,
    xi_field,
)

parsed = catalog_load("kenmotsu-example-5d")
spec = parsed.spec
bundle = curvature_bundle(spec)

# Extra fields that activate the conditional checks:
#   w = exp(y5) xi   -- concircular and properly conformal,
#   s = y2 e^{y5} e1 -- divergence-free,
#   h = xi, declared as the gradient of the last coordinate.
scaled = [RingElement.zero(5) for _ in range(5)]
scaled[4] = RingElement.exponential(5, 1)
sol = [RingElement.zero(5) for _ in range(5)]
sol[0] = RingElement.coordinate(5, 1) * RingElement.exponential(5, 1)
fields = dict(parsed.fields)
fields["w"] = VectorField("w", tuple(scaled))
fields["s"] = VectorField("s", tuple(sol))
fields["h"] = VectorField("h", xi_field(spec).components, declared_gradient=True)

for result in theorem_suite(spec, bundle, fields, Fraction(1)):
    print(f"[{result.status:>18}] {result.theorem_id}")
    for detail in result.details:
        print("    ", detail)
    for note in result.notes:
        print("     note:", note)
    print()
