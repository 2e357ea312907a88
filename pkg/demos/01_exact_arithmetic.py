"""The exact coefficient ring: warped polynomials and frame derivations.

Every scalar in framegeom is either a rational or a finite sum of monomials
y1^a1 ... yd^ad * exp(k*yd).  There is no floating point anywhere: results
are exact, and equalities in the demos below are exact equalities.
"""

from framegeom import RingElement, apply_derivation, catalog_load, parse_ring_element

spec = catalog_load("kenmotsu-example-5d").spec  # dimension 5, warped frame

# Build y1 * exp(y5) three ways: constructors, arithmetic, and the parser.
y1 = RingElement.coordinate(5, 0)
e_up = RingElement.exponential(5, 1)
built = y1 * e_up
parsed = parse_ring_element("y1 * exp(y5)", dim=5)
print("built:  ", built)
print("parsed: ", parsed)
assert built == parsed

# The frame vector fields act as derivations.  On this warped frame the
# non-Reeb directions carry an exp(-y5) factor, so e1 applied to y1*exp(y5)
# collapses to the constant 1:
print("e1(y1 * exp(y5)) =", apply_derivation(0, built, spec))
assert apply_derivation(0, built, spec) == 1

# The last frame direction is a plain coordinate derivative:
f = parse_ring_element("exp(3*y5)", dim=5)
print("e5(exp(3*y5))    =", apply_derivation(4, f, spec))

# Derivations satisfy the Leibniz rule exactly:
g = parse_ring_element("y2^2 - 1/3", dim=5)
lhs = apply_derivation(0, built * g, spec)
rhs = apply_derivation(0, built, spec) * g + built * apply_derivation(0, g, spec)
assert lhs == rhs
print("Leibniz check:    e1(f*g) == e1(f)*g + f*e1(g)")

# The bracket of derivations reproduces the frame bracket table
# [e1, e5] = e1 on any ring function:
h = parse_ring_element("y1 * y3 * exp(-2*y5) + y4", dim=5)
commutator = (
    apply_derivation(0, apply_derivation(4, h, spec), spec)
    - apply_derivation(4, apply_derivation(0, h, spec), spec)
)
assert commutator == apply_derivation(0, h, spec)
print("bracket check:    (e1 e5 - e5 e1)(h) == e1(h)")

# The ring is an integral domain with decidable exact division:
product = (y1 + 1) * (y1 - 1)
quotient = product.exact_div(y1 - 1)
print("(y1^2 - 1) / (y1 - 1) =", quotient)
assert quotient == y1 + 1
assert product.exact_div(RingElement.coordinate(5, 1)) is None  # not divisible
