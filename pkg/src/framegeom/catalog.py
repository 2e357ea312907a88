"""Built-in manifold catalog.

Four entries:

* ``kenmotsu-example-5d``  -- the 5-dimensional warped frame with bracket
  table [e_i, e_5] = e_i (i <= 4), identity metric, phi pairing
  (e1 -> e3, e2 -> e4), xi = e5, and two named fields: the position-type
  field ``z`` with components (y1 e^{y5}, ..., y4 e^{y5}, 1) and ``xi``.
* ``kenmotsu-warped-3d`` / ``kenmotsu-warped-7d`` -- the same construction
  in dimensions 3 and 7.
* ``abelian-flat-3d`` -- the flat abelian frame with a valid almost-contact
  structure; carries a constant field ``e1`` and the ``position`` field.

``FIXTURES`` records the expected exact values for the 5d entry used by the
acceptance suite, including corrections to component tables sometimes quoted
for this example whose signs disagree with the exact computation.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .documents import ParsedManifold, serialize_manifold
from .errors import GeometryError
from .fields import VectorField, xi_field
from .manifold import ManifoldSpec
from .ring import RingElement


def _warped_spec(name: str, dim: int, phi_pairs: list[tuple[int, int]]) -> ManifoldSpec:
    last = dim - 1
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(last):
        c[i][last][i] = Fraction(1)
        c[last][i][i] = Fraction(-1)
    phi = [[Fraction(0)] * dim for _ in range(dim)]
    for a, b in phi_pairs:
        phi[b][a] = Fraction(1)
        phi[a][b] = Fraction(-1)
    return ManifoldSpec(name, dim, c, linalg.identity(dim), phi, last)


def _abelian_spec(name: str, dim: int, phi_pairs: list[tuple[int, int]]) -> ManifoldSpec:
    zero = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    phi = [[Fraction(0)] * dim for _ in range(dim)]
    for a, b in phi_pairs:
        phi[b][a] = Fraction(1)
        phi[a][b] = Fraction(-1)
    return ManifoldSpec(name, dim, zero, linalg.identity(dim), phi, dim - 1)


def _position_exp_field(dim: int) -> VectorField:
    """(y1 e^{yd}, ..., y_{d-1} e^{yd}, 1): the model position-type field."""
    comps = [
        RingElement.coordinate(dim, i) * RingElement.exponential(dim, 1)
        for i in range(dim - 1)
    ]
    comps.append(RingElement.constant(dim, 1))
    return VectorField("z", tuple(comps))


def _build(entry_id: str) -> ParsedManifold:
    if entry_id == "kenmotsu-example-5d":
        spec = _warped_spec(entry_id, 5, [(0, 2), (1, 3)])
        return ParsedManifold(spec, {"z": _position_exp_field(5), "xi": xi_field(spec)})
    if entry_id == "kenmotsu-warped-3d":
        spec = _warped_spec(entry_id, 3, [(0, 1)])
        return ParsedManifold(spec, {"z": _position_exp_field(3), "xi": xi_field(spec)})
    if entry_id == "kenmotsu-warped-7d":
        spec = _warped_spec(entry_id, 7, [(0, 3), (1, 4), (2, 5)])
        return ParsedManifold(spec, {"z": _position_exp_field(7), "xi": xi_field(spec)})
    if entry_id == "abelian-flat-3d":
        spec = _abelian_spec(entry_id, 3, [(0, 1)])
        fields = {
            "e1": VectorField.from_constants("e1", [1, 0, 0]),
            "position": VectorField(
                "position", tuple(RingElement.coordinate(3, i) for i in range(3))
            ),
        }
        return ParsedManifold(spec, fields)
    raise GeometryError(
        f"unknown catalog id {entry_id!r}; available: {', '.join(catalog_ids())}"
    )


def catalog_ids() -> list[str]:
    return [
        "kenmotsu-example-5d",
        "kenmotsu-warped-3d",
        "kenmotsu-warped-7d",
        "abelian-flat-3d",
    ]


def kenmotsu_catalog_ids() -> list[str]:
    return ["kenmotsu-example-5d", "kenmotsu-warped-3d", "kenmotsu-warped-7d"]


def catalog_load(entry_id: str) -> ParsedManifold:
    """A fresh spec + fields for a catalog entry."""
    return _build(entry_id)


def catalog_get(entry_id: str) -> dict:
    """The catalog entry in document form (what a manifold file would hold)."""
    parsed = _build(entry_id)
    return serialize_manifold(parsed.spec, parsed.fields)


#: Expected exact values for "kenmotsu-example-5d", used by the acceptance
#: suite.  "table_corrections" lists curvature components sometimes quoted
#: for this example whose signs contradict the exact tensor (the corrected
#: values are the ones consistent with the curvature symmetries and the
#: Ricci diagonal below).
FIXTURES = {
    "kenmotsu-example-5d": {
        "ricci_diagonal": "-4",
        "scalar_curvature": "-20",
        "star_ricci_diagonal": ("-1", "-1", "-1", "-1", "0"),
        "star_scalar": "-4",
        # For the field z: Omega(omega) = slope * omega + intercept.
        "soliton_slope": "4",
        "soliton_intercept": "4/5",
        "table_corrections": (
            {"component": "R(e2,e3)e2", "quoted": "-e3", "computed": "e3"},
            {"component": "R(e1,e5)e1", "quoted": "-e5", "computed": "e5"},
            {"component": "R(e1,e4)e1", "quoted": "-e4", "computed": "e4"},
        ),
    }
}
