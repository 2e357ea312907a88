"""The JSON manifold document format: parsing, validation, serialization.

A document describes one manifold and its named vector fields:

.. code-block:: json

    {
      "name": "example",
      "dimension": 5,
      "structure_constants": [{"i": 1, "j": 5, "k": 1, "value": "1"}, ...],
      "metric": "identity",
      "phi": [["0", ...], ...],
      "xi": 5,
      "fields": {
        "z": {
          "components": [
            [{"coeff": "1", "monomial": {"y1": 1}, "exp_weight": 1}],
            "y2 * exp(y5)",
            ...
          ],
          "declared_gradient": false
        }
      }
    }

All indices are 1-based.  Rationals travel as strings ("p" or "p/q"), never
as floats.  Omitted structure constants are zero; a bracket may be given for
(i, j) or (j, i) or both, but a conflicting duplicate is an error.  Field
components are lists of term objects or, equivalently, the textual ring form.
Every parse error carries the JSON path of the offending entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DocumentError, RingError, StructureError
from .fields import VectorField
from .manifold import ManifoldSpec, check_structure
from .ring import RingElement, format_rational, parse_rational, parse_ring_element


@dataclass(frozen=True)
class ParsedManifold:
    spec: ManifoldSpec
    fields: dict[str, VectorField]


def _require(condition, path, message):
    if not condition:
        raise DocumentError(path, message)


def _rational(value, path) -> Fraction:
    _require(isinstance(value, str), path, f"rational must be a string, got {type(value).__name__}")
    try:
        return parse_rational(value)
    except RingError as exc:
        raise DocumentError(path, str(exc)) from None


def _matrix(value, dim, path) -> tuple:
    _require(isinstance(value, list) and len(value) == dim, path,
             f"expected a {dim}x{dim} matrix")
    rows = []
    for i, row in enumerate(value):
        _require(isinstance(row, list) and len(row) == dim, f"{path}[{i}]",
                 f"expected {dim} entries")
        rows.append(tuple(_rational(v, f"{path}[{i}][{j}]") for j, v in enumerate(row)))
    return tuple(rows)


def _structure_constants(entries, dim, path):
    _require(isinstance(entries, list), path, "expected a list of bracket entries")
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen: dict[tuple[int, int, int], Fraction] = {}
    for idx, entry in enumerate(entries):
        epath = f"{path}[{idx}]"
        _require(isinstance(entry, dict), epath, "expected an object {i, j, k, value}")
        try:
            i, j, k = entry["i"], entry["j"], entry["k"]
            raw = entry["value"]
        except KeyError as exc:
            raise DocumentError(epath, f"missing key {exc.args[0]!r}") from None
        for label, v in (("i", i), ("j", j), ("k", k)):
            _require(isinstance(v, int) and 1 <= v <= dim, f"{epath}.{label}",
                     f"frame index must be an integer in 1..{dim}, got {v!r}")
        value = _rational(raw, f"{epath}.value")
        _require(i != j or value == 0, epath,
                 "bracket antisymmetry forces zero diagonal entries c[i][i][.]")
        key = (i - 1, j - 1, k - 1)
        mirror = (j - 1, i - 1, k - 1)
        if key in seen:
            raise DocumentError(epath, f"duplicate entry for (i,j,k)=({i},{j},{k})")
        if mirror in seen and seen[mirror] != -value:
            raise DocumentError(
                epath,
                f"antisymmetry conflict: ({j},{i},{k}) was given as "
                f"{format_rational(seen[mirror])}, expected {format_rational(-value)}",
            )
        seen[key] = value
        c[key[0]][key[1]][key[2]] = value
        if mirror not in seen:
            c[mirror[0]][mirror[1]][mirror[2]] = -value
    return tuple(tuple(tuple(row) for row in plane) for plane in c)


def _component(value, dim, path) -> RingElement:
    if isinstance(value, str):
        try:
            return parse_ring_element(value, dim)
        except RingError as exc:
            raise DocumentError(path, str(exc)) from None
    _require(isinstance(value, list), path, "component must be a string or a list of terms")
    total = RingElement.zero(dim)
    for t, term in enumerate(value):
        tpath = f"{path}[{t}]"
        _require(isinstance(term, dict), tpath, "term must be an object")
        coeff = _rational(term.get("coeff", "1"), f"{tpath}.coeff")
        monomial = term.get("monomial", {})
        _require(isinstance(monomial, dict), f"{tpath}.monomial", "must be a map coordinate -> exponent")
        exps = [0] * dim
        for coord, power in monomial.items():
            _require(
                isinstance(coord, str) and coord.startswith("y") and coord[1:].isdigit(),
                f"{tpath}.monomial", f"bad coordinate name {coord!r}")
            index = int(coord[1:]) - 1
            _require(0 <= index < dim, f"{tpath}.monomial",
                     f"coordinate {coord} out of range for dimension {dim}")
            _require(isinstance(power, int) and power >= 0, f"{tpath}.monomial.{coord}",
                     "exponent must be a non-negative integer")
            exps[index] = power
        weight = term.get("exp_weight", 0)
        _require(isinstance(weight, int), f"{tpath}.exp_weight", "must be an integer")
        total = total + RingElement.term(dim, coeff, exps, weight)
    return total


def manifold_from_document(doc: dict) -> ParsedManifold:
    """Lower a parsed JSON object to a validated ManifoldSpec and its fields."""
    _require(isinstance(doc, dict), "$", "document must be a JSON object")
    name = doc.get("name")
    _require(isinstance(name, str) and name, "name", "must be a non-empty string")
    dim = doc.get("dimension")
    _require(isinstance(dim, int), "dimension", "must be an integer")
    _require(dim >= 3 and dim % 2 == 1, "dimension", f"must be odd and >= 3, got {dim}")

    c = _structure_constants(doc.get("structure_constants", []), dim, "structure_constants")
    metric_raw = doc.get("metric", "identity")
    if metric_raw == "identity":
        metric = linalg.identity(dim)
    else:
        metric = _matrix(metric_raw, dim, "metric")
    phi = _matrix(doc.get("phi"), dim, "phi")
    xi = doc.get("xi")
    _require(isinstance(xi, int) and 1 <= xi <= dim, "xi",
             f"must be a frame index in 1..{dim}, got {xi!r}")

    spec = ManifoldSpec(name, dim, c, metric, phi, xi - 1)
    try:
        check_structure(spec)
    except StructureError as exc:
        raise DocumentError("$", str(exc)) from None

    fields: dict[str, VectorField] = {}
    raw_fields = doc.get("fields", {})
    _require(isinstance(raw_fields, dict), "fields", "must be an object of named fields")
    for fname, fdoc in raw_fields.items():
        fpath = f"fields.{fname}"
        _require(isinstance(fdoc, dict), fpath, "must be an object")
        comps = fdoc.get("components")
        _require(isinstance(comps, list) and len(comps) == dim, f"{fpath}.components",
                 f"expected {dim} components")
        declared = fdoc.get("declared_gradient", False)
        _require(isinstance(declared, bool), f"{fpath}.declared_gradient", "must be a boolean")
        components = tuple(
            _component(comp, dim, f"{fpath}.components[{i}]") for i, comp in enumerate(comps)
        )
        fields[fname] = VectorField(fname, components, declared)
    return ParsedManifold(spec, fields)


def parse_manifold(text: str) -> ParsedManifold:
    """Parse JSON document text; every error names the offending path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from None
    return manifold_from_document(doc)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _serialize_component(component: RingElement) -> list[dict]:
    terms = []
    for exps, weight, coeff in component.terms():
        term: dict = {"coeff": format_rational(coeff)}
        monomial = {f"y{i + 1}": e for i, e in enumerate(exps) if e}
        if monomial:
            term["monomial"] = monomial
        if weight:
            term["exp_weight"] = weight
        terms.append(term)
    return terms


def serialize_manifold(spec: ManifoldSpec, fields: dict[str, VectorField] | None = None) -> dict:
    """Canonical document for a spec: brackets listed once (i < j), sorted keys."""
    d = spec.dim
    constants = []
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(d):
                v = spec.structure_constants[i][j][k]
                if v != 0:
                    constants.append(
                        {"i": i + 1, "j": j + 1, "k": k + 1, "value": format_rational(v)}
                    )
    metric = ("identity" if spec.metric == linalg.identity(d)
              else [[format_rational(v) for v in row] for row in spec.metric])
    doc = {
        "name": spec.name,
        "dimension": d,
        "structure_constants": constants,
        "metric": metric,
        "phi": [[format_rational(v) for v in row] for row in spec.phi],
        "xi": spec.xi_index + 1,
    }
    if fields:
        doc["fields"] = {
            name: {
                "components": [_serialize_component(c) for c in field.components],
                "declared_gradient": field.declared_gradient,
            }
            for name, field in sorted(fields.items())
        }
    return doc
