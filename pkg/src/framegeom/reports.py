"""Deterministic report assembly and rendering (JSON and text).

Reports are plain dicts of strings/bools/ints built in sorted order, so the
JSON rendering is byte-identical across runs on the same input.  Rationals
and ring functions always travel as canonical strings, never as floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .curvature import (
    CurvatureBundle,
    einstein_classify,
    q_flat_psi,
    q_tensor,
    w2_tensor,
)
from .errors import GeometryError
from .fields import (
    VectorField,
    conformal_killing_classify,
    divergence,
    lie_derivative_metric,
    torse_forming_decompose,
)
from .manifold import ManifoldSpec, validate_kenmotsu
from .ring import format_rational
from .solitons import (
    SolitonKind,
    SolitonProblem,
    SolitonReport,
    soliton_solve_trace,
)
from .theorems import theorem_suite

TOOL_VERSION = "0.1.0"


def _matrix_text(matrix) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in matrix]


def _tensor_text(tensor) -> list[list[str]]:
    return [[str(tensor[i, j]) for j in range(tensor.dim)] for i in range(tensor.dim)]


def validation_section(spec: ManifoldSpec, bundle: CurvatureBundle) -> dict:
    report = validate_kenmotsu(spec, bundle.conn)
    checks = [
        {
            "id": check.axiom_id,
            "passed": check.passed,
            "first_failure": list(check.first_failure) if check.first_failure else None,
        }
        for check in report.checks
    ]
    checks.append(_curvature_eta_pairing_check(spec, bundle))
    return {
        "is_almost_contact": report.is_almost_contact,
        "is_kenmotsu": report.is_kenmotsu,
        "checks": checks,
    }


def _curvature_eta_pairing_check(spec: ManifoldSpec, bundle: CurvatureBundle) -> dict:
    """Consequence identity of the warped class, in its interpreted reading.

    The quoted form of this identity is not well-formed as written; it is
    checked as eta(R(X,Y)Z) = g(X,Z) eta(Y) - g(Y,Z) eta(X) and labeled
    "interpreted" so the reading is never silent.
    """
    d = spec.dim
    g, eta, riem = spec.metric, spec.eta, bundle.riemann
    failure = None
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = sum((riem[i][j][k][m] * eta[m] for m in range(d)), Fraction(0))
                if lhs != g[i][k] * eta[j] - g[j][k] * eta[i]:
                    failure = [i + 1, j + 1, k + 1]
                    break
            if failure:
                break
        if failure:
            break
    return {
        "id": "curvature_eta_pairing",
        "passed": failure is None,
        "first_failure": failure,
        "note": "interpreted: checked as eta(R(X,Y)Z) = g(X,Z) eta(Y) - g(Y,Z) eta(X)",
    }


def _classification_entry(result) -> dict:
    entry = {"kind": result.kind}
    if result.lam is not None:
        entry["lambda"] = format_rational(result.lam)
    if result.c is not None:
        entry["c"] = format_rational(result.c)
    return entry


def curvature_section(spec: ManifoldSpec, bundle: CurvatureBundle) -> dict:
    einstein = einstein_classify(spec, bundle)
    psi = q_flat_psi(spec, bundle)
    q_flat = psi is not None and q_tensor(spec, bundle, psi).is_flat
    return {
        "scalar_curvature": format_rational(bundle.scalar_r),
        "star_scalar_curvature": format_rational(bundle.star_scalar),
        "ricci": _matrix_text(bundle.ricci),
        "star_ricci": _matrix_text(bundle.star_ricci),
        "einstein": {
            "ricci": _classification_entry(einstein.ricci),
            "star_ricci": _classification_entry(einstein.star_ricci),
        },
        "flatness": {
            "w2_flat": w2_tensor(spec, bundle).is_flat,
            "q_flat": q_flat,
            "q_flat_psi": format_rational(psi) if psi is not None else None,
        },
    }


def field_section(spec: ManifoldSpec, conn, field: VectorField) -> dict:
    div = divergence(spec, conn, field)
    conformal = conformal_killing_classify(spec, conn, field)
    section = {
        "divergence": str(div),
        "declared_gradient": field.declared_gradient,
        "lie_derivative_metric": _tensor_text(lie_derivative_metric(spec, conn, field)),
        "conformal_killing": {
            "is_conformal": conformal.is_conformal,
            "factor": str(conformal.factor) if conformal.factor is not None else None,
            "label": conformal.label,
        },
    }
    if field.declared_gradient:
        section["laplacian_of_potential"] = str(div)
    if field.is_zero():
        section["torse_forming"] = None
    else:
        torse = torse_forming_decompose(spec, conn, field)
        section["torse_forming"] = {
            "is_torse_forming": torse.is_torse_forming,
            "psi": str(torse.psi),
            "gamma": [str(g) for g in torse.gamma],
            "gamma_of_field": str(torse.gamma_of_field),
            "subclass": torse.subclass,
        }
    return section


def soliton_section(report: SolitonReport, mode: str) -> dict:
    return {
        "kind": report.kind.value,
        "field": report.field_name,
        "omega": format_rational(report.omega),
        "mode": mode,
        "solved": {k: format_rational(v) for k, v in sorted(report.solved.items())},
        "residual": _tensor_text(report.residual),
        "residual_trace": str(report.residual_trace),
        "residual_is_zero": report.residual_is_zero,
        "trace_satisfied": report.trace_satisfied,
        "classification": report.classification,
        "notes": list(report.notes),
    }


def theorems_section(results) -> list[dict]:
    return [
        {
            "id": result.theorem_id,
            "status": result.status,
            "details": list(result.details),
            "notes": list(result.notes),
        }
        for result in results
    ]


def build_report(
    spec: ManifoldSpec,
    bundle: CurvatureBundle,
    fields: dict[str, VectorField],
    omega: Fraction,
) -> dict:
    """The full report: validation, curvature, per-field analyses, solitons
    solved for every field and kind, and the theorem matrix."""
    conn = bundle.conn
    solitons = []
    for name in sorted(fields):
        field = fields[name]
        for kind in SolitonKind:
            problem = SolitonProblem(kind, field, omega)
            try:
                solved = soliton_solve_trace(spec, bundle, problem)
            except GeometryError as exc:
                solitons.append({
                    "kind": kind.value,
                    "field": name,
                    "omega": format_rational(omega),
                    "mode": "solve",
                    "error": str(exc),
                })
                continue
            solitons.append(soliton_section(solved, "solve"))
    return {
        "tool_version": TOOL_VERSION,
        "manifold": {"name": spec.name, "dimension": spec.dim},
        "omega": format_rational(omega),
        "validation": validation_section(spec, bundle),
        "curvature": curvature_section(spec, bundle),
        "fields": {
            name: field_section(spec, conn, fields[name]) for name in sorted(fields)
        },
        "solitons": solitons,
        "theorems": theorems_section(theorem_suite(spec, bundle, fields, omega)),
    }


def render_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------

class _Text:
    def __init__(self, use_color: bool):
        self.use_color = use_color
        self.lines: list[str] = []

    def add(self, text: str = ""):
        self.lines.append(text)

    def mark(self, ok: Optional[bool]) -> str:
        if ok is None:
            return "[--]"
        text = "[ok]" if ok else "[!!]"
        if not self.use_color:
            return text
        color = "32" if ok else "31"
        return f"\x1b[{color}m{text}\x1b[0m"

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def _text_validation(out: _Text, section: dict):
    out.add("validation:")
    out.add(f"  almost-contact: {'yes' if section['is_almost_contact'] else 'no'}")
    out.add(f"  kenmotsu:       {'yes' if section['is_kenmotsu'] else 'no'}")
    for check in section["checks"]:
        suffix = ""
        if check["first_failure"]:
            suffix = f"  first failure at {tuple(check['first_failure'])}"
        if check.get("note"):
            suffix += f"  ({check['note']})"
        out.add(f"  {out.mark(check['passed'])} {check['id']}{suffix}")


def _text_curvature(out: _Text, section: dict):
    out.add("curvature:")
    out.add(f"  scalar curvature:      {section['scalar_curvature']}")
    out.add(f"  star scalar curvature: {section['star_scalar_curvature']}")
    for key in ("ricci", "star_ricci"):
        entry = section["einstein"][key]
        text = entry["kind"]
        if "lambda" in entry:
            text += f" (lambda = {entry['lambda']}"
            text += f", c = {entry['c']})" if "c" in entry else ")"
        out.add(f"  {key.replace('_', '-')}: {text}")
    flat = section["flatness"]
    out.add(f"  w2-flat: {'yes' if flat['w2_flat'] else 'no'}")
    if flat["q_flat_psi"] is None:
        out.add("  q-flat: no constant psi (ricci is not einstein)")
    else:
        out.add(f"  q-flat: {'yes' if flat['q_flat'] else 'no'} at psi = {flat['q_flat_psi']}")


def _text_field(out: _Text, name: str, section: dict):
    out.add(f"field {name}:")
    out.add(f"  divergence: {section['divergence']}")
    if "laplacian_of_potential" in section:
        out.add(f"  laplacian of declared potential: {section['laplacian_of_potential']}")
    ck = section["conformal_killing"]
    if ck["is_conformal"]:
        out.add(f"  conformal-killing: {ck['label']} (factor {ck['factor']})")
    else:
        out.add("  conformal-killing: no")
    torse = section["torse_forming"]
    if torse is None:
        out.add("  torse-forming: (zero field)")
    elif torse["is_torse_forming"]:
        out.add(
            f"  torse-forming: {torse['subclass']} (psi = {torse['psi']}, "
            f"gamma(rho) = {torse['gamma_of_field']})"
        )
    else:
        out.add("  torse-forming: no")


def _text_soliton(out: _Text, entry: dict):
    head = f"soliton {entry['kind']} / field {entry['field']} at omega = {entry['omega']}:"
    out.add(head)
    if "error" in entry:
        out.add(f"  {out.mark(False)} {entry['error']}")
        return
    solved = ", ".join(f"{k} = {v}" for k, v in entry["solved"].items())
    out.add(f"  {entry['mode']}: {solved} ({entry['classification']})")
    out.add(f"  {out.mark(entry['trace_satisfied'])} trace satisfied")
    out.add(f"  {out.mark(entry['residual_is_zero'])} exact (residual zero)")
    for note in entry["notes"]:
        out.add(f"  note: {note}")


def _text_theorems(out: _Text, section: list[dict]):
    out.add("theorems:")
    for entry in section:
        ok = {"pass": True, "fail": False}.get(entry["status"])
        out.add(f"  {out.mark(ok)} {entry['id']} [{entry['status']}]")
        for detail in entry["details"]:
            out.add(f"      {detail}")
        for note in entry["notes"]:
            out.add(f"      note: {note}")


def render_text(report: dict, use_color: bool = False) -> str:
    out = _Text(use_color)
    manifold = report["manifold"]
    out.add(f"manifold: {manifold['name']} (dimension {manifold['dimension']})")
    out.add(f"tool version: {report['tool_version']}")
    if "omega" in report:
        out.add(f"omega: {report['omega']}")
    if "validation" in report:
        _text_validation(out, report["validation"])
    if "curvature" in report:
        _text_curvature(out, report["curvature"])
    for name, section in report.get("fields", {}).items():
        _text_field(out, name, section)
    for entry in report.get("solitons", []):
        _text_soliton(out, entry)
    if "theorems" in report:
        _text_theorems(out, report["theorems"])
    return out.render()
