"""Command-line interface.

Subcommands: validate, curvature, field, soliton, theorems, report.  Every
subcommand takes the manifold either from a built-in catalog entry
(``--catalog <id>``) or from a JSON document (``--manifold <path>``) and
renders text (default) or canonical JSON (``--format json``).

Exit codes: 0 when all checks pass or the requested solve succeeded, 1 when
a mathematical check failed (not Kenmotsu, nonzero residual in verify mode,
a failed theorem, an unsolvable trace equation), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import product
from pathlib import Path

from .catalog import catalog_get, catalog_ids
from .curvature import curvature_bundle, q_tensor, w2_tensor
from .documents import ParsedManifold, manifold_from_document, parse_manifold
from .errors import GeometryError
from .reports import (
    build_report,
    curvature_section,
    field_section,
    render_json,
    render_text,
    soliton_section,
    theorems_section,
    validation_section,
    TOOL_VERSION,
)
from .ring import format_rational, parse_rational
from .solitons import SolitonKind, SolitonProblem, soliton_solve_trace, soliton_verify
from .theorems import theorem_suite


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framegeom",
        description="exact curvature and soliton analysis on homogeneous "
                    "almost-contact frames",
    )
    parser.add_argument("--version", action="version", version=f"framegeom {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--manifold", metavar="PATH", help="manifold document file")
        source.add_argument("--catalog", metavar="ID",
                            help="built-in entry: " + ", ".join(catalog_ids()))
        p.add_argument("--format", choices=("text", "json"), default="text")

    common(sub.add_parser("validate", help="check the structural axioms"))

    p = sub.add_parser("curvature", help="curvature tensors and classifications")
    common(p)
    p.add_argument("--tensor", choices=("riemann", "ricci", "star-ricci", "w2", "q"))
    p.add_argument("--psi", metavar="RATIONAL", help="scalar for the q tensor")

    p = sub.add_parser("field", help="analyze one named vector field")
    common(p)
    p.add_argument("--field", required=True)

    p = sub.add_parser("soliton", help="solve or verify a soliton equation")
    common(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in SolitonKind])
    p.add_argument("--field", required=True)
    p.add_argument("--omega", required=True, metavar="RATIONAL")
    p.add_argument("--Omega", metavar="RATIONAL",
                   help="verify mode: the soliton constant (rb / star-rb)")
    p.add_argument("--Lambda", metavar="RATIONAL",
                   help="verify mode: the coefficient of g (eta-rb)")
    p.add_argument("--mu", metavar="RATIONAL",
                   help="verify mode: the coefficient of eta(x)eta (eta-rb)")

    p = sub.add_parser("theorems", help="run the full theorem matrix")
    common(p)
    p.add_argument("--omega", required=True, metavar="RATIONAL")

    p = sub.add_parser("report", help="everything in one report")
    common(p)
    p.add_argument("--omega", default="1", metavar="RATIONAL")
    return parser


def _load(args) -> ParsedManifold:
    if args.catalog:
        return manifold_from_document(catalog_get(args.catalog))
    path = Path(args.manifold)
    if not path.is_file():
        raise _UsageError(f"no such manifold file: {path}")
    return parse_manifold(path.read_text(encoding="utf-8"))


def _rational_arg(value, flag):
    try:
        return parse_rational(value)
    except GeometryError as exc:
        raise _UsageError(f"{flag}: {exc}") from None


def _want_color(args) -> bool:
    return args.format == "text" and sys.stdout.isatty() and "NO_COLOR" not in os.environ


def _emit(args, payload) -> None:
    if args.format == "json":
        sys.stdout.write(render_json(payload))
    else:
        sys.stdout.write(render_text(payload, use_color=_want_color(args)))


def _cmd_validate(args) -> int:
    parsed = _load(args)
    bundle = curvature_bundle(parsed.spec)
    section = validation_section(parsed.spec, bundle)
    _emit(args, {
        "tool_version": TOOL_VERSION,
        "manifold": {"name": parsed.spec.name, "dimension": parsed.spec.dim},
        "validation": section,
    })
    return 0 if section["is_kenmotsu"] else 1


def _nonzero_entries(tensor) -> list[dict]:
    dim = tensor.dim
    out = []
    for idx in product(range(dim), repeat=tensor.rank):
        value = tensor[idx]
        if not value.is_zero():
            out.append({"indices": [i + 1 for i in idx], "value": str(value)})
    return out


def _cmd_curvature(args) -> int:
    parsed = _load(args)
    spec = parsed.spec
    bundle = curvature_bundle(spec)
    base = {
        "tool_version": TOOL_VERSION,
        "manifold": {"name": spec.name, "dimension": spec.dim},
    }
    if args.tensor is None:
        payload = dict(base, curvature=curvature_section(spec, bundle))
    elif args.tensor == "ricci":
        payload = dict(base, tensor="ricci",
                       entries=[[format_rational(v) for v in row] for row in bundle.ricci],
                       scalar_curvature=format_rational(bundle.scalar_r))
    elif args.tensor == "star-ricci":
        payload = dict(base, tensor="star-ricci",
                       entries=[[format_rational(v) for v in row] for row in bundle.star_ricci],
                       star_scalar_curvature=format_rational(bundle.star_scalar))
    elif args.tensor == "riemann":
        from .curvature import lowered_tensor
        payload = dict(base, tensor="riemann",
                       convention="fully lowered components g(R(e_i,e_j)e_k, e_l)",
                       nonzero_entries=_nonzero_entries(lowered_tensor(bundle)))
    elif args.tensor == "w2":
        result = w2_tensor(spec, bundle)
        payload = dict(base, tensor="w2", is_flat=result.is_flat,
                       nonzero_entries=_nonzero_entries(result.tensor))
    else:
        if args.psi is None:
            raise _UsageError("--tensor q needs --psi <rational>")
        result = q_tensor(spec, bundle, _rational_arg(args.psi, "--psi"))
        payload = dict(base, tensor="q", psi=format_rational(result.psi),
                       is_flat=result.is_flat,
                       nonzero_entries=_nonzero_entries(result.tensor))
    if args.format == "json":
        sys.stdout.write(render_json(payload))
    else:
        sys.stdout.write(_tensor_text(payload))
    return 0


def _tensor_text(payload) -> str:
    lines = [f"manifold: {payload['manifold']['name']} "
             f"(dimension {payload['manifold']['dimension']})"]
    if "curvature" in payload:
        return render_text(payload)
    lines.append(f"tensor: {payload['tensor']}")
    if "psi" in payload:
        lines.append(f"psi: {payload['psi']}")
    if "scalar_curvature" in payload:
        lines.append(f"scalar curvature: {payload['scalar_curvature']}")
    if "star_scalar_curvature" in payload:
        lines.append(f"star scalar curvature: {payload['star_scalar_curvature']}")
    if "is_flat" in payload:
        lines.append(f"flat: {'yes' if payload['is_flat'] else 'no'}")
    if "entries" in payload:
        for row in payload["entries"]:
            lines.append("  [" + ", ".join(row) + "]")
    if "nonzero_entries" in payload:
        if not payload["nonzero_entries"]:
            lines.append("  (all entries zero)")
        for entry in payload["nonzero_entries"]:
            idx = ",".join(str(i) for i in entry["indices"])
            lines.append(f"  ({idx}) = {entry['value']}")
    return "\n".join(lines) + "\n"


def _named_field(parsed: ParsedManifold, name: str):
    if name not in parsed.fields:
        available = ", ".join(sorted(parsed.fields)) or "(none)"
        raise _UsageError(f"unknown field {name!r}; available: {available}")
    return parsed.fields[name]


def _cmd_field(args) -> int:
    parsed = _load(args)
    bundle = curvature_bundle(parsed.spec)
    field = _named_field(parsed, args.field)
    payload = {
        "tool_version": TOOL_VERSION,
        "manifold": {"name": parsed.spec.name, "dimension": parsed.spec.dim},
        "fields": {args.field: field_section(parsed.spec, bundle.conn, field)},
    }
    _emit(args, payload)
    return 0


def _cmd_soliton(args) -> int:
    parsed = _load(args)
    spec = parsed.spec
    bundle = curvature_bundle(spec)
    field = _named_field(parsed, args.field)
    kind = SolitonKind.parse(args.kind)
    if kind is SolitonKind.ETA_RB and args.Omega:
        raise _UsageError("eta-rb verification takes --Lambda and --mu, not --Omega")
    if kind is not SolitonKind.ETA_RB and (args.Lambda or args.mu):
        raise _UsageError(f"{kind.value} verification takes --Omega, not --Lambda/--mu")
    problem = SolitonProblem(
        kind,
        field,
        _rational_arg(args.omega, "--omega"),
        omega_param=_rational_arg(args.Omega, "--Omega") if args.Omega else None,
        lambda_param=_rational_arg(args.Lambda, "--Lambda") if args.Lambda else None,
        mu_param=_rational_arg(args.mu, "--mu") if args.mu else None,
    )
    base = {
        "tool_version": TOOL_VERSION,
        "manifold": {"name": spec.name, "dimension": spec.dim},
    }
    if problem.verify_mode:
        report = soliton_verify(spec, bundle, problem)
        payload = dict(base, soliton=soliton_section(report, "verify"))
        _emit_soliton(args, payload)
        return 0 if report.residual_is_zero else 1
    try:
        report = soliton_solve_trace(spec, bundle, problem)
    except GeometryError as exc:
        print(f"framegeom: {exc}", file=sys.stderr)
        return 1
    payload = dict(base, soliton=soliton_section(report, "solve"))
    _emit_soliton(args, payload)
    return 0


def _emit_soliton(args, payload) -> None:
    if args.format == "json":
        sys.stdout.write(render_json(payload))
        return
    shaped = dict(payload)
    shaped["solitons"] = [shaped.pop("soliton")]
    sys.stdout.write(render_text(shaped, use_color=_want_color(args)))


def _cmd_theorems(args) -> int:
    parsed = _load(args)
    bundle = curvature_bundle(parsed.spec)
    results = theorem_suite(parsed.spec, bundle, parsed.fields,
                            _rational_arg(args.omega, "--omega"))
    payload = {
        "tool_version": TOOL_VERSION,
        "manifold": {"name": parsed.spec.name, "dimension": parsed.spec.dim},
        "omega": format_rational(_rational_arg(args.omega, "--omega")),
        "theorems": theorems_section(results),
    }
    _emit(args, payload)
    return 1 if any(r.status == "fail" for r in results) else 0


def _cmd_report(args) -> int:
    parsed = _load(args)
    bundle = curvature_bundle(parsed.spec)
    omega = _rational_arg(args.omega, "--omega")
    payload = build_report(parsed.spec, bundle, parsed.fields, omega)
    _emit(args, payload)
    failed_theorem = any(t["status"] == "fail" for t in payload["theorems"])
    return 1 if (not payload["validation"]["is_kenmotsu"] or failed_theorem) else 0


_COMMANDS = {
    "validate": _cmd_validate,
    "curvature": _cmd_curvature,
    "field": _cmd_field,
    "soliton": _cmd_soliton,
    "theorems": _cmd_theorems,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"framegeom: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"framegeom: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"framegeom: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
