"""Report assembly: error entries, gradient phrasing, text rendering."""

from fractions import Fraction

from conftest import bundle_for, load
from framegeom.fields import VectorField, xi_field
from framegeom.reports import build_report, field_section, render_json, render_text
from framegeom.ring import RingElement


def test_report_records_unsolvable_soliton_as_error_entry():
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    comps = [RingElement.zero(5) for _ in range(5)]
    comps[4] = RingElement.exponential(5, 1)
    fields = dict(parsed.fields)
    fields["w"] = VectorField("w", tuple(comps))  # div = 5 exp(y5), non-constant
    report = build_report(spec, bundle, fields, Fraction(1))
    errors = [s for s in report["solitons"] if "error" in s]
    assert errors and all(s["field"] == "w" for s in errors)
    assert all("no constant" in s["error"] for s in errors)
    # rb and star-rb fail on the divergence; eta-rb on the decomposition
    assert {s["kind"] for s in errors} == {"rb", "star-rb", "eta-rb"}
    text = render_text(report)
    assert "no constant" in text
    render_json(report)  # must be serializable


def test_declared_gradient_surfaces_laplacian():
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    grad = VectorField("h", xi_field(spec).components, declared_gradient=True)
    section = field_section(spec, bundle.conn, grad)
    assert section["laplacian_of_potential"] == "4"
    assert section["declared_gradient"] is True
    plain = field_section(spec, bundle.conn, parsed.fields["z"])
    assert "laplacian_of_potential" not in plain


def test_zero_field_section_has_null_torse_block():
    parsed = load("abelian-flat-3d")
    spec, bundle = parsed.spec, bundle_for("abelian-flat-3d")
    zero = VectorField("zero", tuple(RingElement.zero(3) for _ in range(3)))
    section = field_section(spec, bundle.conn, zero)
    assert section["torse_forming"] is None
    assert section["conformal_killing"]["label"] == "killing"
    report = build_report(spec, bundle, {"zero": zero}, Fraction(2))
    text = render_text(report)
    assert "(zero field)" in text


def test_text_marks_colored_only_when_requested():
    parsed = load("kenmotsu-example-5d")
    report = build_report(parsed.spec, bundle_for("kenmotsu-example-5d"),
                          parsed.fields, Fraction(1))
    plain = render_text(report, use_color=False)
    colored = render_text(report, use_color=True)
    assert "\x1b[" not in plain
    assert "\x1b[32m[ok]\x1b[0m" in colored
