"""Theorem matrix behavior on catalog entries and purpose-built fields."""

from fractions import Fraction

import pytest

from conftest import bundle_for, load
from framegeom.fields import VectorField, xi_field
from framegeom.ring import RingElement
from framegeom.theorems import FAIL, PASS, SKIP, THEOREM_IDS, theorem_suite


def run_suite(entry_id, omega=Fraction(1), extra_fields=None, only_extra=False):
    parsed = load(entry_id)
    fields = {} if only_extra else dict(parsed.fields)
    fields.update(extra_fields or {})
    results = theorem_suite(parsed.spec, bundle_for(entry_id), fields, omega)
    return {r.theorem_id: r for r in results}


def scaled_reeb_field(dim):
    comps = [RingElement.zero(dim) for _ in range(dim)]
    comps[dim - 1] = RingElement.exponential(dim, 1)
    return VectorField("w", tuple(comps))


def solenoidal_field(dim):
    comps = [RingElement.zero(dim) for _ in range(dim)]
    comps[0] = RingElement.coordinate(dim, 1) * RingElement.exponential(dim, 1)
    return VectorField("s", tuple(comps))


# ---------------------------------------------------------------------------
# matrix shape
# ---------------------------------------------------------------------------

def test_every_theorem_id_appears_exactly_once():
    results = run_suite("kenmotsu-example-5d")
    assert sorted(results) == sorted(THEOREM_IDS)
    assert len(results) == len(THEOREM_IDS)


def test_results_sorted_by_id():
    parsed = load("kenmotsu-example-5d")
    results = theorem_suite(parsed.spec, bundle_for("kenmotsu-example-5d"),
                            parsed.fields, Fraction(1))
    ids = [r.theorem_id for r in results]
    assert ids == sorted(ids)


def test_non_kenmotsu_manifold_skips_whole_matrix():
    results = run_suite("abelian-flat-3d")
    assert all(r.status == SKIP for r in results.values())
    assert all("Kenmotsu" in r.notes[0] for r in results.values())


# ---------------------------------------------------------------------------
# default 5d run
# ---------------------------------------------------------------------------

def test_parameter_map_passes_with_instance_mu_note():
    results = run_suite("kenmotsu-example-5d")
    result = results["eta-soliton-parameter-map"]
    assert result.status == PASS
    assert any("Lambda = Omega - 3 + 16*omega" in d for d in result.details)
    assert any("mu = -2" in n and "trace" in n for n in result.notes)


def test_xi_sign_passes():
    result = run_suite("kenmotsu-example-5d")["xi-soliton-sign"]
    assert result.status == PASS
    assert any("Omega = -omega*(4n^2 + r) = 4" in d for d in result.details)


def test_trace_identity_reported_without_gradient_declaration():
    result = run_suite("kenmotsu-example-5d")["gradient-laplacian"]
    assert result.status == SKIP
    assert all("trace identity gap = 0" in d for d in result.details
               if "not declared" in d)


def test_solenoidal_biconditional_without_solenoidal_field():
    result = run_suite("kenmotsu-example-5d")["solenoidal-scalar-curvature"]
    assert result.status == SKIP
    assert all("holds" in d for d in result.details)


def test_torse_constant_passes_via_reeb_field():
    result = run_suite("kenmotsu-example-5d")["torse-forming-soliton-constant"]
    assert result.status == PASS
    assert any("classification compressing" in d for d in result.details)
    assert any("gamma(rho)" in n and "r(rho)" in n for n in result.notes)


def test_subclass_constants_skip_for_generic_reeb():
    result = run_suite("kenmotsu-example-5d")["torse-forming-subclass-constants"]
    assert result.status == SKIP


def test_conformal_and_w2_skip_without_qualifying_fields():
    results = run_suite("kenmotsu-example-5d")
    assert results["conformal-killing-classes"].status == SKIP
    assert results["w2-flat-concircular-soliton"].status == SKIP
    assert results["q-flat-solenoidal-soliton"].status == SKIP


# ---------------------------------------------------------------------------
# pass paths via purpose-built fields
# ---------------------------------------------------------------------------

def test_conformal_killing_pass_path():
    result = run_suite("kenmotsu-example-5d",
                       extra_fields={"w": scaled_reeb_field(5)})
    check = result["conformal-killing-classes"]
    assert check.status == PASS
    assert any("refinement proper" in d for d in check.details)
    assert any("not constant" in n for n in check.notes)


def test_w2_concircular_pass_path():
    check = run_suite("kenmotsu-example-5d",
                      extra_fields={"w": scaled_reeb_field(5)})["w2-flat-concircular-soliton"]
    assert check.status == PASS
    assert any("concircular with factor exp(y5)" in d for d in check.details)
    assert any("mu = 0" in n for n in check.notes)


def test_q_solenoidal_pass_path():
    check = run_suite("kenmotsu-example-5d",
                      extra_fields={"s": solenoidal_field(5)})["q-flat-solenoidal-soliton"]
    assert check.status == PASS
    assert any("psi = -4" in d for d in check.details)
    # the (2n+1)-vs-(2n-1) constant discrepancy is surfaced, never silent
    assert any("(2n+1) = 5" in n and "(2n-1) = 3" in n for n in check.notes)


def test_solenoidal_pass_path():
    check = run_suite("kenmotsu-example-5d",
                      extra_fields={"s": solenoidal_field(5)})["solenoidal-scalar-curvature"]
    assert check.status == PASS
    assert any("r = Omega*dim/(1 - omega*dim) - 4n^2 = -20" in d for d in check.details)


def test_gradient_laplacian_pass_path():
    spec = load("kenmotsu-example-5d").spec
    grad = VectorField("h", xi_field(spec).components, declared_gradient=True)
    check = run_suite("kenmotsu-example-5d", extra_fields={"h": grad})["gradient-laplacian"]
    assert check.status == PASS
    assert any("Laplacian of the potential = div = 4" in d for d in check.details)


def test_subclass_constants_concircular_pass():
    check = run_suite("kenmotsu-example-5d",
                      extra_fields={"w": scaled_reeb_field(5)})["torse-forming-subclass-constants"]
    assert check.status == PASS
    assert any("(concircular)" in d for d in check.details)
    assert any("drops the omega*(r + 4n^2) term" in n for n in check.notes)


def test_degenerate_omega_flagged():
    check = run_suite("kenmotsu-example-5d",
                      omega=Fraction(1, 5))["solenoidal-scalar-curvature"]
    assert check.status == SKIP
    assert any("inapplicable" in n for n in check.notes)


@pytest.mark.parametrize("entry_id", ["kenmotsu-warped-3d", "kenmotsu-warped-7d"])
@pytest.mark.parametrize("omega", [Fraction(0), Fraction(-2), Fraction(3, 4)])
def test_family_members_pass_core_checks(entry_id, omega):
    results = run_suite(entry_id, omega=omega)
    for tid in ("eta-soliton-parameter-map", "xi-soliton-sign",
                "torse-forming-soliton-constant"):
        assert results[tid].status == PASS, (tid, results[tid].details)
    assert not any(r.status == FAIL for r in results.values())


def test_no_failures_on_default_catalog_runs():
    for entry_id in ("kenmotsu-example-5d", "kenmotsu-warped-3d", "kenmotsu-warped-7d"):
        results = run_suite(entry_id)
        assert not any(r.status == FAIL for r in results.values())
