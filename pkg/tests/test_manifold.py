"""Validation of frame structure and the almost-contact / Kenmotsu axioms."""

from fractions import Fraction

import pytest

from framegeom import linalg
from framegeom.catalog import catalog_load
from framegeom.curvature import levi_civita
from framegeom.errors import StructureError
from framegeom.manifold import ManifoldSpec, check_structure, validate_almost_contact, validate_kenmotsu


def zero_c(dim):
    return [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]


def pairing_phi(dim, pairs):
    phi = [[Fraction(0)] * dim for _ in range(dim)]
    for a, b in pairs:
        phi[b][a] = Fraction(1)
        phi[a][b] = Fraction(-1)
    return phi


# ---------------------------------------------------------------------------
# structural invariants
# ---------------------------------------------------------------------------

def test_even_dimension_rejected():
    spec = ManifoldSpec("bad", 4, zero_c(4), linalg.identity(4), zero_c(4)[0:4][0], 0)
    with pytest.raises(StructureError, match="odd"):
        check_structure(spec)


def test_antisymmetry_violation_named():
    c = zero_c(3)
    c[0][1][2] = Fraction(1)  # mirror entry missing
    spec = ManifoldSpec("bad", 3, c, linalg.identity(3), pairing_phi(3, [(0, 1)]), 2)
    with pytest.raises(StructureError, match="antisymmetry"):
        check_structure(spec)


def test_jacobi_violation_named():
    c = zero_c(3)
    # [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1 is not a Lie algebra
    c[0][1][2], c[1][0][2] = Fraction(1), Fraction(-1)
    c[1][2][0], c[2][1][0] = Fraction(1), Fraction(-1)
    c[2][0][0], c[0][2][0] = Fraction(1), Fraction(-1)
    spec = ManifoldSpec("bad", 3, c, linalg.identity(3), pairing_phi(3, [(0, 1)]), 2)
    with pytest.raises(StructureError, match="Jacobi"):
        check_structure(spec)


def test_metric_must_be_positive_definite():
    metric = [[Fraction(1), Fraction(0), Fraction(0)],
              [Fraction(0), Fraction(-1), Fraction(0)],
              [Fraction(0), Fraction(0), Fraction(1)]]
    spec = ManifoldSpec("bad", 3, zero_c(3), metric, pairing_phi(3, [(0, 1)]), 2)
    with pytest.raises(StructureError, match="positive definite"):
        check_structure(spec)


def test_su2_structure_is_accepted():
    c = zero_c(3)
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i][j][k] = Fraction(1)
        c[j][i][k] = Fraction(-1)
    spec = ManifoldSpec("su2", 3, c, linalg.identity(3), pairing_phi(3, [(0, 1)]), 2)
    check_structure(spec)


# ---------------------------------------------------------------------------
# almost-contact axioms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("entry_id", [
    "kenmotsu-example-5d", "kenmotsu-warped-3d", "kenmotsu-warped-7d", "abelian-flat-3d",
])
def test_catalog_entries_are_almost_contact(entry_id):
    spec = catalog_load(entry_id).spec
    report = validate_almost_contact(spec)
    assert report.is_almost_contact, report.failed_ids()


def test_zero_phi_fails_phi_square():
    spec = ManifoldSpec("degenerate", 3, zero_c(3),
                        linalg.identity(3), zero_c(3)[0], 2)
    report = validate_almost_contact(spec)
    assert not report.is_almost_contact
    assert not report.check("phi_square").passed
    assert report.check("phi_square").first_failure is not None


def test_negated_phi_column_fails_skew_adjointness():
    base = catalog_load("kenmotsu-example-5d").spec
    phi = [list(row) for row in base.phi]
    for i in range(5):
        phi[i][0] = -phi[i][0]
    spec = ManifoldSpec("broken", 5, base.structure_constants, base.metric, phi, 4)
    report = validate_almost_contact(spec)
    assert not report.check("phi_skew_adjoint").passed
    # every failed axiom is listed, not just the first
    assert "phi_square" in report.failed_ids()


# ---------------------------------------------------------------------------
# Kenmotsu axioms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("entry_id", [
    "kenmotsu-example-5d", "kenmotsu-warped-3d", "kenmotsu-warped-7d",
])
def test_warped_family_is_kenmotsu(entry_id):
    spec = catalog_load(entry_id).spec
    report = validate_kenmotsu(spec, levi_civita(spec))
    assert report.is_kenmotsu, report.failed_ids()


def test_flat_frame_is_not_kenmotsu():
    spec = catalog_load("abelian-flat-3d").spec
    report = validate_kenmotsu(spec, levi_civita(spec))
    assert report.is_almost_contact
    assert not report.is_kenmotsu
    # the covariant-derivative rule for xi fails on the flat connection
    assert not report.check("covariant_xi").passed


def test_kenmotsu_implies_almost_contact():
    for entry_id in ("kenmotsu-example-5d", "abelian-flat-3d"):
        spec = catalog_load(entry_id).spec
        report = validate_kenmotsu(spec, levi_civita(spec))
        assert not (report.is_kenmotsu and not report.is_almost_contact)


def test_mismatched_connection_rejected():
    spec5 = catalog_load("kenmotsu-example-5d").spec
    spec3 = catalog_load("kenmotsu-warped-3d").spec
    with pytest.raises(StructureError, match="different manifold"):
        validate_kenmotsu(spec5, levi_civita(spec3))


def test_realization_detection():
    assert catalog_load("kenmotsu-example-5d").spec.realization == "warped"
    assert catalog_load("abelian-flat-3d").spec.realization == "flat"
    c = zero_c(3)
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i][j][k] = Fraction(1)
        c[j][i][k] = Fraction(-1)
    su2 = ManifoldSpec("su2", 3, c, linalg.identity(3), pairing_phi(3, [(0, 1)]), 2)
    assert su2.realization is None
