"""Soliton solving/verification against exact hand-derived values."""

from fractions import Fraction

import pytest

from conftest import bundle_for, load
from framegeom.errors import GeometryError
from framegeom.fields import VectorField, lie_derivative_metric, xi_field
from framegeom.ring import RingElement
from framegeom.solitons import (
    SolitonKind,
    SolitonProblem,
    classify_soliton,
    decompose_g_eta,
    soliton_left_side,
    soliton_solve_trace,
    soliton_verify,
)
from framegeom.tensors import FrameTensor, eta_outer, metric_tensor


# ---------------------------------------------------------------------------
# decomposition against span{g, eta (x) eta}
# ---------------------------------------------------------------------------

def test_decompose_metric_itself():
    spec = load("kenmotsu-example-5d").spec
    a, b, residue = decompose_g_eta(spec, metric_tensor(spec))
    assert a == 1 and b == 0 and residue.is_zero()


def test_decompose_star_left_side():
    # L_z g + 2 Ric* = 4(g - eta x eta) + 2(-g + eta x eta) = 2g - 2 eta x eta
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    lhs = soliton_left_side(spec, bundle, SolitonKind.STAR_RB, parsed.fields["z"])
    a, b, residue = decompose_g_eta(spec, lhs)
    assert a == 2 and b == -2 and residue.is_zero()


def test_decompose_ricci():
    spec = load("kenmotsu-example-5d").spec
    bundle = bundle_for("kenmotsu-example-5d")
    from framegeom.tensors import from_rational_rank2
    a, b, residue = decompose_g_eta(spec, from_rational_rank2(5, bundle.ricci))
    assert a == -4 and b == 0 and residue.is_zero()


def test_decompose_rejects_asymmetric():
    spec = load("kenmotsu-example-5d").spec
    entries = [RingElement.zero(5) for _ in range(25)]
    entries[1] = RingElement.constant(5, 1)  # T[0][1] != T[1][0]
    with pytest.raises(GeometryError, match="symmetric"):
        decompose_g_eta(spec, FrameTensor(5, 2, entries))


def test_decompose_round_trip_with_ring_entries():
    spec = load("kenmotsu-example-5d").spec
    y1 = RingElement.coordinate(5, 0)
    e5 = RingElement.exponential(5, 1)
    base = metric_tensor(spec).scale(y1 + 2) + eta_outer(spec).scale(e5)
    a, b, residue = decompose_g_eta(spec, base)
    assert a == y1 + 2 and b == e5 and residue.is_zero()
    reassembled = metric_tensor(spec).scale(a) + eta_outer(spec).scale(b) + residue
    assert reassembled == base


# ---------------------------------------------------------------------------
# trace solving
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("omega,expected", [
    (Fraction(0), Fraction(4, 5)),
    (Fraction(1), Fraction(24, 5)),
    (Fraction(-2), Fraction(-36, 5)),
])
def test_star_rb_solve_5d_field_z(omega, expected):
    parsed = load("kenmotsu-example-5d")
    problem = SolitonProblem(SolitonKind.STAR_RB, parsed.fields["z"], omega)
    report = soliton_solve_trace(parsed.spec, bundle_for("kenmotsu-example-5d"), problem)
    assert report.solved["Omega"] == expected
    assert report.trace_satisfied
    assert not report.residual_is_zero  # trace soliton only
    expected_class = "enlarging" if omega == -2 else "compressing"
    assert report.classification == expected_class


def test_star_rb_residual_at_omega_one():
    # residual = (2/5) g - 2 eta (x) eta, trace-free
    parsed = load("kenmotsu-example-5d")
    spec = parsed.spec
    problem = SolitonProblem(SolitonKind.STAR_RB, parsed.fields["z"], Fraction(1))
    report = soliton_solve_trace(spec, bundle_for("kenmotsu-example-5d"), problem)
    expected = metric_tensor(spec).scale(Fraction(2, 5)) - eta_outer(spec).scale(2)
    assert report.residual == expected
    assert report.residual_trace.is_zero()


@pytest.mark.parametrize("entry_id,n,r", [
    ("kenmotsu-warped-3d", 1, -6),
    ("kenmotsu-example-5d", 2, -20),
    ("kenmotsu-warped-7d", 3, -42),
])
@pytest.mark.parametrize("omega", [Fraction(1), Fraction(-3), Fraction(2, 7)])
def test_star_rb_solve_xi(entry_id, n, r, omega):
    # Omega = -omega (4 n^2 + r) for the Reeb field
    spec = load(entry_id).spec
    problem = SolitonProblem(SolitonKind.STAR_RB, xi_field(spec), omega)
    report = soliton_solve_trace(spec, bundle_for(entry_id), problem)
    assert report.solved["Omega"] == -omega * (4 * n * n + r)


def test_rb_solve_flat_zero_field_is_trivial():
    spec = load("abelian-flat-3d").spec
    zero_field = VectorField("zero", tuple(RingElement.zero(3) for _ in range(3)))
    problem = SolitonProblem(SolitonKind.RB, zero_field, Fraction(3))
    report = soliton_solve_trace(spec, bundle_for("abelian-flat-3d"), problem)
    assert report.solved["Omega"] == 0
    assert report.residual_is_zero and report.trace_satisfied
    assert report.classification == "balancing"


def test_eta_rb_solve_5d():
    # L_z g + 2 Ric = -4 g - 4 eta x eta:  2 Lambda + 2 omega r = -4, mu = -2
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    for omega in (Fraction(0), Fraction(1), Fraction(-1, 2)):
        problem = SolitonProblem(SolitonKind.ETA_RB, parsed.fields["z"], omega)
        report = soliton_solve_trace(spec, bundle, problem)
        assert report.solved["Lambda"] == -2 - omega * Fraction(-20)
        assert report.solved["mu"] == -2
        assert report.residual_is_zero  # exact eta-soliton
        assert report.trace_satisfied


def test_solve_rejects_nonconstant_divergence():
    spec = load("kenmotsu-example-5d").spec
    bundle = bundle_for("kenmotsu-example-5d")
    comps = [RingElement.zero(5) for _ in range(5)]
    comps[4] = RingElement.exponential(5, 1)
    problem = SolitonProblem(SolitonKind.STAR_RB, VectorField("w", tuple(comps)), Fraction(1))
    with pytest.raises(GeometryError, match="no constant-Omega solution"):
        soliton_solve_trace(spec, bundle, problem)


# ---------------------------------------------------------------------------
# verification mode
# ---------------------------------------------------------------------------

def test_verify_star_rb_trace_only():
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    omega = Fraction(1)
    problem = SolitonProblem(SolitonKind.STAR_RB, parsed.fields["z"], omega,
                             omega_param=4 * omega + Fraction(4, 5))
    report = soliton_verify(spec, bundle, problem)
    assert report.trace_satisfied
    assert not report.residual_is_zero


def test_verify_eta_rb_exact():
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    omega = Fraction(1)
    problem = SolitonProblem(SolitonKind.ETA_RB, parsed.fields["z"], omega,
                             lambda_param=Fraction(-2) + 20 * omega,
                             mu_param=Fraction(-2))
    report = soliton_verify(spec, bundle, problem)
    assert report.residual_is_zero and report.trace_satisfied


def test_verify_zero_field_zero_parameters():
    spec = load("abelian-flat-3d").spec
    zero_field = VectorField("zero", tuple(RingElement.zero(3) for _ in range(3)))
    problem = SolitonProblem(SolitonKind.RB, zero_field, Fraction(5),
                             omega_param=Fraction(0))
    report = soliton_verify(spec, bundle_for("abelian-flat-3d"), problem)
    assert report.residual_is_zero


def test_verify_wrong_omega_fails_trace():
    parsed = load("kenmotsu-example-5d")
    problem = SolitonProblem(SolitonKind.STAR_RB, parsed.fields["z"], Fraction(1),
                             omega_param=Fraction(1))
    report = soliton_verify(parsed.spec, bundle_for("kenmotsu-example-5d"), problem)
    assert not report.trace_satisfied
    assert not report.residual_is_zero


def test_verify_requires_parameters():
    parsed = load("kenmotsu-example-5d")
    problem = SolitonProblem(SolitonKind.ETA_RB, parsed.fields["z"], Fraction(1),
                             lambda_param=Fraction(1))
    with pytest.raises(GeometryError, match="Lambda and mu"):
        soliton_verify(parsed.spec, bundle_for("kenmotsu-example-5d"), problem)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("value,expected", [
    (Fraction(24, 5), "compressing"),
    (Fraction(0), "balancing"),
    (Fraction(-1), "enlarging"),
])
def test_classify(value, expected):
    assert classify_soliton(value) == expected


def test_classify_mirror():
    for num in (1, 7, 24):
        for den in (1, 5):
            v = Fraction(num, den)
            pair = {classify_soliton(v), classify_soliton(-v)}
            assert pair == {"compressing", "enlarging"}


def test_classify_nonconstant_indeterminate():
    assert classify_soliton(RingElement.exponential(3, 1)) == "indeterminate"


def test_float_parameters_rejected():
    parsed = load("kenmotsu-example-5d")
    bundle = bundle_for("kenmotsu-example-5d")
    problem = SolitonProblem(SolitonKind.RB, parsed.fields["z"], 0.5)
    with pytest.raises(TypeError, match="exact"):
        soliton_solve_trace(parsed.spec, bundle, problem)
    with pytest.raises(TypeError, match="exact"):
        classify_soliton(0.5)


def test_trace_uniqueness():
    # the solved Omega is the unique rational zeroing the residual trace
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    omega = Fraction(2)
    problem = SolitonProblem(SolitonKind.STAR_RB, parsed.fields["z"], omega)
    solved = soliton_solve_trace(spec, bundle, problem).solved["Omega"]
    for delta in (Fraction(1), Fraction(-1, 3)):
        shifted = SolitonProblem(SolitonKind.STAR_RB, parsed.fields["z"], omega,
                                 omega_param=solved + delta)
        assert not soliton_verify(spec, bundle, shifted).trace_satisfied


def test_lie_derivative_reference():
    # cross-check the star-rb left side against its two pieces
    parsed = load("kenmotsu-example-5d")
    spec, bundle = parsed.spec, bundle_for("kenmotsu-example-5d")
    lie = lie_derivative_metric(spec, bundle.conn, parsed.fields["z"])
    expected = (metric_tensor(spec) - eta_outer(spec)).scale(4)
    assert lie == expected
