"""Soliton equations on a frame: decomposition, solving, verification.

Three equation kinds are supported, all stated for a field z, a coupling
omega and the curvature of the frame metric:

* ``rb``      L_z g + 2 Ric        = 2 Omega g + 2 omega r g
* ``star-rb`` L_z g + 2 Ric*       = 2 [Omega + omega r*] g
* ``eta-rb``  L_z g + 2 Ric        = 2 Lambda g + 2 omega r g
                                     + 2 mu eta (x) eta

Solving works through the metric trace (and, for the eta kind, the exact
decomposition against span{g, eta (x) eta}), which pins the constants
uniquely; the full tensor residual is then reported separately, so a
"trace soliton" is never silently promoted to an exact one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .curvature import CurvatureBundle
from .errors import GeometryError, StructureError
from .fields import VectorField, divergence, lie_derivative_metric
from .manifold import ManifoldSpec
from .ring import RingElement, exact_fraction, format_rational
from .tensors import FrameTensor, eta_outer, from_rational_rank2, metric_tensor


class SolitonKind(Enum):
    RB = "rb"
    STAR_RB = "star-rb"
    ETA_RB = "eta-rb"

    @classmethod
    def parse(cls, text: str) -> "SolitonKind":
        for kind in cls:
            if kind.value == text:
                return kind
        raise GeometryError(
            f"unknown soliton kind {text!r}; expected one of "
            + ", ".join(k.value for k in cls)
        )


@dataclass(frozen=True)
class SolitonProblem:
    """One soliton question: which equation, which field, which coupling.

    Leave the parameters unset to solve for them; set ``omega_param`` (for
    rb / star-rb) or ``lambda_param`` and ``mu_param`` (for eta-rb) to verify
    a given soliton instead.
    """

    kind: SolitonKind
    field: VectorField
    omega: Fraction
    omega_param: Optional[Fraction] = None
    lambda_param: Optional[Fraction] = None
    mu_param: Optional[Fraction] = None

    @property
    def verify_mode(self) -> bool:
        if self.kind is SolitonKind.ETA_RB:
            return self.lambda_param is not None or self.mu_param is not None
        return self.omega_param is not None


@dataclass(frozen=True)
class SolitonReport:
    kind: SolitonKind
    field_name: str
    omega: Fraction
    solved: dict
    residual: FrameTensor
    residual_trace: RingElement
    residual_is_zero: bool
    trace_satisfied: bool
    classification: str
    notes: tuple[str, ...] = ()


def classify_soliton(value) -> str:
    """Sign classification of the soliton constant.

    Positive -> "compressing", zero -> "balancing", negative -> "enlarging";
    a non-constant value cannot be sign-classified and is "indeterminate".
    """
    if isinstance(value, RingElement):
        if not value.is_constant():
            return "indeterminate"
        value = value.constant_value()
    value = exact_fraction(value)
    if value > 0:
        return "compressing"
    if value < 0:
        return "enlarging"
    return "balancing"


# ---------------------------------------------------------------------------
# decomposition against span{g, eta (x) eta}
# ---------------------------------------------------------------------------

def decompose_g_eta(
    spec: ManifoldSpec, tensor: FrameTensor
) -> tuple[RingElement, RingElement, FrameTensor]:
    """Write a symmetric 2-tensor as a g + b eta(x)eta + E.

    E is normalized by zero metric trace and zero (xi, xi) slot, which makes
    (a, b) unique; E vanishes exactly when T lies in span{g, eta (x) eta}.
    """
    if tensor.rank != 2:
        raise GeometryError("decomposition is defined for rank-2 tensors")
    if not tensor.is_symmetric():
        raise GeometryError("decomposition requires a symmetric tensor")
    if spec.metric[spec.xi_index][spec.xi_index] != 1:
        raise StructureError("decomposition requires g(xi, xi) = 1")
    d = spec.dim
    trace = tensor.g_trace(spec)
    slot = tensor[spec.xi_index, spec.xi_index]
    a = (trace - slot) * Fraction(1, d - 1)
    b = slot - a
    residue = tensor - metric_tensor(spec).scale(a) - eta_outer(spec).scale(b)
    return a, b, residue


# ---------------------------------------------------------------------------
# equation assembly
# ---------------------------------------------------------------------------

def _curvature_term(spec: ManifoldSpec, bundle: CurvatureBundle, kind: SolitonKind):
    """(2-tensor, scalar) entering the chosen equation: (Ric, r) or (Ric*, r*)."""
    if kind is SolitonKind.STAR_RB:
        return from_rational_rank2(spec.dim, bundle.star_ricci), bundle.star_scalar
    return from_rational_rank2(spec.dim, bundle.ricci), bundle.scalar_r


def soliton_left_side(
    spec: ManifoldSpec, bundle: CurvatureBundle, kind: SolitonKind, field: VectorField
) -> FrameTensor:
    """L_z g plus twice the curvature tensor of the chosen kind."""
    lie = lie_derivative_metric(spec, bundle.conn, field)
    curv, _ = _curvature_term(spec, bundle, kind)
    return lie + curv.scale(2)


def _right_side(spec, kind, omega, scalar, omega_or_lambda, mu):
    g = metric_tensor(spec)
    coeff = 2 * omega_or_lambda + 2 * omega * scalar
    rhs = g.scale(coeff)
    if kind is SolitonKind.ETA_RB:
        rhs = rhs + eta_outer(spec).scale(2 * mu)
    return rhs


def _report(spec, kind, field, omega, solved, residual, classification, notes):
    trace = residual.g_trace(spec)
    return SolitonReport(
        kind=kind,
        field_name=field.name,
        omega=omega,
        solved=solved,
        residual=residual,
        residual_trace=trace,
        residual_is_zero=residual.is_zero(),
        trace_satisfied=trace.is_zero(),
        classification=classification,
        notes=tuple(notes),
    )


def _degeneracy_notes(spec, omega) -> list[str]:
    if omega * spec.dim == 1:
        return [
            "omega * dim = 1: the solenoidal scalar-curvature formula "
            "dividing by 1 - omega * dim is inapplicable at this coupling"
        ]
    return []


def soliton_solve_trace(
    spec: ManifoldSpec, bundle: CurvatureBundle, problem: SolitonProblem
) -> SolitonReport:
    """Solve the trace of the soliton equation for the constant parameters.

    For rb / star-rb the metric trace pins Omega = (div z + s)/dim -
    omega s (s the matching scalar curvature); for eta-rb the exact
    g/eta(x)eta decomposition of the left side pins Lambda from its trace
    part and mu from the (xi, xi) slot.  A non-constant divergence (or
    decomposition coefficient) admits no constant solution and raises
    GeometryError.  The returned residual is the full tensor gap at the
    solved parameters; ``residual_is_zero`` distinguishes an exact soliton
    from a trace-only one.
    """
    if problem.verify_mode:
        raise GeometryError("parameters already supplied; use soliton_verify")
    kind, field, omega = problem.kind, problem.field, exact_fraction(problem.omega)
    d = spec.dim
    notes = _degeneracy_notes(spec, omega)
    lhs = soliton_left_side(spec, bundle, kind, field)
    _, scalar = _curvature_term(spec, bundle, kind)

    if kind is SolitonKind.ETA_RB:
        a, b, residue = decompose_g_eta(spec, lhs)
        if not a.is_constant() or not b.is_constant():
            raise GeometryError(
                "no constant-parameter solution: the g/eta-decomposition of the "
                f"left side has non-constant coefficients a = {a}, b = {b}"
            )
        lam = a.constant_value() / 2 - omega * scalar
        mu = b.constant_value() / 2
        solved = {"Lambda": lam, "mu": mu}
        return _report(spec, kind, field, omega, solved, residue,
                       classify_soliton(lam), notes)

    div = divergence(spec, bundle.conn, field)
    if not div.is_constant():
        raise GeometryError(
            f"no constant-Omega solution: div {field.name} = {div} is not constant"
        )
    omega_solved = (div.constant_value() + scalar) / d - omega * scalar
    residual = lhs - _right_side(spec, kind, omega, scalar, omega_solved, None)
    solved = {"Omega": omega_solved}
    return _report(spec, kind, field, omega, solved, residual,
                   classify_soliton(omega_solved), notes)


def soliton_verify(
    spec: ManifoldSpec, bundle: CurvatureBundle, problem: SolitonProblem
) -> SolitonReport:
    """Evaluate the soliton equation at caller-supplied parameters."""
    kind, field, omega = problem.kind, problem.field, exact_fraction(problem.omega)
    lhs = soliton_left_side(spec, bundle, kind, field)
    _, scalar = _curvature_term(spec, bundle, kind)
    notes = _degeneracy_notes(spec, omega)

    if kind is SolitonKind.ETA_RB:
        if problem.lambda_param is None or problem.mu_param is None:
            raise GeometryError("eta-rb verification needs both Lambda and mu")
        lam = exact_fraction(problem.lambda_param)
        mu = exact_fraction(problem.mu_param)
        residual = lhs - _right_side(spec, kind, omega, scalar, lam, mu)
        solved = {"Lambda": lam, "mu": mu}
        return _report(spec, kind, field, omega, solved, residual,
                       classify_soliton(lam), notes)

    if problem.omega_param is None:
        raise GeometryError("verification needs the soliton constant Omega")
    omega_given = exact_fraction(problem.omega_param)
    residual = lhs - _right_side(spec, kind, omega, scalar, omega_given, None)
    solved = {"Omega": omega_given}
    return _report(spec, kind, field, omega, solved, residual,
                   classify_soliton(omega_given), notes)


def solved_parameters_text(report: SolitonReport) -> dict[str, str]:
    return {name: format_rational(value) for name, value in sorted(report.solved.items())}
