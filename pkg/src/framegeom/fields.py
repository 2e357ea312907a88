"""Vector fields with ring-valued frame components and their analysis.

Covers covariant derivatives, divergence, the Lie derivative of the metric,
conformal-Killing detection and the torse-forming decomposition
nabla_X rho = Psi X + gamma(X) rho with its five-way subclassification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .curvature import ConnectionCoeffs
from .errors import DimensionMismatch, GeometryError
from .manifold import ManifoldSpec
from .ring import RingElement, apply_derivation
from .tensors import FrameTensor


@dataclass(frozen=True)
class VectorField:
    """A vector field z = sum_i f_i e_i with ring-function components.

    ``declared_gradient`` is an unverified user assertion that z is the
    gradient of some potential; it only changes how reports phrase the
    divergence (as a Laplacian of that potential).
    """

    name: str
    components: tuple[RingElement, ...]
    declared_gradient: bool = False

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise GeometryError("vector field needs at least one component")
        dim = comps[0].dim
        if any(c.dim != dim for c in comps) or len(comps) != dim:
            raise DimensionMismatch("component count must equal the frame dimension")
        object.__setattr__(self, "components", comps)

    @property
    def dim(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    @classmethod
    def from_constants(cls, name: str, values: Sequence, declared_gradient: bool = False):
        dim = len(values)
        return cls(name, tuple(RingElement.constant(dim, v) for v in values),
                   declared_gradient)


def xi_field(spec: ManifoldSpec, name: str = "xi") -> VectorField:
    comps = [RingElement.zero(spec.dim) for _ in range(spec.dim)]
    comps[spec.xi_index] = RingElement.constant(spec.dim, 1)
    return VectorField(name, tuple(comps))


def _check_pairing(spec: ManifoldSpec, conn: ConnectionCoeffs, field: VectorField):
    if conn.spec is not spec and conn.spec != spec:
        raise GeometryError("connection was computed for a different manifold")
    if field.dim != spec.dim:
        raise DimensionMismatch(
            f"field over {field.dim} components on a dim-{spec.dim} frame"
        )


def covariant_derivative(
    spec: ManifoldSpec, conn: ConnectionCoeffs, index: int, field: VectorField
) -> VectorField:
    """nabla_{e_index} z, componentwise: e_index(f_j) + sum_k f_k gamma[index][k][j]."""
    _check_pairing(spec, conn, field)
    d = spec.dim
    if not 0 <= index < d:
        raise GeometryError(f"frame index {index} out of range")
    gamma = conn.gamma
    comps = []
    for j in range(d):
        value = apply_derivation(index, field.components[j], spec)
        for k in range(d):
            if gamma[index][k][j]:
                value = value + field.components[k] * gamma[index][k][j]
        comps.append(value)
    return VectorField(f"nabla_{index + 1}({field.name})", tuple(comps))


def divergence(spec: ManifoldSpec, conn: ConnectionCoeffs, field: VectorField) -> RingElement:
    """div z = trace of X -> nabla_X z (equals the metric trace of g(nabla z, .))."""
    _check_pairing(spec, conn, field)
    total = RingElement.zero(spec.dim)
    for i in range(spec.dim):
        total = total + covariant_derivative(spec, conn, i, field).components[i]
    return total


def lie_derivative_metric(
    spec: ManifoldSpec, conn: ConnectionCoeffs, field: VectorField
) -> FrameTensor:
    """(L_z g)(X,Y) = g(nabla_X z, Y) + g(X, nabla_Y z) on all frame pairs."""
    _check_pairing(spec, conn, field)
    d = spec.dim
    g = spec.metric
    nabla = [covariant_derivative(spec, conn, i, field).components for i in range(d)]
    entries = []
    for i in range(d):
        for j in range(d):
            value = RingElement.zero(d)
            for k in range(d):
                if g[k][j]:
                    value = value + nabla[i][k] * g[k][j]
                if g[i][k]:
                    value = value + nabla[j][k] * g[i][k]
            entries.append(value)
    return FrameTensor(d, 2, entries)


# ---------------------------------------------------------------------------
# conformal-Killing classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConformalKillingReport:
    """Outcome of testing L_z g = 2 sigma g for a ring function sigma.

    When conformal, the factor is refined: Killing (sigma = 0), proper
    homothetic (sigma a nonzero constant) or proper (sigma non-constant).
    ``is_homothetic`` covers every constant sigma, including zero.
    """

    is_conformal: bool
    factor: Optional[RingElement] = None

    @property
    def is_killing(self) -> bool:
        return self.is_conformal and self.factor.is_zero()

    @property
    def is_homothetic(self) -> bool:
        return self.is_conformal and self.factor.is_constant()

    @property
    def is_proper_homothetic(self) -> bool:
        return self.is_homothetic and not self.factor.is_zero()

    @property
    def is_proper(self) -> bool:
        return self.is_conformal and not self.factor.is_constant()

    @property
    def label(self) -> str:
        if not self.is_conformal:
            return "not-conformal"
        if self.is_killing:
            return "killing"
        if self.is_proper_homothetic:
            return "proper-homothetic"
        return "proper"


def conformal_killing_classify(
    spec: ManifoldSpec, conn: ConnectionCoeffs, field: VectorField
) -> ConformalKillingReport:
    lie = lie_derivative_metric(spec, conn, field)
    d = spec.dim
    g = spec.metric
    # Candidate factor from the first nonzero metric slot; g is constant, so
    # this is a scalar division inside the ring.
    sigma = None
    for i in range(d):
        for j in range(d):
            if g[i][j] != 0:
                sigma = lie[i, j] * Fraction(1, 2) * (Fraction(1) / g[i][j])
                break
        if sigma is not None:
            break
    for i in range(d):
        for j in range(d):
            if lie[i, j] != sigma * (2 * g[i][j]):
                return ConformalKillingReport(False)
    return ConformalKillingReport(True, sigma)


# ---------------------------------------------------------------------------
# torse-forming decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TorseFormingReport:
    """Exact solution of nabla_X rho = Psi X + gamma(X) rho, when consistent.

    ``gamma`` holds the frame components gamma(e_i); ``gamma_of_field`` is
    gamma(rho).  ``subclass`` is the most specific of: parallel (Psi = 0,
    gamma = 0), concurrent (Psi = 1, gamma = 0), concircular (gamma = 0),
    recurrent (Psi = 0), torqued (gamma(rho) = 0, gamma != 0), generic --
    or "none" when the field is not torse-forming.
    """

    is_torse_forming: bool
    psi: RingElement
    gamma: tuple[RingElement, ...]
    gamma_of_field: RingElement
    subclass: str


def _classify_torse(psi, gamma, gamma_of_field) -> str:
    gamma_zero = all(gi.is_zero() for gi in gamma)
    if gamma_zero:
        if psi.is_zero():
            return "parallel"
        if psi == 1:
            return "concurrent"
        return "concircular"
    if psi.is_zero():
        return "recurrent"
    if gamma_of_field.is_zero():
        return "torqued"
    return "generic"


def torse_forming_decompose(
    spec: ManifoldSpec, conn: ConnectionCoeffs, rho: VectorField
) -> TorseFormingReport:
    """Solve the overdetermined linear system for Psi and gamma exactly.

    The unknowns are read off slot equations D[i][j] = Psi delta_ij +
    gamma_i rho_j and then every equation is re-verified, so the choice of
    defining slots cannot silently project an inconsistent system.  Slots
    with rho_j = 0 carry no information about gamma_i; the solver prefers
    the directly determined values and zero where nothing pins gamma.
    """
    _check_pairing(spec, conn, rho)
    if rho.is_zero():
        raise GeometryError("torse-forming decomposition requires a non-vanishing field")
    d = spec.dim
    zero = RingElement.zero(d)
    deriv = [covariant_derivative(spec, conn, i, rho).components for i in range(d)]
    comps = rho.components
    support = [j for j in range(d) if not comps[j].is_zero()]

    failed = TorseFormingReport(False, zero, tuple([zero] * d), zero, "none")

    # Psi from a row with vanishing rho-component, else via one division.
    psi = None
    for i in range(d):
        if comps[i].is_zero():
            psi = deriv[i][i]
            break
    if psi is None:
        j = support[1] if support[0] == 0 else support[0]
        g0 = deriv[0][j].exact_div(comps[j])
        if g0 is None:
            return failed
        psi = deriv[0][0] - g0 * comps[0]

    gamma: list[RingElement] = []
    for i in range(d):
        slot = next((j for j in support if j != i), None)
        if slot is not None:
            pinned = deriv[i][slot].exact_div(comps[slot])
        else:
            # rho is supported only on e_i here; the diagonal slot pins gamma_i.
            pinned = (deriv[i][i] - psi).exact_div(comps[i])
        if pinned is None:
            return failed
        gamma.append(pinned)

    for i in range(d):
        for j in range(d):
            expected = gamma[i] * comps[j]
            if i == j:
                expected = expected + psi
            if deriv[i][j] != expected:
                return failed

    gamma_of_field = sum((gamma[i] * comps[i] for i in range(d)), zero)
    return TorseFormingReport(
        True, psi, tuple(gamma), gamma_of_field, _classify_torse(psi, gamma, gamma_of_field)
    )
