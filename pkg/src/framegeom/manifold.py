"""Homogeneous almost-contact metric manifolds given by constant frame data.

A manifold is described entirely on a global frame e_1 .. e_{2n+1}: constant
structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k, a
constant symmetric positive-definite frame metric g, a (1,1)-tensor phi whose
columns are the frame components of phi(e_j), and the index of the Reeb
vector xi among the frame vectors.  The dual form eta is derived from the
metric, eta(X) = g(X, xi), and is never stored independently.

All frame indices in this module are 0-based; the document layer converts
from the 1-based indices used in manifold files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .errors import StructureError

Rank3 = tuple[tuple[tuple[Fraction, ...], ...], ...]


def _freeze_rank3(c) -> Rank3:
    return tuple(tuple(tuple(Fraction(v) for v in row) for row in plane) for plane in c)


def _freeze_matrix(m) -> linalg.Matrix:
    return tuple(tuple(Fraction(v) for v in row) for row in m)


@dataclass(frozen=True)
class ManifoldSpec:
    """Constant frame data for a homogeneous almost-contact metric manifold.

    Attributes:
        name: identifier used in reports.
        dim: odd dimension 2n+1 >= 3.
        structure_constants: c[i][j][k], all rational.
        metric: symmetric positive-definite frame metric g[i][j].
        phi: matrix whose column j holds the frame components of phi(e_j).
        xi_index: 0-based frame index of the Reeb vector xi.
    """

    name: str
    dim: int
    structure_constants: Rank3
    metric: linalg.Matrix
    phi: linalg.Matrix
    xi_index: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "structure_constants", _freeze_rank3(self.structure_constants))
        object.__setattr__(self, "metric", _freeze_matrix(self.metric))
        object.__setattr__(self, "phi", _freeze_matrix(self.phi))

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2

    @property
    def eta(self) -> tuple[Fraction, ...]:
        """Frame components of eta: eta(e_i) = g(e_i, xi)."""
        return tuple(self.metric[i][self.xi_index] for i in range(self.dim))

    @property
    def metric_inverse(self) -> linalg.Matrix:
        if "metric_inverse" not in self._cache:
            self._cache["metric_inverse"] = linalg.inverse(self.metric)
        return self._cache["metric_inverse"]

    @property
    def realization(self) -> Optional[str]:
        """Coordinate realization of the frame: 'flat', 'warped' or None.

        * 'flat': the abelian bracket table; e_i acts as d/dy_i.
        * 'warped': [e_i, e_d] = e_i for i < d and all other brackets zero;
          e_i acts as exp(-y_d) d/dy_i and e_d as d/dy_d.

        Frames with any other bracket table have no coordinate realization
        here, which only restricts differentiating non-constant functions.
        """
        if "realization" not in self._cache:
            self._cache["realization"] = _detect_realization(self)
        return self._cache["realization"]


def _detect_realization(spec: ManifoldSpec) -> Optional[str]:
    d = spec.dim
    c = spec.structure_constants
    if all(c[i][j][k] == 0 for i in range(d) for j in range(d) for k in range(d)):
        return "flat"
    last = d - 1
    for i in range(d):
        for j in range(d):
            for k in range(d):
                expected = Fraction(0)
                if i < last and j == last and k == i:
                    expected = Fraction(1)
                elif i == last and j < last and k == j:
                    expected = Fraction(-1)
                if c[i][j][k] != expected:
                    return None
    return "warped"


# ---------------------------------------------------------------------------
# structural invariants
# ---------------------------------------------------------------------------

def check_structure(spec: ManifoldSpec) -> None:
    """Raise StructureError naming the first violated structural invariant."""
    if spec._cache.get("structure_ok"):
        return
    d = spec.dim
    if d < 3 or d % 2 == 0:
        raise StructureError(f"dimension must be odd and >= 3, got {d}")
    c = spec.structure_constants
    if len(c) != d or any(len(p) != d or any(len(r) != d for r in p) for p in c):
        raise StructureError("structure constants must form a dim^3 array")
    if len(spec.metric) != d or any(len(r) != d for r in spec.metric):
        raise StructureError("metric must be a dim x dim matrix")
    if len(spec.phi) != d or any(len(r) != d for r in spec.phi):
        raise StructureError("phi must be a dim x dim matrix")
    if not 0 <= spec.xi_index < d:
        raise StructureError(f"xi index {spec.xi_index} out of range")

    for i in range(d):
        for j in range(d):
            for k in range(d):
                if c[i][j][k] != -c[j][i][k]:
                    raise StructureError(
                        f"bracket antisymmetry fails at (i,j,k)=({i + 1},{j + 1},{k + 1})"
                    )
    # Jacobi via the nonzero bracket entries only: accumulate
    # J[(a,b,e,k)] = sum_m c[a][b][m] c[m][e][k], then each cyclic sum over
    # (i,j,l) must vanish.  Keys absent from J contribute zero.
    nonzero = [
        (i, j, m, c[i][j][m])
        for i in range(d) for j in range(d) for m in range(d)
        if c[i][j][m] != 0
    ]
    by_first = {}
    for (m, e, k, v) in nonzero:
        by_first.setdefault(m, []).append((e, k, v))
    double: dict[tuple[int, int, int, int], Fraction] = {}
    for (a, b, m, v1) in nonzero:
        for (e, k, v2) in by_first.get(m, ()):
            key = (a, b, e, k)
            double[key] = double.get(key, Fraction(0)) + v1 * v2
    for (i, j, l, k) in list(double):
        total = (
            double.get((i, j, l, k), 0)
            + double.get((j, l, i, k), 0)
            + double.get((l, i, j, k), 0)
        )
        if total != 0:
            raise StructureError(
                "Jacobi identity fails at "
                f"(i,j,l;k)=({i + 1},{j + 1},{l + 1};{k + 1})"
            )
    if not linalg.is_symmetric(spec.metric):
        raise StructureError("metric is not symmetric")
    minors = linalg.leading_principal_minors(spec.metric)
    for k, minor in enumerate(minors):
        if minor <= 0:
            raise StructureError(
                f"metric is not positive definite (leading minor {k + 1} is {minor})"
            )
    spec._cache["structure_ok"] = True


# ---------------------------------------------------------------------------
# axiom validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom: id, pass flag and the first failing index tuple.

    Index tuples are reported 1-based to match the document format.
    """

    axiom_id: str
    passed: bool
    first_failure: Optional[tuple[int, ...]] = None
    note: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]
    is_almost_contact: bool
    is_kenmotsu: bool

    def check(self, axiom_id: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom_id == axiom_id:
                return c
        raise KeyError(axiom_id)

    def failed_ids(self) -> list[str]:
        return [c.axiom_id for c in self.checks if not c.passed]


def _phi_apply(spec: ManifoldSpec, vec: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    d = spec.dim
    return tuple(sum((spec.phi[k][j] * vec[j] for j in range(d)), Fraction(0)) for k in range(d))


def _almost_contact_checks(spec: ManifoldSpec) -> list[AxiomCheck]:
    d = spec.dim
    g = spec.metric
    phi = spec.phi
    eta = spec.eta
    xi = spec.xi_index
    checks = []

    def run(axiom_id, indices, predicate, note=""):
        failure = None
        for idx in indices:
            if not predicate(*idx):
                failure = tuple(i + 1 for i in idx)
                break
        checks.append(AxiomCheck(axiom_id, failure is None, failure, note))

    pairs = [(i, j) for i in range(d) for j in range(d)]

    # phi^2 = -Id + eta (x) xi
    def phi_square(i, j):
        lhs = sum((phi[i][k] * phi[k][j] for k in range(d)), Fraction(0))
        rhs = -(Fraction(1) if i == j else Fraction(0)) + eta[j] * (
            Fraction(1) if i == xi else Fraction(0)
        )
        return lhs == rhs

    run("phi_square", pairs, phi_square)
    run("eta_after_phi", [(j,) for j in range(d)],
        lambda j: sum((eta[i] * phi[i][j] for i in range(d)), Fraction(0)) == 0)
    run("phi_xi_zero", [(i,) for i in range(d)], lambda i: phi[i][xi] == 0)
    run("eta_xi_one", [(xi,)], lambda _: g[xi][xi] == 1)

    def phi_metric(i, j):
        lhs = sum(
            (phi[k][i] * g[k][l] * phi[l][j] for k in range(d) for l in range(d)),
            Fraction(0),
        )
        return lhs == g[i][j] - eta[i] * eta[j]

    run("phi_compatible_metric", pairs, phi_metric)

    def phi_skew(i, j):
        lhs = sum((g[i][k] * phi[k][j] for k in range(d)), Fraction(0))
        rhs = -sum((phi[k][i] * g[k][j] for k in range(d)), Fraction(0))
        return lhs == rhs

    run("phi_skew_adjoint", pairs, phi_skew)
    return checks


def validate_almost_contact(spec: ManifoldSpec) -> ValidationReport:
    """Check the defining almost-contact metric axioms on all frame indices.

    Structural invariants (bracket antisymmetry, Jacobi, metric SPD) are
    enforced first and raise StructureError; the axioms themselves are
    reported check-by-check, every failure listed.
    """
    check_structure(spec)
    checks = _almost_contact_checks(spec)
    ok = all(c.passed for c in checks)
    return ValidationReport(tuple(checks), ok, False)


def validate_kenmotsu(spec: ManifoldSpec, conn) -> ValidationReport:
    """Check the Kenmotsu covariant-derivative axioms on top of almost contact.

    ``conn`` must be the Levi-Civita connection of the same spec.  The report
    contains the almost-contact checks followed by:

    * ``covariant_phi``:  (nabla_X phi)Y = -g(X, phi Y) xi - eta(Y) phi X
    * ``covariant_xi``:   nabla_X xi = X - eta(X) xi
    * ``covariant_eta``:  (nabla_X eta)Y = g(X,Y) - eta(X) eta(Y), a
      consequence identity kept as a separate diagnostic.
    """
    if conn.spec is not spec and conn.spec != spec:
        raise StructureError("connection was computed for a different manifold")
    checks = _almost_contact_checks(spec)
    d = spec.dim
    g = spec.metric
    phi = spec.phi
    eta = spec.eta
    xi = spec.xi_index
    gamma = conn.gamma

    def covariant_phi(i, j):
        for l in range(d):
            nabla_phi = sum(
                (phi[k][j] * gamma[i][k][l] for k in range(d)), Fraction(0)
            ) - sum((gamma[i][j][k] * phi[l][k] for k in range(d)), Fraction(0))
            g_i_phij = sum((g[i][k] * phi[k][j] for k in range(d)), Fraction(0))
            rhs = -g_i_phij * (Fraction(1) if l == xi else Fraction(0)) - eta[j] * phi[l][i]
            if nabla_phi != rhs:
                return False
        return True

    def covariant_xi(i, k):
        lhs = gamma[i][xi][k]
        rhs = (Fraction(1) if i == k else Fraction(0)) - eta[i] * (
            Fraction(1) if k == xi else Fraction(0)
        )
        return lhs == rhs

    def covariant_eta(i, j):
        lhs = -sum((gamma[i][j][k] * eta[k] for k in range(d)), Fraction(0))
        return lhs == g[i][j] - eta[i] * eta[j]

    pairs = [(i, j) for i in range(d) for j in range(d)]
    for axiom_id, predicate in (
        ("covariant_phi", covariant_phi),
        ("covariant_xi", covariant_xi),
        ("covariant_eta", covariant_eta),
    ):
        failure = None
        for idx in pairs:
            if not predicate(*idx):
                failure = tuple(i + 1 for i in idx)
                break
        checks.append(AxiomCheck(axiom_id, failure is None, failure))

    ac = all(c.passed for c in checks[:6])
    kenmotsu = ac and all(c.passed for c in checks[6:])
    return ValidationReport(tuple(checks), ac, kenmotsu)
