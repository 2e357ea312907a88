"""Levi-Civita connection and the curvature hierarchy on a constant frame.

Everything is exact rational arithmetic.  Conventions, fixed once for the
whole package:

* curvature operator  R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
  - nabla_{[X,Y]} Z;
* lowered tensor      Rl(X,Y,Z,W) = g(R(X,Y)Z, W);
* Ricci tensor        Ric(Y,Z) = trace of X -> R(X,Y)Z, i.e. the metric
  trace of Rl over its first and last slots;
* scalar curvature    r = metric trace of Ric.

With these signs the round sphere has positive scalar curvature and the
warped hyperbolic frames in the catalog come out with Ric = -2n g.

Because the frame metric is constant, the Koszul formula loses its three
derivative terms and the whole hierarchy is finite exact algebra in the
structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from . import linalg
from .errors import StructureError
from .manifold import ManifoldSpec, Rank3, check_structure, validate_kenmotsu
from .ring import exact_fraction
from .tensors import FrameTensor, from_rational_rank4

Rank4 = tuple  # nested 4-deep tuples of Fraction
Matrix = linalg.Matrix


@dataclass(frozen=True)
class ConnectionCoeffs:
    """Levi-Civita coefficients: nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k."""

    spec: ManifoldSpec
    gamma: Rank3


@dataclass(frozen=True)
class CurvatureBundle:
    """The curvature hierarchy of one manifold, all entries rational.

    ``riemann[i][j][k][l]`` holds the (1,3) components (R(e_i,e_j)e_k along
    e_l); ``riemann_lowered`` the fully covariant tensor; ``star_ricci`` the
    half-trace of Z -> phi(R(X, phi Y)Z) computed directly from the curvature
    operator (no structure assumptions), with ``star_scalar`` its metric
    trace.
    """

    spec: ManifoldSpec
    conn: ConnectionCoeffs
    riemann: Rank4
    riemann_lowered: Rank4
    ricci: Matrix
    scalar_r: Fraction
    star_ricci: Matrix
    star_scalar: Fraction


def levi_civita(spec: ManifoldSpec) -> ConnectionCoeffs:
    """Koszul formula for a constant frame metric (bracket terms only)."""
    check_structure(spec)
    d = spec.dim
    c = spec.structure_constants
    g = spec.metric
    ginv = spec.metric_inverse
    half = Fraction(1, 2)
    gamma = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            lowered = [
                half * (
                    -sum(c[j][k][l] * g[i][l] for l in range(d))
                    - sum(c[i][k][l] * g[j][l] for l in range(d))
                    + sum(c[i][j][l] * g[l][k] for l in range(d))
                )
                for k in range(d)
            ]
            for m in range(d):
                gamma[i][j][m] = sum(
                    (lowered[k] * ginv[k][m] for k in range(d)), Fraction(0)
                )
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in gamma)
    return ConnectionCoeffs(spec, frozen)


def riemann(spec: ManifoldSpec, conn: ConnectionCoeffs) -> Rank4:
    """(1,3) curvature components from constant connection coefficients.

    Iterates over the nonzero connection and bracket entries only; on the
    sparse homogeneous frames this is far below the dense d^5 bound.
    """
    d = spec.dim
    c = spec.structure_constants
    gamma = conn.gamma
    out = [[[[Fraction(0)] * d for _ in range(d)] for _ in range(d)] for _ in range(d)]
    gamma_rows = [
        [[(l, v) for l, v in enumerate(gamma[i][k]) if v] for k in range(d)]
        for i in range(d)
    ]
    for i in range(d):
        for j in range(d):
            cij = c[i][j]
            for k in range(d):
                row = out[i][j][k]
                for l, v in gamma_rows[j][k]:
                    for m, w in gamma_rows[i][l]:
                        row[m] += v * w
                for l, v in gamma_rows[i][k]:
                    for m, w in gamma_rows[j][l]:
                        row[m] -= v * w
                for l in range(d):
                    if cij[l]:
                        for m, w in gamma_rows[l][k]:
                            row[m] -= cij[l] * w
    return tuple(tuple(tuple(tuple(r) for r in p) for p in q) for q in out)


def lower_riemann(spec: ManifoldSpec, riem: Rank4) -> Rank4:
    d = spec.dim
    g = spec.metric
    out = [[[[Fraction(0)] * d for _ in range(d)] for _ in range(d)] for _ in range(d)]
    for i, j, k in product(range(d), repeat=3):
        src = riem[i][j][k]
        dst = out[i][j][k]
        for m in range(d):
            if src[m]:
                for l in range(d):
                    if g[m][l]:
                        dst[l] += src[m] * g[m][l]
    return tuple(tuple(tuple(tuple(r) for r in p) for p in q) for q in out)


def ricci_and_scalar(spec: ManifoldSpec, lowered: Rank4) -> tuple[Matrix, Fraction]:
    d = spec.dim
    ginv = spec.metric_inverse
    ric = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for l in range(d):
            if ginv[i][l] == 0:
                continue
            v = ginv[i][l]
            plane = lowered[i]
            for j in range(d):
                for k in range(d):
                    if plane[j][k][l]:
                        ric[j][k] += v * plane[j][k][l]
    scalar = sum(
        (ginv[j][k] * ric[j][k] for j in range(d) for k in range(d)), Fraction(0)
    )
    return tuple(tuple(row) for row in ric), scalar


def star_ricci_direct(spec: ManifoldSpec, riem: Rank4) -> tuple[Matrix, Fraction]:
    """Half-trace of Z -> phi(R(X, phi Y)Z), straight from the curvature operator.

    The metric trace over the frame slot contracts g against its inverse, so
    the sum reduces to (1/2) sum_{a,m,p} phi[m][j] R[i][m][a][p] phi[a][p].
    Symmetry of the result is a property of the structure, not of this
    formula; callers who rely on it should check it.
    """
    d = spec.dim
    phi = spec.phi
    ginv = spec.metric_inverse
    half = Fraction(1, 2)
    star = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            total = Fraction(0)
            for m in range(d):
                pmj = phi[m][j]
                if pmj == 0:
                    continue
                plane = riem[i][m]
                for a in range(d):
                    row = plane[a]
                    total += pmj * sum(
                        (row[p] * phi[a][p] for p in range(d) if row[p]), Fraction(0)
                    )
            star[i][j] = half * total
    scalar = sum(
        (ginv[i][j] * star[i][j] for i in range(d) for j in range(d)), Fraction(0)
    )
    return tuple(tuple(row) for row in star), scalar


def curvature_bundle(spec: ManifoldSpec, conn: Optional[ConnectionCoeffs] = None) -> CurvatureBundle:
    """Compute the full hierarchy for one manifold."""
    if conn is None:
        conn = levi_civita(spec)
    riem = riemann(spec, conn)
    lowered = lower_riemann(spec, riem)
    ric, scalar = ricci_and_scalar(spec, lowered)
    star, star_scalar = star_ricci_direct(spec, riem)
    return CurvatureBundle(spec, conn, riem, lowered, ric, scalar, star, star_scalar)


def star_ricci_kenmotsu(spec: ManifoldSpec, bundle: CurvatureBundle) -> Matrix:
    """The closed form Ric + (2n-1) g + eta (x) eta, valid on Kenmotsu frames.

    Serves as the independent second route to the star-Ricci tensor; raises
    StructureError when the manifold does not validate as Kenmotsu.
    """
    report = validate_kenmotsu(spec, bundle.conn)
    if not report.is_kenmotsu:
        raise StructureError(
            "star-Ricci closed form requires a Kenmotsu-valid manifold; "
            f"failed checks: {', '.join(report.failed_ids())}"
        )
    d = spec.dim
    coeff = Fraction(2 * spec.n - 1)
    eta = spec.eta
    return tuple(
        tuple(bundle.ricci[i][j] + coeff * spec.metric[i][j] + eta[i] * eta[j]
              for j in range(d))
        for i in range(d)
    )


# ---------------------------------------------------------------------------
# derived curvature tensors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class W2Result:
    tensor: FrameTensor
    is_flat: bool


@dataclass(frozen=True)
class QResult:
    tensor: FrameTensor
    psi: Fraction
    is_flat: bool


def w2_tensor(spec: ManifoldSpec, bundle: CurvatureBundle) -> W2Result:
    """Projective-type curvature tensor built from Rl, g and Ric.

    W2(X,Y,Z,W) = Rl(X,Y,Z,W) + [g(X,Z) Ric(Y,W) - g(Y,Z) Ric(X,W)] / 2n
    on a (2n+1)-dimensional frame.
    """
    d = spec.dim
    g = spec.metric
    ric = bundle.ricci
    lowered = bundle.riemann_lowered
    factor = Fraction(1, 2 * spec.n)
    entries = []
    for i, j, k, l in product(range(d), repeat=4):
        entries.append(
            lowered[i][j][k][l] + factor * (g[i][k] * ric[j][l] - g[j][k] * ric[i][l])
        )
    tensor = FrameTensor(d, 4, entries)
    return W2Result(tensor, tensor.is_zero())


def w2_flat_forces_einstein(spec: ManifoldSpec, bundle: CurvatureBundle) -> bool:
    """Consequence check: W2 flat implies Ric = (r / dim) g, entrywise."""
    d = spec.dim
    lam = bundle.scalar_r / d
    return all(
        bundle.ricci[i][j] == lam * spec.metric[i][j] for i in range(d) for j in range(d)
    )


def q_tensor(spec: ManifoldSpec, bundle: CurvatureBundle, psi: Fraction) -> QResult:
    """Curvature tensor deformed by a constant scalar psi (lowered form).

    Q(X,Y,Z,W) = Rl(X,Y,Z,W) - psi/2n [g(Y,Z) g(X,W) - g(X,Z) g(Y,W)].
    When Q vanishes the trace forces Ric = psi g, which is asserted.
    """
    d = spec.dim
    psi = exact_fraction(psi)
    g = spec.metric
    lowered = bundle.riemann_lowered
    factor = psi / Fraction(2 * spec.n)
    entries = []
    for i, j, k, l in product(range(d), repeat=4):
        entries.append(
            lowered[i][j][k][l] - factor * (g[j][k] * g[i][l] - g[i][k] * g[j][l])
        )
    tensor = FrameTensor(d, 4, entries)
    flat = tensor.is_zero()
    if flat:
        assert all(
            bundle.ricci[i][j] == psi * g[i][j] for i in range(d) for j in range(d)
        ), "flat Q must force an Einstein metric with factor psi"
    return QResult(tensor, psi, flat)


def q_flat_psi(spec: ManifoldSpec, bundle: CurvatureBundle) -> Optional[Fraction]:
    """The unique psi that can flatten Q: the factor of Ric = psi g.

    Returns None when Ric is not a multiple of the metric (then no constant
    psi can flatten Q).  The returned candidate still has to be checked with
    :func:`q_tensor`; an Einstein metric need not have constant curvature.
    """
    d = spec.dim
    einstein = classify_symmetric(spec, bundle.ricci)
    if einstein.kind != "einstein":
        return None
    return einstein.lam


# ---------------------------------------------------------------------------
# Einstein classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetricClassification:
    """T = lam g  ('einstein'), T = lam g + c eta(x)eta  ('eta_einstein'), or 'neither'."""

    kind: str
    lam: Optional[Fraction] = None
    c: Optional[Fraction] = None


@dataclass(frozen=True)
class EinsteinClassification:
    ricci: SymmetricClassification
    star_ricci: SymmetricClassification


def classify_symmetric(spec: ManifoldSpec, tensor: Matrix) -> SymmetricClassification:
    """Classify a symmetric rational 2-tensor against span{g, eta (x) eta}."""
    d = spec.dim
    if spec.metric[spec.xi_index][spec.xi_index] != 1:
        raise StructureError("classification requires g(xi, xi) = 1")
    ginv = spec.metric_inverse
    trace = sum((ginv[i][j] * tensor[i][j] for i in range(d) for j in range(d)), Fraction(0))
    slot = tensor[spec.xi_index][spec.xi_index]
    lam = (trace - slot) / Fraction(d - 1)
    c = slot - lam
    eta = spec.eta
    for i in range(d):
        for j in range(d):
            if tensor[i][j] != lam * spec.metric[i][j] + c * eta[i] * eta[j]:
                return SymmetricClassification("neither")
    if c == 0:
        return SymmetricClassification("einstein", lam, Fraction(0))
    return SymmetricClassification("eta_einstein", lam, c)


def einstein_classify(spec: ManifoldSpec, bundle: CurvatureBundle) -> EinsteinClassification:
    return EinsteinClassification(
        ricci=classify_symmetric(spec, bundle.ricci),
        star_ricci=classify_symmetric(spec, bundle.star_ricci),
    )


# ---------------------------------------------------------------------------
# identity suite (used by tests and the property suite)
# ---------------------------------------------------------------------------

def curvature_checks(bundle: CurvatureBundle) -> dict[str, bool]:
    """Exact structural identities of the connection and curvature.

    Returns a named map so callers can report which identity failed:
    torsion-freeness and metric compatibility of the connection, the three
    index symmetries of the lowered tensor, and both Bianchi identities
    (the differential one is finite algebra here because all coefficients
    are constant).
    """
    spec = bundle.spec
    d = spec.dim
    c = spec.structure_constants
    g = spec.metric
    gamma = bundle.conn.gamma
    low = bundle.riemann_lowered
    riem = bundle.riemann

    torsion_free = all(
        gamma[i][j][k] - gamma[j][i][k] == c[i][j][k]
        for i, j, k in product(range(d), repeat=3)
    )
    metric_compatible = all(
        sum((gamma[i][j][l] * g[l][k] + gamma[i][k][l] * g[j][l] for l in range(d)),
            Fraction(0)) == 0
        for i, j, k in product(range(d), repeat=3)
    )
    antisym_first = all(
        low[i][j][k][l] == -low[j][i][k][l] for i, j, k, l in product(range(d), repeat=4)
    )
    antisym_second = all(
        low[i][j][k][l] == -low[i][j][l][k] for i, j, k, l in product(range(d), repeat=4)
    )
    pair_symmetry = all(
        low[i][j][k][l] == low[k][l][i][j] for i, j, k, l in product(range(d), repeat=4)
    )
    bianchi_first = all(
        low[i][j][k][l] + low[j][k][i][l] + low[k][i][j][l] == 0
        for i, j, k, l in product(range(d), repeat=4)
    )

    # Covariant derivative of R, built once via the sparse nonzero entries of
    # gamma: nabla_R[i][j][k][l][m] = R[j][k][l][p] gamma[i][p][m]
    # - gamma[i][j][p] R[p][k][l][m] - gamma[i][k][p] R[j][p][l][m]
    # - gamma[i][l][p] R[j][k][p][m].
    zero = Fraction(0)
    nabla = [
        [[[[zero] * d for _ in range(d)] for _ in range(d)] for _ in range(d)]
        for _ in range(d)
    ]
    gamma_nonzero = [
        [(a, b, gamma[i][a][b]) for a in range(d) for b in range(d) if gamma[i][a][b]]
        for i in range(d)
    ]
    rng = range(d)
    for i in rng:
        target = nabla[i]
        for a, b, v in gamma_nonzero[i]:
            for j in rng:
                for k in rng:
                    row = riem[j][k]
                    tij = target[j][k]
                    for l in rng:
                        # p = a contracted against gamma[i][a][b]
                        if row[l][a]:
                            tij[l][b] += row[l][a] * v
            for k in rng:
                for l in rng:
                    src = riem[b][k][l]
                    dst = target[a][k][l]
                    for m in rng:
                        if src[m]:
                            dst[m] -= v * src[m]
            for j in rng:
                for l in rng:
                    src = riem[j][b][l]
                    dst = target[j][a][l]
                    for m in rng:
                        if src[m]:
                            dst[m] -= v * src[m]
            for j in rng:
                for k in rng:
                    src = riem[j][k][b]
                    dst = target[j][k][a]
                    for m in rng:
                        if src[m]:
                            dst[m] -= v * src[m]

    bianchi_second = True
    for i, j, k in product(rng, repeat=3):
        if not bianchi_second:
            break
        a, b, c3 = nabla[i][j][k], nabla[j][k][i], nabla[k][i][j]
        for l, m in product(rng, repeat=2):
            if a[l][m] + b[l][m] + c3[l][m] != 0:
                bianchi_second = False
                break

    return {
        "torsion_free": torsion_free,
        "metric_compatible": metric_compatible,
        "antisym_first_pair": antisym_first,
        "antisym_second_pair": antisym_second,
        "pair_symmetry": pair_symmetry,
        "bianchi_first": bianchi_first,
        "bianchi_second": bianchi_second,
    }


def constant_curvature_form(spec: ManifoldSpec, kappa: Fraction) -> FrameTensor:
    """Closed-form lowered curvature of a constant-curvature metric.

    Rl(X,Y,Z,W) = kappa [g(Y,Z) g(X,W) - g(X,Z) g(Y,W)].  Used as an
    independent oracle against the computed tensor.
    """
    d = spec.dim
    g = spec.metric
    kappa = Fraction(kappa)
    entries = []
    for i, j, k, l in product(range(d), repeat=4):
        entries.append(kappa * (g[j][k] * g[i][l] - g[i][k] * g[j][l]))
    return FrameTensor(d, 4, entries)


def lowered_tensor(bundle: CurvatureBundle) -> FrameTensor:
    return from_rational_rank4(bundle.spec.dim, bundle.riemann_lowered)
