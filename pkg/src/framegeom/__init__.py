"""framegeom: exact tensor calculus on homogeneous almost-contact frames.

The package represents a manifold by constant frame data (structure
constants, frame metric, almost-contact structure), computes its curvature
hierarchy in exact rational arithmetic, analyzes vector fields with
warped-polynomial coefficients, and solves or verifies the three supported
soliton equations together with a matrix of structural theorem checks.

Typical use::

    from fractions import Fraction
    import framegeom as fg

    parsed = fg.catalog_load("kenmotsu-example-5d")
    bundle = fg.curvature_bundle(parsed.spec)
    problem = fg.SolitonProblem(fg.SolitonKind.STAR_RB, parsed.fields["z"], Fraction(1))
    report = fg.soliton_solve_trace(parsed.spec, bundle, problem)
    assert report.solved["Omega"] == Fraction(24, 5)
"""

__version__ = "0.1.0"

from .catalog import FIXTURES, catalog_get, catalog_ids, catalog_load, kenmotsu_catalog_ids
from .curvature import (
    ConnectionCoeffs,
    CurvatureBundle,
    QResult,
    W2Result,
    constant_curvature_form,
    curvature_bundle,
    curvature_checks,
    einstein_classify,
    levi_civita,
    lower_riemann,
    lowered_tensor,
    q_flat_psi,
    q_tensor,
    ricci_and_scalar,
    riemann,
    star_ricci_direct,
    star_ricci_kenmotsu,
    w2_flat_forces_einstein,
    w2_tensor,
)
from .documents import ParsedManifold, manifold_from_document, parse_manifold, serialize_manifold
from .errors import (
    DimensionMismatch,
    DocumentError,
    GeometryError,
    RingError,
    StructureError,
)
from .fields import (
    ConformalKillingReport,
    TorseFormingReport,
    VectorField,
    conformal_killing_classify,
    covariant_derivative,
    divergence,
    lie_derivative_metric,
    torse_forming_decompose,
    xi_field,
)
from .manifold import (
    AxiomCheck,
    ManifoldSpec,
    ValidationReport,
    check_structure,
    validate_almost_contact,
    validate_kenmotsu,
)
from .ring import (
    Rational,
    RingElement,
    apply_derivation,
    format_rational,
    parse_rational,
    parse_ring_element,
)
from .solitons import (
    SolitonKind,
    SolitonProblem,
    SolitonReport,
    classify_soliton,
    decompose_g_eta,
    soliton_left_side,
    soliton_solve_trace,
    soliton_verify,
)
from .tensors import FrameTensor, eta_outer, metric_tensor
from .theorems import THEOREM_IDS, TheoremResult, theorem_suite
