"""Circumcenters of point sets and circumcentric directions of finitely generated cones."""

__version__ = "0.1.0"

from .circumcenter import (
    Check,
    CircumcenterResult,
    EqualNormSet,
    check_center_inner_products,
    circumcenter,
    circumcenter_equal_norm,
    perturbation_radius,
)
from .cone import (
    CircumDirection,
    ConeGenerators,
    ConicBase,
    ConicCertificate,
    PointedCertificate,
    circumcentric_direction,
    conic_base,
    conic_membership,
    dual_membership,
    interiorness_check,
    is_pointed,
    linearly_independent,
    normalize_generators,
    polar_membership,
    positively_linearly_independent,
)
from .errors import (
    CircumconeError,
    DimensionError,
    InfeasiblePointError,
    InvariantError,
    ResamplingError,
)
from .feasible import (
    ActiveSet,
    AffineComponent,
    ConvexSystem,
    DirectionValidation,
    FunctionComponent,
    Polyhedron,
    QuadraticComponent,
    StepReport,
    active_set_convex,
    active_set_poly,
    circum_direction_convex,
    circum_direction_poly,
    max_feasible_step,
    validate_direction_convex,
)
from .linalg import (
    DEFAULT_TOL,
    GramSystem,
    SolveDiagnostics,
    gram,
    project_onto_affine_hull,
    solve_psd_min_norm,
)
