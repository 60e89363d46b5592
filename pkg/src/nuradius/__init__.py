"""Numerical radius, Birkhoff-James orthogonality and operator smoothness
on finite-dimensional real polyhedral Banach spaces."""

from .errors import (
    DegenerateBall,
    DegenerateRecovery,
    DimensionMismatch,
    EnumerationTooLarge,
    InconsistentOracle,
    NotUnitVector,
    NuRadiusError,
    ZeroDirection,
    ZeroOperator,
    ZeroVector,
)
from .fixtures import fixture_operator, fixture_space, fixtures
from .kernels import BACKEND
from .lp import LpSpace, lp_numerical_radius_estimate, lp_support_functional, make_oracle, recover_entries
from .operators import (
    AttainmentReport,
    ExtremePair,
    OperatorMatrix,
    Witness,
    extreme_pairs,
    numerical_radius,
    operator_norm,
    w_definiteness_check,
)
from .orthogonality import (
    LambdaProfile,
    OrthogonalityCertificate,
    d_set,
    is_operator_orthogonal,
    is_w_orthogonal,
    lambda_profile,
    lambda_profile_min,
    one_point_orthogonal,
)
from .smoothness import (
    SmoothnessReport,
    classify,
    is_nu_smooth,
    is_operator_smooth,
    nu_smooth_by_definition,
)
from .space import (
    DualPair,
    PolyhedralSpace,
    ValidationReport,
    builtin_space,
    dual_from_vertices,
    is_smooth_point,
    l1,
    linf,
    norm,
    support_indices,
    support_set,
    validate,
)

__version__ = "0.1.0"
