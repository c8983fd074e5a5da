"""Algebraic shifting of simplicial complexes over prime fields.

Exact exterior and symmetric shifting, combinatorial shifting moves,
squeezed balls and spheres, strong edge decomposability, strong
Lefschetz checks, and verification suites for the identities tying
them together.
"""

from .complexes import (
    EMPTY_COMPLEX,
    SimplicialComplex,
    cone,
    cyclic_boundary,
    full_simplex,
    is_shifted,
    join,
    mask_of,
    simplex_boundary,
    verts_of,
)
from .delta import (
    build_delta,
    build_delta_on,
    contained_in_delta,
    delta_outlier,
    is_admissible,
)
from .errors import (
    DegreeBoundTooSmall,
    DimensionMismatch,
    FaceNotInComplex,
    GinUnavailable,
    HypothesesViolated,
    IdentityViolated,
    InvalidOrderIdeal,
    InvalidParameters,
    LinkConditionViolated,
    NotAPseudomanifoldWithBoundary,
    RandomnessSuspect,
    ShiftLabError,
    VertexNotPresent,
)
from .ideals import MonomialIdeal, exterior_face_ideal, stanley_reisner_ideal
from .lefschetz import (
    ArtinianProfile,
    SlpResult,
    WiebeCase,
    artinian_profile,
    check_slp_direct,
    check_slp_via_shift,
    is_cm_via_shift,
    ring_slp,
    wiebe_spotcheck,
)
from .modp import DEFAULT_PRIME, derive_seeds
from .moves import (
    contraction,
    decompose_shift,
    link,
    link_condition,
    link_condition_via_ideal,
    shift_ij,
    stellar_subdivision,
)
from .randomgen import (
    random_complex,
    random_pure_shifted_complex,
    random_subcomplex,
)
from .sed import SedWitness, h_conditions, is_sed, verify_witness
from .shifting import (
    ElementaryInitialIdeal,
    ShiftReport,
    exterior_shift,
    gin_polynomial,
    gin_with_extra_variables,
    initial_ideal_of_elementary_map,
    nongeneric_shift,
    shift_of_cone,
    symmetric_shift,
)
from .squeezed import (
    RealizedSqueezed,
    ball_boundary,
    ball_h_from_ideal,
    enumerate_shifted_order_ideals,
    extract_l_ideal,
    extract_u_ideal,
    facets_from_l,
    hat_complex,
    l_from_u,
    predicted_shift_from_u,
    realize_squeezed,
    split_order_ideal,
    sphere_h_from_ideal,
    squeezed_ball,
    squeezed_sphere,
    tilde_complex,
    validate_order_ideal,
)
from .verify import SUITES, VerifyInstance, VerifyReport, run_suite

__version__ = "0.1.0"
