"""scrollsec: exact secant-locus geometry of rational normal scrolls over finite fields."""

from .errors import (
    BudgetExceededError,
    CodimTooSmallError,
    DimensionMismatchError,
    EmptyTypeError,
    EvenCharacteristicError,
    NonPrimeError,
    PointOnVarietyError,
    ScrollParseError,
    ScrollsecError,
    UnclassifiableSignatureError,
    VertexPointError,
    ZeroMatrixError,
    ZeroVectorError,
)
from .exactfield import (
    FieldCtx,
    LinearSubspace,
    QForm,
    field_make,
    normalize_point,
    polarize,
    qform_rank,
    qform_restrict,
    row_reduce,
    span_points,
    subspace_contains,
    subspace_intersection,
)
from .scroll import (
    ScrollPoint,
    ScrollSpec,
    contains,
    embed,
    parse_scroll,
    quadric_generators,
    random_scroll_point,
    ruling_subspace,
    scroll_literal,
    scroll_new,
    special_subspaces,
    tangent_space,
)
from .secant import (
    SecantSample,
    SecantSignature,
    classify_signature,
    classify_with_data,
    fiber_secant_space,
    secant_cone_and_quadric,
    secant_locus_points,
    secant_pair_test,
)
from .strata import (
    MembershipReport,
    member_A,
    member_B,
    member_tangent,
    member_U,
    member_secant_variety,
    stratum_geometric,
)
from .delpezzo import (
    AtlasEntry,
    DepthReport,
    atlas_enumerate,
    depth_predict,
    is_del_pezzo,
    project,
    veronese_classify,
)
from .oracle import (
    brute_membership,
    brute_secant_locus,
    check_lift_equalities,
    enumerate_points,
)

__version__ = "0.1.0"
