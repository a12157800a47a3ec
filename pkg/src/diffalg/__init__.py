"""Exact symbolic computation in ordinary difference algebra: sparse
difference polynomials over Q and Q(x), Ritt-Wu characteristic sets,
dimension and order invariants, generic intersections, and difference
Chow forms."""

from .coeffs import RatFunc
from .errors import (
    ChainError,
    DiffAlgError,
    EliminationError,
    RankingError,
    UnitIdealError,
    VerificationError,
)
from .extension import ExtensionElement
from .poly import (
    DiffPoly,
    DiffVar,
    Monomial,
    denomination,
    is_transformally_homogeneous,
    main_var,
    order_stats,
    param_var,
    substitute,
    substitute_ratio,
)
from .ranking import Ranking, is_reduced, leader_parts
from .reduction import Chain, algebraic_prem, chain_stats, diff_prem, prolong
from .charset import (
    CharSetResult,
    char_set,
    dimension_polynomial,
    relative_order,
    sat_member,
)
from .elimination import TruncatedSystem, eliminate, minimal_eliminant, truncate
from .generic import (
    GenericDiffPoly,
    GenericHyperplane,
    GenericLinearTransform,
    apply_transform,
    generic_system_stats,
    intersect_generic,
    make_generic_poly,
    make_hyperplanes,
    make_linear_transform,
)
from .chow import (
    ChowData,
    RecoveredPoint,
    chow_form,
    chow_form_univariate,
    chow_ideal_member,
    difference_degree,
    euler_check,
    extend_charset,
    recover_point,
    transform_chow,
    vanishing_test,
    verify_block_symmetry,
    verify_order_profile,
)
from .parser import ParseError, parse_poly

__all__ = [
    "Chain",
    "CharSetResult",
    "ChainError",
    "ChowData",
    "DiffAlgError",
    "DiffPoly",
    "DiffVar",
    "EliminationError",
    "ExtensionElement",
    "GenericDiffPoly",
    "GenericHyperplane",
    "GenericLinearTransform",
    "Monomial",
    "ParseError",
    "Ranking",
    "RankingError",
    "RatFunc",
    "RecoveredPoint",
    "TruncatedSystem",
    "UnitIdealError",
    "VerificationError",
    "algebraic_prem",
    "apply_transform",
    "chain_stats",
    "char_set",
    "chow_form",
    "chow_form_univariate",
    "chow_ideal_member",
    "denomination",
    "diff_prem",
    "difference_degree",
    "dimension_polynomial",
    "eliminate",
    "euler_check",
    "extend_charset",
    "generic_system_stats",
    "intersect_generic",
    "is_reduced",
    "is_transformally_homogeneous",
    "leader_parts",
    "main_var",
    "make_generic_poly",
    "make_hyperplanes",
    "make_linear_transform",
    "minimal_eliminant",
    "order_stats",
    "param_var",
    "parse_poly",
    "prolong",
    "recover_point",
    "relative_order",
    "sat_member",
    "substitute",
    "substitute_ratio",
    "transform_chow",
    "truncate",
    "vanishing_test",
    "verify_block_symmetry",
    "verify_order_profile",
]
