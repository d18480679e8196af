"""Labeled plane trees, their canonical involution, and rooted planar maps."""

from .bijection import map_to_tree, tree_to_map, witness_noncorrespondence
from .fixed_points import (
    F0,
    F1,
    F2,
    FixedPointStructure,
    build_f1,
    build_f2,
    classify,
    count_fixed,
    enumerate_fixed,
    is_fixed,
    rebuild,
)
from .involution import check_right_decomposition_image, check_stat_swap, h
from .maps import (
    CanonicalMapCode,
    RootedMap,
    build_map,
    canonical_code,
    dual,
    face_permutation,
    faces,
    is_nonseparable,
    is_self_dual,
    is_valid_map,
    map_from_json,
    map_to_json,
    relabel,
    root_face_degree,
    root_vertex_degree,
    validate_map,
    vertices,
)
from .series import (
    DEFAULT_CONVENTION,
    SeriesConvention,
    TruncatedBiSeries,
    first_nonzero,
    fixed_point_census,
    fixed_point_series,
    ternary_tree_series,
    tree_census,
    verify_a_algebraic,
    verify_ab_link,
    verify_b_quadratic,
    verify_ternary_link,
)
from .symmetry import (
    NonCrossingTree,
    count_symmetric,
    count_total,
    even_trees,
    noncrossing_trees,
    reflect_noncrossing,
    reflect_plane_tree,
    symmetric_count_formula,
    ternary_trees,
    total_count_formula,
)
from .tree import (
    BetaTree,
    Decomposable,
    GENERATION_BUDGET,
    Indecomposable,
    LEAF,
    SINGLE_EDGE,
    TreeParseError,
    TreeStats,
    attach_root,
    count_all,
    decompose,
    from_text,
    generate_all,
    glue,
    glue_components,
    is_valid,
    merge_at_root,
    right_decompose,
    rightmost_path,
    stats,
    to_text,
    validate,
)

__all__ = [
    "BetaTree",
    "CanonicalMapCode",
    "DEFAULT_CONVENTION",
    "Decomposable",
    "F0",
    "F1",
    "F2",
    "FixedPointStructure",
    "GENERATION_BUDGET",
    "Indecomposable",
    "LEAF",
    "NonCrossingTree",
    "RootedMap",
    "SINGLE_EDGE",
    "SeriesConvention",
    "TreeParseError",
    "TreeStats",
    "TruncatedBiSeries",
    "attach_root",
    "build_f1",
    "build_f2",
    "build_map",
    "canonical_code",
    "check_right_decomposition_image",
    "check_stat_swap",
    "classify",
    "count_all",
    "count_fixed",
    "count_symmetric",
    "count_total",
    "decompose",
    "dual",
    "enumerate_fixed",
    "even_trees",
    "face_permutation",
    "faces",
    "first_nonzero",
    "fixed_point_census",
    "fixed_point_series",
    "from_text",
    "generate_all",
    "glue",
    "glue_components",
    "h",
    "is_fixed",
    "is_nonseparable",
    "is_self_dual",
    "is_valid",
    "is_valid_map",
    "map_from_json",
    "map_to_json",
    "map_to_tree",
    "merge_at_root",
    "noncrossing_trees",
    "rebuild",
    "reflect_noncrossing",
    "reflect_plane_tree",
    "relabel",
    "right_decompose",
    "rightmost_path",
    "root_face_degree",
    "root_vertex_degree",
    "stats",
    "symmetric_count_formula",
    "ternary_tree_series",
    "ternary_trees",
    "to_text",
    "total_count_formula",
    "tree_census",
    "tree_to_map",
    "validate",
    "validate_map",
    "verify_a_algebraic",
    "verify_ab_link",
    "verify_b_quadratic",
    "verify_ternary_link",
    "vertices",
    "witness_noncorrespondence",
]
