"""Convex 3-polytopes, planar nets via dual spanning trees, and the
net-matching game engine built on top of them."""

from .geometry import (
    DEFAULT_TOL,
    DegenerateInput,
    DegeneratePolygon,
    EdgeNotOnPlanes,
    GeometryError,
    HullMesh,
    OriginNotInterior,
    PlanarIsometry,
    RigidMotion3,
    ToleranceConfig,
    convex_hull_3,
    hinge_rotation_to_plane,
    polar_dual,
    polygon_area,
    polygons_overlap,
)
from .polytope import (
    DualGraph,
    FacetColor,
    NonPlanarFacet,
    NotConvex,
    ParseError,
    Polytope3,
    UnknownName,
    VertexEdgeGraph,
    gonality_color,
    load_off,
    write_off,
)
from .catalog import (
    ARCHIMEDEAN_NAMES,
    CATALAN_NAMES,
    CATALOG_NAMES,
    CURATED_TRIPLETS,
    PLATONIC_NAMES,
    builtin_catalog,
    catalog_solid,
    curated_triplets,
    platonic_solid,
)
from .trees import (
    CutTree,
    DisconnectedGraph,
    DualSpanningTree,
    NotASpanningTree,
    TooManyTrees,
    all_spanning_trees,
    complement_tree,
    random_dual_tree,
    random_spanning_tree,
    spanning_tree_count,
)
from .unfold import (
    NoNetFound,
    PlanarNet,
    congruent_nets,
    find_net,
    is_injective,
    net_invariant_report,
    overlapping_unfolding_example,
    unfold,
)
from .svg import NonInjectiveNet, net_to_svg
from .random_polytopes import (
    DegenerateSample,
    SimplicityFailed,
    is_simple,
    random_subpolytope,
    random_tangent_polytope,
    sample_sphere,
)
from .game import (
    GameConfig,
    GameState,
    HighScoreStore,
    NotAPermutation,
    PoolTooSmall,
    Round,
    ScoreRecord,
    level_pool,
    new_game,
    score_round,
    scoring_fixture,
    update_high_score,
)
from .assets import (
    NetAssetBundle,
    NetSearchFailed,
    dumps_canonical,
    precompute_assets,
    verify_assets,
)

__version__ = "0.1.0"
