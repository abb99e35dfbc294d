"""Graph embeddings as gems: partial duality, Petrie duality and closed 2-cell tests."""

from .c2c import (
    BadPair,
    C2CResult,
    ObstructionReport,
    Verdict,
    bad_pairs,
    is_closed_2cell,
    obstruction_persists,
    separating_features,
)
from .conditions import (
    ConditionVerdict,
    CornerTable,
    SeparationGraph,
    check_GC,
    check_LC,
    check_MC,
    conditions_predict_c2c,
    corner_table,
    separation_graph,
)
from .cuts import EdgeCut, edge_cuts_of_size_le
from .duality import (
    EdgeSubset,
    Jewel,
    PartialDualTrace,
    TwistSpec,
    jewel_from_gem,
    partial_dual,
    partial_petrie,
    project_walk,
    trace_partial_dual,
    twist,
)
from .gem import (
    EmbeddingSummary,
    Gem,
    GemError,
    InvalidGemError,
    ValidationReport,
    bigons,
    gem_from_rotation,
    is_bipartite,
    is_isomorphic,
    rotation_from_gem,
    summary,
    validate_gem,
)
from .generators import gen_bouquet, gen_diagonal_grid, gen_diamond_band, gen_k4, gen_theta, gen_toroidal_grid
from .io import export_dot, format_rotation, parse_gem, parse_rotation, serialize_gem
from .rotation import RotationEmbedding, RotationError, canonical_rotation
from .search import SearchReport, find_c2c_duals, oracle_equivalence_sweep

__version__ = "0.1.0"
