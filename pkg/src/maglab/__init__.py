"""Length-graded magnitude homology of finite metric spaces and graphs,
with exact rational arithmetic throughout.
"""

from .blocks import (
    BlockDecomposition,
    BlockSignature,
    FillContext,
    block_homology_breakdown,
    block_signature,
    decompose,
    fill_context,
    fill_cycle,
    homology_via_blocks,
)
from .chains import (
    ChainBasis,
    ChainVector,
    SimpleChain,
    SparseIntMatrix,
    boundary_matrix,
    boundary_of,
    chain_cap,
    enumerate_chains,
    face,
    is_cycle,
    iter_simple_chains,
    realizable_grades,
)
from .errors import MaglabError
from .generators import (
    CorpusEntry,
    c5_plus_two_edges,
    canonical_connected_graphs,
    complete_graph,
    connected_graphs,
    cycle_graph,
    has_cycle_of_length_at_least,
    k4_minus_edge,
    parse_points,
    path_graph,
    random_metric,
    random_rational_sample,
    rational_sample,
    standard_corpus,
    star_graph,
    tree_from_edges,
)
from .homology import (
    AbelianGroup,
    HomologyTable,
    h1_by_formula,
    homology_group,
    homology_table,
)
from .metric import (
    Graph,
    MetricSpace,
    StraightnessProfile,
    globally_straight,
    graph_to_metric,
    is_between,
    seq_length,
    straight_from_to,
    straightness_profile,
    strictly_between,
    validate_metric,
)
from .predicates import (
    BetweennessOrder,
    Hole,
    Verdict,
    betweenness_order,
    check_cut_free,
    check_geodetic,
    check_menger,
    check_star,
    check_straight_implies_global,
    check_strongly_menger,
    find_holes,
    iter_crooked_chains,
    iter_straight_chains,
)
from .snf import SmithForm, divisibility_chain, rational_rank, smith_normal_form
from .verify import VerifyOptions, run_claims

__version__ = "0.1.0"
