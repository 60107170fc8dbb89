"""Dicoloring toolkit for finite directed graphs.

Build digraphs, decompose them into blocks, recognize Gallai trees, and
color them: greedy list dicoloring for lists beyond the minimum degree,
anchored-forest coloring for degree-sized lists, good-cycle shifting for
Eulerian components, and a directed Brooks solver, all cross-checkable
against exact brute-force oracles at small scale.
"""

from .coloring import (
    AnchoredForest,
    brooks_dicolor,
    build_anchored_forest,
    color_non_eulerian,
    constant_lists,
    degree_list_dicolor,
    extend_along_good_cycle,
    find_monochromatic_dicycle,
    forest_list_dicolor,
    greedy_list_dicolor,
    max_degree_lists,
    min_degree_lists,
    normalize_lists,
    shift_color,
    verify_dicoloring,
    verify_list_dicoloring,
)
from .digraph import Digraph, UndirectedGraph, from_arcs, symmetrize
from .errors import (
    BadBlock,
    BlockedHypothesisFails,
    BudgetError,
    BudgetExceeded,
    ContainsForbiddenClique,
    DegreeTooHigh,
    DicolorError,
    DTooSmall,
    ExtensionFailed,
    GallaiComponent,
    HypothesisError,
    InvariantViolation,
    ListTooSmall,
    LoopArc,
    NoExtension,
    NotABlock,
    NotACycle,
    NotGallai,
    OutOfRange,
    ParseError,
    PartialColoring,
    RetryExhausted,
    UnanchoredComponent,
)
from .generators import (
    GenSpec,
    gen_bounded_degree_random,
    gen_cayley_ball,
    gen_complete_symmetric,
    gen_dicycle,
    gen_eulerian_regular,
    gen_gallai_tree,
    gen_symmetric_cycle,
    generate,
)
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    exact_dichromatic_number,
    exact_list_dicolorable,
    exhaustive_cycle_recolor,
    undirected_chromatic_number,
)
from .structure import (
    BlockClass,
    BlockDecomposition,
    BlockKind,
    block_decomposition,
    canonical_cycle,
    classify_block,
    digon_graph,
    edge_deleted_forest_graph,
    find_complete_symmetric_subgraph,
    find_good_cycle,
    is_biconnected_set,
    is_gallai_tree,
    is_good_cycle,
)

__version__ = "0.1.0"
