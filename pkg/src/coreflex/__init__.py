"""Coreflexive vertex sets of digraphs and what they reveal.

Coresets partition the vertex set of any digraph.  From them this package
builds the core decomposition, recognizes line digraphs and nth-order line
digraphs (reconstructing a root), and iterates the coreset digraph to its
fixpoint.
"""

from coreflex.coreset_digraph import (
    CoresetDigraph,
    FixpointShape,
    Shape,
    YSequence,
    classify_fixpoint,
    complexity_index,
    coreset_digraph,
    iterate_coreset_digraph,
)
from coreflex.coresets import (
    BlockedAdjacency,
    CoreDecomposition,
    CorePart,
    CoresetPartition,
    blocked_adjacency,
    core_decomposition,
    coreset_closure,
    coreset_partition,
    matrix_coreset_check,
    successor_partition,
)
from coreflex.digraph import (
    Count,
    Digraph,
    MultiDigraph,
    SaturatingCountMatrix,
    alpha,
    beta,
    intersection_digraph,
    iterated_line_digraph,
    line_digraph,
    power_digraph,
    reverse,
    walk_counts,
)
from coreflex.edgelist import parse_edge_list, render_dot, render_edge_list
from coreflex.errors import (
    ConvergenceError,
    CoreflexError,
    DomainError,
    InstanceTooLarge,
    NotALineDigraph,
    PreconditionError,
)
from coreflex.isomorphism import find_isomorphism, isomorphic
from coreflex.kernels import BACKEND
from coreflex.recognition import (
    LineRecognitionResult,
    NthOrderReport,
    geller_harary_partitions,
    i_uniqueness,
    is_line_digraph,
    is_nth_order_line_digraph,
    lift_coreset,
    nth_order_coresets,
    richards_check,
    root_digraph,
)

__version__ = "0.1.0"
