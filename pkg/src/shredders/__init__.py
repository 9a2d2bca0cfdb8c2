"""Listing all k-shredders of a k-connected graph and finding a
most-shattering minimum vertex cut."""
from __future__ import annotations

from .brute import brute_most_shattering, brute_shredders, brute_vertex_connectivity
from .driver import list_all, list_balanced, list_unbalanced, most_shattering
from .errors import (
    BadParamsError,
    CutSmallerThanK,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    GraphError,
    MalformedTupleError,
    NotASeparatorError,
    PreconditionError,
    QueriedFailedVertexError,
    SelfLoopError,
    TooLargeError,
    VertexRangeError,
)
from .generators import gen
from .graph import (
    Graph,
    Partition,
    build_graph,
    components,
    format_graph_text,
    min_vertex_cut,
    parse_graph_text,
    partition_of,
    sample_edge,
    sparsify,
    vertex_connectivity,
    volume,
)
from .local_flow import grow_local_paths
from .local_listing import CaptureTuple, LocalResult, check_capture, local_list
from .oracle import DfsTree, FailureOracle
from .paths import (
    Bridge,
    Candidate,
    PathSystem,
    as_candidate,
    bridges_of,
    openly_disjoint_paths,
    prune_candidates,
    shredders_between,
    straddles,
)
from .records import MostShatteringResult, SamplingConfig, ShredderRecord
from .resolution import (
    UnverifiedRecord,
    count_low_degree_components,
    high_degree_extract,
    low_degree_check,
    volume_checksum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
