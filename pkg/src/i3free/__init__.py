"""Exact enumeration and structure analysis of digraphs with no independent triple.

A digraph here is irreflexive and antisymmetric; it is "valid" for this
package when every three vertices span at least one arc.  The package
counts such digraphs exactly, classifies them by the shape of their
non-neighbourhoods, splits them into two spanning tournaments when
possible, builds amalgamations, and samples them uniformly.
"""
from ._backend import BACKEND
from .census import (
    BoundReport,
    CensusCounts,
    census_direct,
    census_graphs,
    code_of_digraph,
    count_via_graphs,
    digraph_of_code,
    growth_check,
    lemma_bound_report,
    read_census_csv,
    upsert_census_csv,
)
from .classify import (
    CONSTANTS,
    BoundConstants,
    ClassFlags,
    a_witness,
    b_witness,
    c_witness,
    classify,
    has_pinwheel,
    in_A,
    in_B,
    in_C,
    log_floor,
)
from .core import (
    VERTEX_CAP,
    Digraph,
    NonAdjacencyGraph,
    VertexSet,
    build_digraph,
    delta_set,
    delta_v,
    is_bitournament,
    is_I3_free,
    is_tournament,
    non_adjacency_graph,
)
from .dgf import DgfDocument, emit_dgf, emit_dgf_inline, parse_dgf
from .errors import (
    CapExceeded,
    ConstructionDefect,
    DomainError,
    EmbeddingError,
    Error,
    InputError,
    InternalError,
    InvalidArc,
    NoNonArc,
    ParseError,
    PreconditionViolated,
    RangeError,
)
from .fraisse import (
    ArraySlice,
    Embedding,
    amalgamate,
    joint_embed,
    tp2_slice,
    validate_embedding,
)
from .partition import PartitionWitness, bipartition, constructive_partition
from .sample import (
    RNG_ALGORITHM,
    ChainState,
    FractionEstimate,
    estimate_fraction,
    estimate_fraction_rejection,
    mcmc_step,
    new_chain,
    rejection_sample,
    spawn_seeds,
    transitive_tournament,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "VERTEX_CAP",
    "CONSTANTS",
    "RNG_ALGORITHM",
    "__version__",
    "ArraySlice",
    "BoundConstants",
    "BoundReport",
    "CapExceeded",
    "CensusCounts",
    "ChainState",
    "ClassFlags",
    "ConstructionDefect",
    "DgfDocument",
    "Digraph",
    "DomainError",
    "EmbeddingError",
    "Embedding",
    "Error",
    "FractionEstimate",
    "InputError",
    "InternalError",
    "InvalidArc",
    "NoNonArc",
    "NonAdjacencyGraph",
    "ParseError",
    "PartitionWitness",
    "PreconditionViolated",
    "RangeError",
    "VertexSet",
    "a_witness",
    "amalgamate",
    "b_witness",
    "bipartition",
    "build_digraph",
    "c_witness",
    "census_direct",
    "census_graphs",
    "classify",
    "code_of_digraph",
    "constructive_partition",
    "count_via_graphs",
    "delta_set",
    "delta_v",
    "digraph_of_code",
    "emit_dgf",
    "emit_dgf_inline",
    "estimate_fraction",
    "estimate_fraction_rejection",
    "growth_check",
    "has_pinwheel",
    "in_A",
    "in_B",
    "in_C",
    "is_I3_free",
    "is_bitournament",
    "is_tournament",
    "joint_embed",
    "lemma_bound_report",
    "log_floor",
    "mcmc_step",
    "new_chain",
    "non_adjacency_graph",
    "parse_dgf",
    "rejection_sample",
    "read_census_csv",
    "spawn_seeds",
    "tp2_slice",
    "transitive_tournament",
    "upsert_census_csv",
    "validate_embedding",
]
