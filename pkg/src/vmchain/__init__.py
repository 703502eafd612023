"""Vertex-minor algebra, rank-connectivity predicates and chain reductions on small graphs.

Vertex sets are plain ``int`` bitmasks throughout (bit ``v`` set means vertex
``v`` is in the set).
"""

from __future__ import annotations

from .connectivity import (
    ConnectivityVerdict,
    is_internally_3rc,
    is_k_rank_connected,
    is_prime,
    is_sequential,
    is_sequentially_3rc,
    is_weakly_3rc,
)
from .cutrank import Gf2Matrix, cross_rank, cut_rank, gf2_rank, reduced_cut_rank
from .errors import (
    ArgumentError,
    GenerationError,
    GraphParseError,
    PreconditionError,
    ResourceLimitError,
    TheoremViolation,
    UnsupportedError,
    VmchainError,
)
from .formats import from_edgelist, from_graph6, to_edgelist, to_graph6
from .graph import (
    Graph,
    ReductionKind,
    bits,
    contract_vertex,
    delete_vertex,
    local_complement,
    local_equivalence_orbit,
    locally_equivalent,
    mask_of,
    pivot,
)
from .reducer import Chain, ReductionStep, build_chain, reduce_internal_triplet, reduce_prime, reduce_seq3rc
from .structures import (
    Quad,
    Triplet,
    find_quads,
    is_fully_closed,
    is_quad,
    is_triplet,
    make_triplet,
    maximal_sequential_set,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
