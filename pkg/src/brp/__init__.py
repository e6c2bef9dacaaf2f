"""Multipath broadcast routing on outerplanar networks.

Find a root and a rooted acyclic orientation of a weighted graph that
maximise the weighted packing of rooted arborescences, and return the
packing itself.
"""

from .errors import (
    BoundExceeded,
    BRPError,
    DisconnectedGraphError,
    ForcedContradiction,
    GraphError,
    InvariantViolation,
    NotOuterplanarError,
    NotTwoConnectedError,
    UndefinedValueError,
)
from .graph import (
    Edge,
    Orientation,
    WeightedGraph,
    biconnected_components,
    build_graph,
    format_weight,
    is_r_acyclic_orientation,
    min_trivial_r_cut,
    parse_weight,
)
from .oracle import oracle_k
from .solver import ArborescencePacking, Solution, pack_arborescences, solve_brp, solve_rbrp

__version__ = "0.1.0"
