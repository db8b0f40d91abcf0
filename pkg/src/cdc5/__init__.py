"""Search and verification engine for 5-element cycle double covers of
cubic graphs containing a prescribed circuit."""

from .certificates import Certificate, build_certificate, verify_certificate
from .cover import (
    Cdc,
    CdcReport,
    contains_element_superset,
    extend_to_cdc,
    extract_witness,
    four_cdc_containing,
    verify_cdc,
)
from .cyclespace import (
    AffineSolution,
    CycleBasis,
    coordinates_of,
    cycle_space_basis,
    edge_set_connected,
    enumerate_circuits,
    enumerate_even_subgraphs,
    is_circuit,
    is_even_subgraph,
    solve_affine,
    sym_diff,
)
from .errors import (
    CapacityError,
    ConditionError,
    FlowMissingError,
    Graph6Error,
    InvariantViolationError,
    PreconditionError,
    UnsupportedFormatError,
)
from .flows import (
    Flow4,
    cdc_to_flow,
    coloring_to_flow,
    find_nz4flow,
    has_nz4flow,
    lift_flow,
    three_edge_color,
    verify_flow,
)
from .graphs import (
    EdgeDeletion,
    EdgeSet,
    MultiGraph,
    SuppressionMap,
    bridges,
    components,
    delete_edges,
    is_matching,
    parse_graph6,
    petersen_graph,
    suppress_degree2,
    write_graph6,
)
from .oracle import brute_force_cdc
from .search import (
    CircuitOutcome,
    FlowCache,
    SearchOptions,
    ShortcutEntry,
    ShortcutReport,
    SweepReport,
    circuit_sweep,
    find_5cdc_containing,
    has_5cdc,
    petersen_shortcut_check,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSolution",
    "CapacityError",
    "Cdc",
    "CdcReport",
    "Certificate",
    "CircuitOutcome",
    "ConditionError",
    "CycleBasis",
    "EdgeDeletion",
    "EdgeSet",
    "Flow4",
    "FlowCache",
    "FlowMissingError",
    "Graph6Error",
    "InvariantViolationError",
    "MultiGraph",
    "PreconditionError",
    "SearchOptions",
    "ShortcutEntry",
    "ShortcutReport",
    "SuppressionMap",
    "SweepReport",
    "UnsupportedFormatError",
    "bridges",
    "brute_force_cdc",
    "build_certificate",
    "cdc_to_flow",
    "circuit_sweep",
    "coloring_to_flow",
    "components",
    "contains_element_superset",
    "coordinates_of",
    "cycle_space_basis",
    "delete_edges",
    "edge_set_connected",
    "enumerate_circuits",
    "enumerate_even_subgraphs",
    "extend_to_cdc",
    "extract_witness",
    "find_5cdc_containing",
    "find_nz4flow",
    "four_cdc_containing",
    "has_5cdc",
    "has_nz4flow",
    "is_circuit",
    "is_even_subgraph",
    "is_matching",
    "lift_flow",
    "parse_graph6",
    "petersen_graph",
    "petersen_shortcut_check",
    "solve_affine",
    "suppress_degree2",
    "sym_diff",
    "three_edge_color",
    "verify_cdc",
    "verify_certificate",
    "verify_flow",
    "write_graph6",
]
