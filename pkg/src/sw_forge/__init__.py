"""Steiner-Wiener index toolkit.

Exact SW_k computation, nested-star realization of target values,
exhaustive exception scanning, and brute-force counters for the associated
binomial-coefficient representation problems.
"""

from .binomial import (
    CountSpec,
    LocalCountSpec,
    ProbeRow,
    Representation,
    asymptotic_probe,
    count_local,
    count_representations,
    default_upper_bound,
    represent,
)
from .errors import (
    BadKError,
    BadSpecError,
    DisconnectedError,
    EmptyTerminalsError,
    IncompleteCoverageError,
    IndexOutOfRangeError,
    InfeasibleWidthError,
    LoopEdgeError,
    MalformedGraph6Error,
    NotPrimeError,
    SwForgeError,
    TooLargeError,
    TooLargeModulusError,
)
from .graph import (
    Graph,
    encode_graph6,
    from_edge_list,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_dot,
    to_edge_list,
)
from .index import (
    nested_star_closed_form,
    star_closed_form,
    steiner_wiener,
    steiner_wiener_sweep,
)
from .inverse import InverseCertificate, feasible_interval, invert, verify
from .scanner import (
    ScanReport,
    canonical_form,
    enumerate_connected,
    min_sw_lower_bound,
    scan,
    write_corpus,
)
from .stars import NestedStarSpec, build, hub_deficit_count
from .steiner import all_pairs_distances, steiner_distance, steiner_distance_oracle

__version__ = "0.1.0"

__all__ = [
    "BadKError",
    "BadSpecError",
    "CountSpec",
    "DisconnectedError",
    "EmptyTerminalsError",
    "Graph",
    "IncompleteCoverageError",
    "IndexOutOfRangeError",
    "InfeasibleWidthError",
    "InverseCertificate",
    "LocalCountSpec",
    "LoopEdgeError",
    "MalformedGraph6Error",
    "NestedStarSpec",
    "NotPrimeError",
    "ProbeRow",
    "Representation",
    "ScanReport",
    "SwForgeError",
    "TooLargeError",
    "TooLargeModulusError",
    "all_pairs_distances",
    "asymptotic_probe",
    "build",
    "canonical_form",
    "count_local",
    "count_representations",
    "default_upper_bound",
    "encode_graph6",
    "enumerate_connected",
    "feasible_interval",
    "from_edge_list",
    "hub_deficit_count",
    "invert",
    "is_connected",
    "min_sw_lower_bound",
    "nested_star_closed_form",
    "parse_edge_list",
    "parse_graph6",
    "represent",
    "scan",
    "star_closed_form",
    "steiner_distance",
    "steiner_distance_oracle",
    "steiner_wiener",
    "steiner_wiener_sweep",
    "to_dot",
    "to_edge_list",
    "verify",
    "write_corpus",
]
