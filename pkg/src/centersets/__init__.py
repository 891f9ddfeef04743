"""Profile centers of connected graphs: computation, exhaustive enumeration,
per-class characterizations checked against brute force, and the associated
pattern-avoiding selection counts."""

from .classify import (
    Classification,
    classify,
    interior_vertices,
    is_balanced,
    is_block_graph,
    is_boundary,
    is_center_critical,
    is_center_critical_bruteforce,
    is_dominating,
    is_even,
    is_harmonic,
    is_self_centered,
    is_symmetric_even,
    is_uev,
    profile_eccentric_image,
    unique_eccentric_map,
)
from .counting import (
    COUNT_FUNCTIONS,
    center_number_formula,
    circular_no_alternate_pair,
    circular_no_three_consecutive,
    linear_no_alternate_pair,
    linear_no_three_consecutive,
    linear_no_two_consecutive,
    oracle_count,
)
from .errors import (
    BadParamsError,
    CenterSetError,
    DisconnectedError,
    EmptyProfileError,
    GenerationFailedError,
    InvalidEdgeError,
    NotBlockGraphError,
    NotDominatingError,
    NotSymmetricEvenError,
    NotUEVError,
    TooLargeError,
)
from .families import (
    CLASS_TAGS,
    ClassSpec,
    DualityReport,
    VerificationReport,
    compare_families,
    db_duality_check,
    dominating_profile_center,
    odd_cycle_is_center_set,
    predicted_block_graph,
    predicted_complete_bipartite,
    predicted_complete_minus_edge,
    predicted_family,
    predicted_wheel,
    symmetric_even_is_center_set,
    verify_class,
)
from .graph import (
    BlockDecomposition,
    DistanceMatrix,
    Graph,
    block_decomposition,
    center,
    closed_neighborhood,
    diameter,
    distances,
    eccentric_vertices,
    eccentricity,
    format_edge_list,
    parse_edge_list,
    radius,
)
from .profiles import (
    DEFAULT_MAX_N,
    CenterSetFamily,
    center_number,
    enumerate_center_sets,
    is_center_set,
    profile_center,
    profile_eccentricity,
)

__version__ = "0.1.0"
