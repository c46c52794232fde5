"""Linear-time recognition of equimatchable split graphs.

A split graph partitions into a clique plus an independent set; it is
equimatchable when every maximal matching has the same size. ``recognize``
decides membership in O(n + m) from the degree ordering; the rest of the
package provides brute-force oracles, constructive generators for the five
degree profiles, and verification drivers.
"""

from .errors import GraphParseError, IsolatedVertexError, OracleLimitError
from .families import (
    FamilySpec,
    gen_complete,
    gen_family_iii,
    gen_family_iv,
    gen_family_v,
    gen_random_graph,
    gen_random_split,
    gen_star,
    mutate_edge,
)
from .graph import (
    DegreeStats,
    Graph,
    compute_degree_stats,
    parse_graph,
    serialize_graph,
    strip_isolated,
)
from .matchings import (
    Matching,
    enumerate_maximal_matchings,
    find_witness_matchings,
    is_equimatchable_oracle,
    max_independent_crossing_edges,
    maximal_matching_sizes,
)
from .recognition import (
    CONDITION_TAGS,
    ConditionProfile,
    RecognitionResult,
    check_characterization,
    decide,
    recognize,
    small_case,
)
from .split import (
    SplitPartition,
    find_near_star_pair,
    is_split_oracle,
    normalize_partition,
    split_partition,
)

__version__ = "0.1.0"

__all__ = [
    "CONDITION_TAGS",
    "ConditionProfile",
    "DegreeStats",
    "FamilySpec",
    "Graph",
    "GraphParseError",
    "IsolatedVertexError",
    "Matching",
    "OracleLimitError",
    "RecognitionResult",
    "SplitPartition",
    "check_characterization",
    "compute_degree_stats",
    "decide",
    "enumerate_maximal_matchings",
    "find_near_star_pair",
    "find_witness_matchings",
    "gen_complete",
    "gen_family_iii",
    "gen_family_iv",
    "gen_family_v",
    "gen_random_graph",
    "gen_random_split",
    "gen_star",
    "is_equimatchable_oracle",
    "is_split_oracle",
    "max_independent_crossing_edges",
    "maximal_matching_sizes",
    "mutate_edge",
    "normalize_partition",
    "parse_graph",
    "recognize",
    "serialize_graph",
    "small_case",
    "split_partition",
    "strip_isolated",
]
