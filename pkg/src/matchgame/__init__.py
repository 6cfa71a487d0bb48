"""Matching game toolkit.

Round rules and exact adjudication, perfect-matching enumeration,
deterministic strategies with exact rational success, the parity-coloring
audit and the impossibility certificate for m >= 8, exhaustive and local
search over Bob tables, and an exact simulator of the entangled strategy
for power-of-two m.
"""

from .coloring import (
    Graph,
    ImpossibilityCertificate,
    StrategyAudit,
    audit_strategy,
    bob_edge_graph,
    components,
    count_colorings,
    cross_component_matching,
    distance,
    edge_parities_from_string,
    impossibility_certificate,
    strings_from_colorings,
)
from .errors import (
    BudgetExceededError,
    FormatError,
    MatchGameError,
    UnsupportedGameError,
    ValidationError,
)
from .game import (
    Answer,
    BitString,
    Edge,
    GameInstance,
    Question,
    dot,
    encode_index,
    wins_round,
)
from .matchings import (
    PerfectMatching,
    contains_edge,
    enumerate_matchings,
    matching_count,
    validate_matching,
)
from .quantum import (
    OutcomeDistribution,
    StateVector,
    joint_distribution,
    sample_round,
    shared_state,
    verify_always_wins,
)
from .search import (
    DEFAULT_BUDGET,
    alice_best_response,
    complete_anchor_strategy,
    exact_optimum,
    hill_climb,
)
from .strategies import (
    DeterministicStrategy,
    PartialStrategy,
    SuccessRatio,
    anchor_indices,
    anchor_strategy,
    find_counterexample,
    indicator_string,
    known_winning_strategy,
    success,
    verify_winning,
)
from .strategy_io import format_strategy, parse_strategy

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "BitString",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "DeterministicStrategy",
    "Edge",
    "FormatError",
    "GameInstance",
    "Graph",
    "ImpossibilityCertificate",
    "MatchGameError",
    "OutcomeDistribution",
    "PartialStrategy",
    "PerfectMatching",
    "Question",
    "StateVector",
    "StrategyAudit",
    "SuccessRatio",
    "UnsupportedGameError",
    "ValidationError",
    "alice_best_response",
    "anchor_indices",
    "anchor_strategy",
    "audit_strategy",
    "bob_edge_graph",
    "complete_anchor_strategy",
    "components",
    "contains_edge",
    "count_colorings",
    "cross_component_matching",
    "distance",
    "dot",
    "edge_parities_from_string",
    "encode_index",
    "enumerate_matchings",
    "exact_optimum",
    "find_counterexample",
    "format_strategy",
    "hill_climb",
    "impossibility_certificate",
    "indicator_string",
    "joint_distribution",
    "known_winning_strategy",
    "matching_count",
    "parse_strategy",
    "sample_round",
    "shared_state",
    "strings_from_colorings",
    "success",
    "validate_matching",
    "verify_always_wins",
    "verify_winning",
    "wins_round",
]
