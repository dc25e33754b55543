"""Deficiency analysis of signed graphs.

Exact exhaustive oracles for chromatic number and deficiency ranges, a
polynomial-time decision procedure for the maximum deficiency of 3-chromatic
signed graphs (with a stable-cover witness), and constructive switching
machinery.
"""

from .core import (
    Coloration,
    SignedGraph,
    TwoChromaticCase,
    build_graph,
    classify_two_chromatic,
    coloration_from_cover,
    covers_positive,
    deficiency,
    is_proper,
    is_stable,
    switch,
    switch_coloration,
)
from .maxdef import (
    ForcingGraph,
    MatchedState,
    MaxDefResult,
    NotBipartite,
    TraceEntry,
    build_forcing_graph,
    flatten,
    maxdef,
)
from .oracle import (
    DEFAULT_EXHAUSTIVE_BOUND,
    DEFAULT_PAIR_BOUND,
    DEFAULT_SWITCHING_BOUND,
    BoundExceededError,
    DeficiencyReport,
    NotThreeChromaticError,
    SwitchingReport,
    achieve_switching_deficiency,
    chromatic_number,
    deficiency_report,
    max_deficiency_3chromatic,
    recolor_lone_negative,
    stable_positive_cover,
    switching_report,
)
from .sgio import (
    SgParseError,
    export_dot,
    generate_general,
    generate_matched,
    parse_sg,
    serialize_sg,
)

__version__ = "0.1.0"

__all__ = [
    "SignedGraph",
    "Coloration",
    "TwoChromaticCase",
    "build_graph",
    "is_proper",
    "deficiency",
    "switch",
    "switch_coloration",
    "classify_two_chromatic",
    "coloration_from_cover",
    "is_stable",
    "covers_positive",
    "DeficiencyReport",
    "SwitchingReport",
    "BoundExceededError",
    "NotThreeChromaticError",
    "chromatic_number",
    "deficiency_report",
    "stable_positive_cover",
    "max_deficiency_3chromatic",
    "switching_report",
    "achieve_switching_deficiency",
    "recolor_lone_negative",
    "DEFAULT_EXHAUSTIVE_BOUND",
    "DEFAULT_SWITCHING_BOUND",
    "DEFAULT_PAIR_BOUND",
    "MatchedState",
    "ForcingGraph",
    "MaxDefResult",
    "NotBipartite",
    "TraceEntry",
    "flatten",
    "maxdef",
    "build_forcing_graph",
    "SgParseError",
    "parse_sg",
    "serialize_sg",
    "generate_matched",
    "generate_general",
    "export_dot",
]
