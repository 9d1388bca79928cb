"""Score sequences of interval tournaments.

Decide whether an integer sequence is the score sequence of a tournament
whose pair totals lie in a window [a, b], compute the extremal parameters
e (smallest max entry), f (smallest max pair total), g (largest min pair
total), and construct witness matrices including a minimax-balanced one.
"""

from .analysis import (
    LossTable,
    bound_e,
    extremal_summary,
    f_search_interval,
    interval_test,
    loss_table,
    max_g,
    max_g_by_search,
    min_f,
    min_f_closed_form,
)
from .construct import (
    SlicingState,
    mini_max,
    naive_construct,
    pigeonhole_construct,
    score_slicing,
)
from .core import (
    ExtremalSummary,
    InfeasiblePrefix,
    InputTooShort,
    IntervalParams,
    MatrixStats,
    NegativeScore,
    OracleBudgetExceeded,
    PointMatrix,
    PrefixTables,
    RealizationReport,
    ScoreSequence,
    ShapeMismatch,
    TournamentError,
    ceil_div,
    matrix_stats,
    normalize_sequence,
    prefix_tables,
    verify_realization,
)
from .oracle import (
    OracleResult,
    SweepReport,
    enumerate_extremes,
    landau_test,
    moon_test,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ExtremalSummary",
    "InfeasiblePrefix",
    "InputTooShort",
    "IntervalParams",
    "LossTable",
    "MatrixStats",
    "NegativeScore",
    "OracleBudgetExceeded",
    "OracleResult",
    "PointMatrix",
    "PrefixTables",
    "RealizationReport",
    "ScoreSequence",
    "ShapeMismatch",
    "SlicingState",
    "SweepReport",
    "TournamentError",
    "__version__",
    "bound_e",
    "ceil_div",
    "enumerate_extremes",
    "extremal_summary",
    "f_search_interval",
    "interval_test",
    "landau_test",
    "loss_table",
    "matrix_stats",
    "max_g",
    "max_g_by_search",
    "min_f",
    "min_f_closed_form",
    "mini_max",
    "moon_test",
    "naive_construct",
    "normalize_sequence",
    "pigeonhole_construct",
    "prefix_tables",
    "score_slicing",
    "sweep",
    "verify_realization",
]
