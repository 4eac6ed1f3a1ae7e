"""Exact correspondence between linear programs and zero-sum games."""
from .assignment import (
    AssignmentInstance,
    assignment_lp,
    check_hide_and_seek_value,
    hide_and_seek,
    matching_to_column_strategy,
)
from .brute_force import brute_force_lp
from .dantzig import DantzigStrategy, Hole, dantzig_matrix, extract_classic, extract_positive
from .exact_math import componentwise_cmp, mat_vec, rat
from .games import Game, GameSolution, MixedStrategy, solve_game, solve_game_fictitious, verify_maximin
from .lp import (
    InfeasibilityCert,
    LPInstance,
    OptimalPair,
    UnboundednessCert,
    cert_transfer_dual,
    solve_lp,
    verify_outcome,
)
from .nonneg import preprocess, postprocess, solve_nonneg_lp, zero_column_unbounded_check
from .reduction import (
    degree_of_feasibility,
    game_to_reduced,
    lift_dual,
    lift_primal,
    reduced_to_game,
    scale_lp,
    solve_positive_lp,
)

__version__ = "0.1.0"
