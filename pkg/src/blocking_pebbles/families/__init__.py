"""Closed-form values for analysed families, tree reduction and the verification sweep."""

from .closed_forms import (
    K12Config,
    green_path_value,
    green_position,
    green_star_value,
    nim_sum,
    thm1_integer_position,
    thm2_outstar_value,
    thm3_case,
    thm3_case1,
    thm3_k12_value,
    thm4_instar_value,
    thm5_p3_value,
    tournament_value,
    tt_triple_outcome,
)
from .reduction import odd_reachable, oriented_trees, reduce_tree
from .verify import THEOREMS, VerificationReport, tournament_census, verify

__all__ = [
    "K12Config",
    "THEOREMS",
    "VerificationReport",
    "green_path_value",
    "green_position",
    "green_star_value",
    "nim_sum",
    "odd_reachable",
    "oriented_trees",
    "reduce_tree",
    "thm1_integer_position",
    "thm2_outstar_value",
    "thm3_case",
    "thm3_case1",
    "thm3_k12_value",
    "thm4_instar_value",
    "thm5_p3_value",
    "tournament_census",
    "tournament_value",
    "tt_triple_outcome",
    "verify",
]
