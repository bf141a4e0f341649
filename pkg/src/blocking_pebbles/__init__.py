"""Blocking Pebbles: a partizan pebbling game on directed acyclic graphs.

Exact evaluation to canonical form, Grundy numbers for green-only positions,
closed forms for several graph families and a sweep that checks them.
"""

from .position import (
    Digraph,
    PebbleCount,
    Position,
    PositionError,
    build_family,
    components,
    disjoint_union,
    parse,
    rank_potential,
    serialize,
)
from .rules import LEFT, RIGHT, IllegalMoveError, Move, Player, apply_move, legal_moves
from .solver import BudgetExceeded, NotImpartialError, Outcome, Solver, game_value, grundy, outcome
from .values import (
    DOWN,
    STAR,
    UP,
    ZERO,
    Game,
    add,
    classify,
    integer,
    make_game,
    negate,
    nimber,
    number,
    parse_value,
    render,
)

__all__ = [
    "DOWN", "LEFT", "RIGHT", "STAR", "UP", "ZERO",
    "BudgetExceeded", "Digraph", "Game", "IllegalMoveError", "Move", "NotImpartialError",
    "Outcome", "PebbleCount", "Player", "Position", "PositionError", "Solver",
    "add", "apply_move", "build_family", "classify", "components", "disjoint_union",
    "game_value", "grundy", "integer", "legal_moves", "make_game", "negate", "nimber",
    "number", "outcome", "parse", "parse_value", "rank_potential", "render", "serialize",
]
