"""Exhaustive evaluation of Blocking Pebbles positions.

Positions split into weakly connected components, which never interact, so
a value is the disjunctive sum of its component values (nim sum for Grundy
numbers). Each component is searched depth-first with an explicit stack and
a transposition table keyed by the exact pebble distribution on its graph.
"""

from __future__ import annotations

import enum
from typing import Callable, Hashable

from . import values
from .position import Digraph, PebbleCount, Position, components
from .rules import LEFT, RIGHT, Kind, Placed, Player, iter_moves, successor_pebbles
from .values import Game

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """The search expanded more positions than its node budget allows."""


class NotImpartialError(ValueError):
    pass


class Outcome(enum.Enum):
    L = "L"
    R = "R"
    P = "P"
    N = "N"


def outcome_of(g: Game) -> Outcome:
    ge0 = values.leq(values.ZERO, g)
    le0 = values.leq(g, values.ZERO)
    if ge0 and le0:
        return Outcome.P
    if ge0:
        return Outcome.L
    if le0:
        return Outcome.R
    return Outcome.N


def _is_star(graph: Digraph) -> bool:
    n = graph.vertex_count
    if n < 3 or len(graph.arcs) != n - 1:
        return False
    leaves = range(1, n)
    return graph.out_nbrs[0] == tuple(leaves) or graph.in_nbrs[0] == tuple(leaves)


def _mex(values_: set[int]) -> int:
    m = 0
    while m in values_:
        m += 1
    return m


class Solver:
    """Memoizing evaluator.

    ``symmetric_stars`` lets star components share table entries between
    distributions that differ only by a permutation of leaves.
    ``skip_green_placement`` drops pay-two moves that remove one own and one
    green pebble and place the green one; used to check that those moves are
    always dominated.
    """

    def __init__(
        self,
        budget: int = DEFAULT_BUDGET,
        *,
        memo: bool = True,
        symmetric_stars: bool = False,
        skip_green_placement: bool = False,
    ):
        self.budget = budget
        self.memo = memo
        self.symmetric_stars = symmetric_stars
        self.skip_green_placement = skip_green_placement
        self._values: dict[Digraph, dict[Hashable, Game]] = {}
        self._grundy: dict[Digraph, dict[Hashable, int]] = {}
        self._expanded = 0

    # -- helpers -----------------------------------------------------------

    def _tick(self):
        self._expanded += 1
        if self._expanded > self.budget:
            raise BudgetExceeded(f"node budget of {self.budget} expanded positions exhausted")

    def _keyer(self, graph: Digraph) -> Callable[[tuple], tuple]:
        if self.symmetric_stars and _is_star(graph):
            return lambda peb: (peb[0],) + tuple(sorted(peb[1:]))
        return lambda peb: peb

    def _moves(self, pos: Position, player: Player):
        for m in iter_moves(pos, player):
            if self.skip_green_placement and m.kind is Kind.PAY2 and m.own == 1 and m.placed is Placed.GREEN:
                continue
            yield m

    def _children(self, pos: Position, player: Player, key) -> set:
        return {key(successor_pebbles(pos.pebbles, m)) for m in self._moves(pos, player)}

    # -- partizan values ---------------------------------------------------

    def game_value(self, p: Position) -> Game:
        self._expanded = 0
        total = values.ZERO
        for comp in components(p):
            if any(pc.total for pc in comp.pebbles):
                total = values.add(total, self._component_value(comp))
        return total

    def _component_value(self, comp: Position) -> Game:
        if not self.memo:
            return self._value_plain(comp)
        key = self._keyer(comp.graph)
        table = self._values.setdefault(comp.graph, {})
        root = key(comp.pebbles)
        pending: dict[Hashable, tuple[set, set]] = {}
        stack = [root]
        while stack:
            k = stack[-1]
            if k in table:
                stack.pop()
                continue
            kids = pending.get(k)
            if kids is None:
                self._tick()
                pos = comp.with_pebbles(k)
                kids = pending[k] = (self._children(pos, LEFT, key), self._children(pos, RIGHT, key))
                todo = [c for c in kids[0] | kids[1] if c not in table]
                if todo:
                    stack.extend(todo)
                    continue
            table[k] = values.make_game([table[c] for c in kids[0]], [table[c] for c in kids[1]])
            del pending[k]
            stack.pop()
        return table[root]

    def _value_plain(self, pos: Position) -> Game:
        self._tick()
        opts = []
        for player in (LEFT, RIGHT):
            kids = self._children(pos, player, lambda peb: peb)
            opts.append([self._value_plain(pos.with_pebbles(k)) for k in kids])
        return values.make_game(*opts)

    # -- impartial values --------------------------------------------------

    def grundy(self, p: Position) -> int:
        if not p.is_green_only():
            raise NotImpartialError("Grundy numbers need a green-only position")
        self._expanded = 0
        g = 0
        for comp in components(p):
            if any(pc.total for pc in comp.pebbles):
                g ^= self._component_grundy(comp)
        return g

    def _component_grundy(self, comp: Position) -> int:
        key = self._keyer(comp.graph)
        table = self._grundy.setdefault(comp.graph, {}) if self.memo else {}
        root = key(comp.pebbles)
        pending: dict[Hashable, set] = {}
        stack = [root]
        while stack:
            k = stack[-1]
            if k in table:
                stack.pop()
                continue
            kids = pending.get(k)
            if kids is None:
                self._tick()
                kids = pending[k] = self._children(comp.with_pebbles(k), LEFT, key)
                todo = [c for c in kids if c not in table]
                if todo:
                    stack.extend(todo)
                    continue
            table[k] = _mex({table[c] for c in kids})
            del pending[k]
            stack.pop()
        return table[root]

    def outcome(self, p: Position) -> Outcome:
        return outcome_of(self.game_value(p))


_default = Solver()


def default_solver() -> Solver:
    return _default


def game_value(p: Position, solver: Solver | None = None) -> Game:
    return (solver or _default).game_value(p)


def grundy(p: Position, solver: Solver | None = None) -> int:
    return (solver or _default).grundy(p)


def outcome(p: Position, solver: Solver | None = None) -> Outcome:
    return (solver or _default).outcome(p)
