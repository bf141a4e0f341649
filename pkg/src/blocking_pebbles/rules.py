"""Legal moves of Blocking Pebbles.

Left moves blue and green pebbles, Right moves red and green. From a vertex
``v`` a player may

* slide any positive number of own and/or green pebbles to an in-neighbor
  of ``v`` (free), or
* remove two own and/or green pebbles from ``v`` and place one of the
  removed colors on an out-neighbor of ``v``.

A player's own color may never be put on a vertex holding the opponent's
color. Green pebbles neither block nor are blocked.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .position import PebbleCount, Position


class Player(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> Player:
        return Player.RIGHT if self is Player.LEFT else Player.LEFT

    @classmethod
    def parse(cls, text: str) -> Player:
        key = text.strip().upper()
        if key in ("L", "LEFT"):
            return cls.LEFT
        if key in ("R", "RIGHT"):
            return cls.RIGHT
        raise ValueError(f"unknown player {text!r}")


LEFT, RIGHT = Player.LEFT, Player.RIGHT


class Kind(enum.IntEnum):
    SLIDE = 0
    PAY2 = 1


class Placed(enum.IntEnum):
    OWN = 0
    GREEN = 1


class IllegalMoveError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Move:
    src: int
    dst: int
    kind: Kind
    own: int
    placed: Optional[Placed]
    green: int
    player: Player

    def render(self) -> str:
        mine = "b" if self.player is LEFT else "r"
        counts = f"{mine}={self.own},g={self.green}"
        if self.kind is Kind.SLIDE:
            return f"{self.player.value} slide {self.src}->{self.dst} [{counts}]"
        color = mine if self.placed is Placed.OWN else "g"
        return f"{self.player.value} pay2 {self.src}->{self.dst} [{counts} -> place {color}]"

    __str__ = render


def _own(pc: PebbleCount, player: Player) -> int:
    return pc.blue if player is LEFT else pc.red


def _opp(pc: PebbleCount, player: Player) -> int:
    return pc.red if player is LEFT else pc.blue


_PAY_SPLITS = ((0, 2), (1, 1), (2, 0))


def iter_moves(p: Position, player: Player) -> Iterator[Move]:
    """All legal moves in the canonical (src, dst, kind, own, placed, green) order."""
    g = p.graph
    peb = p.pebbles
    for v in range(g.vertex_count):
        pc = peb[v]
        own, green = _own(pc, player), pc.green
        if own + green == 0:
            continue
        targets = sorted(
            [(u, Kind.SLIDE) for u in g.in_nbrs[v]] + [(w, Kind.PAY2) for w in g.out_nbrs[v]]
        )
        for t, kind in targets:
            blocked = _opp(peb[t], player) > 0
            if kind is Kind.SLIDE:
                for k in range((0 if blocked else own) + 1):
                    for j in range(1 if k == 0 else 0, green + 1):
                        yield Move(v, t, kind, k, None, j, player)
                continue
            for k, j in _PAY_SPLITS:
                if k > own or j > green:
                    continue
                if k and not blocked:
                    yield Move(v, t, kind, k, Placed.OWN, j, player)
                if j:
                    yield Move(v, t, kind, k, Placed.GREEN, j, player)


def legal_moves(p: Position, player: Player) -> list[Move]:
    return list(iter_moves(p, player))


def _shift(pc: PebbleCount, player: Player, own: int, green: int) -> PebbleCount:
    if player is LEFT:
        return PebbleCount(pc.blue + own, pc.red, pc.green + green)
    return PebbleCount(pc.blue, pc.red + own, pc.green + green)


def successor_pebbles(pebbles: tuple[PebbleCount, ...], m: Move) -> tuple[PebbleCount, ...]:
    peb = list(pebbles)
    peb[m.src] = _shift(peb[m.src], m.player, -m.own, -m.green)
    if m.kind is Kind.SLIDE:
        peb[m.dst] = _shift(peb[m.dst], m.player, m.own, m.green)
    elif m.placed is Placed.OWN:
        peb[m.dst] = _shift(peb[m.dst], m.player, 1, 0)
    else:
        peb[m.dst] = _shift(peb[m.dst], m.player, 0, 1)
    return tuple(peb)


def successor(p: Position, m: Move) -> Position:
    """Apply a move known to be legal."""
    return p.with_pebbles(successor_pebbles(p.pebbles, m))


def check_move(p: Position, m: Move) -> None:
    """Raise :class:`IllegalMoveError` naming the violated clause, if any."""
    n = p.vertex_count
    if not (0 <= m.src < n and 0 <= m.dst < n):
        raise IllegalMoveError(f"adjacency: vertex out of range in {m}")
    if m.own < 0 or m.green < 0:
        raise IllegalMoveError(f"supply: negative pebble amounts in {m}")
    src, dst = p.pebbles[m.src], p.pebbles[m.dst]
    if m.own > _own(src, m.player) or m.green > src.green:
        raise IllegalMoveError(f"supply: vertex {m.src} holds {tuple(src)}, cannot move {m}")
    if m.kind is Kind.SLIDE:
        if m.src not in p.graph.out_nbrs[m.dst]:
            raise IllegalMoveError(f"adjacency: {m.dst} is not an in-neighbor of {m.src}")
        if m.own + m.green < 1:
            raise IllegalMoveError("supply: a slide moves at least one pebble")
        if m.placed is not None:
            raise IllegalMoveError("slides carry no placement color")
        if m.own and _opp(dst, m.player):
            raise IllegalMoveError(f"blocking: vertex {m.dst} holds opposing pebbles")
        return
    if m.dst not in p.graph.out_nbrs[m.src]:
        raise IllegalMoveError(f"adjacency: {m.dst} is not an out-neighbor of {m.src}")
    if m.own + m.green != 2:
        raise IllegalMoveError("pay-two arity: exactly two pebbles must be removed")
    if m.placed is Placed.OWN:
        if m.own < 1:
            raise IllegalMoveError("pay-two arity: cannot place a color that was not removed")
        if _opp(dst, m.player):
            raise IllegalMoveError(f"blocking: vertex {m.dst} holds opposing pebbles")
    elif m.placed is Placed.GREEN:
        if m.green < 1:
            raise IllegalMoveError("pay-two arity: cannot place a color that was not removed")
    else:
        raise IllegalMoveError("pay-two arity: a placement color is required")


def apply_move(p: Position, m: Move) -> Position:
    check_move(p, m)
    return successor(p, m)
