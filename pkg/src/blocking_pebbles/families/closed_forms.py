"""Closed-form values of the analysed position families.

Partizan families use blue/red pebbles only. Each evaluator returns ``None``
when the configuration satisfies none of its case hypotheses; cases are
tried in the order they are listed and the first match wins.

Bracket notation for the small families: ``[(a, b), [c, d], [e, f]]`` means
center ``(blue a, red b)`` and leaves ``(c, d)``, ``(e, f)``. For the
directed path the three pairs are the vertices from source to sink.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Optional, Sequence

from ..position import PebbleCount, Position, build_family
from ..solver import Outcome
from ..values import STAR, ZERO, Game, integer, make_game

Pair = tuple[int, int]


def switch(a: int, b: int) -> Game:
    """The game ``{a | b}`` for integers, canonicalized."""
    return make_game([integer(a)], [integer(b)])


# ---------------------------------------------------------------------------
# Integers


def thm1_integer_position(k: int) -> Position:
    """A single arc whose value is the integer ``k``."""
    source = (2 * k, 1, 0) if k > 0 else (1, -2 * k, 0) if k < 0 else (0, 0, 0)
    return build_family("single_arc", [source, (0, 0, 0)])


# ---------------------------------------------------------------------------
# Blue/red out-stars


def thm2_outstar_value(center: Pair, leaves: Sequence[Pair]) -> Optional[Game]:
    b_c, r_c = center
    b_l = sum(b for b, _ in leaves)
    r_l = sum(r for _, r in leaves)
    blue_leaves = {i for i, (b, _) in enumerate(leaves) if b}
    red_leaves = {i for i, (_, r) in enumerate(leaves) if r}
    separate = not (blue_leaves & red_leaves)

    if r_c == 0 and r_l == 0 and b_c + b_l >= 1:
        return integer(3 * b_l - 2 + 2 * b_c)
    if b_c >= 1 and r_c == 0 and b_l >= 1 and r_l >= 1 and separate:
        return integer(3 * b_l - 2 + 2 * (b_c - 1))
    if (b_c, r_c) == (0, 0):
        if b_l == 1 and r_l == 1:
            return STAR
        if b_l >= 2 and r_l == 1 and separate:
            return switch(3 * (b_l - 1) - 2, 0)
        if b_l >= 2 and r_l >= 2 and separate:
            return switch(3 * (b_l - 1) - 2, -(3 * (r_l - 1) - 2))
    return None


# ---------------------------------------------------------------------------
# The two-leaf out-star K_{1,2}


@dataclass(frozen=True)
class K12Config:
    center: Pair
    leaf1: Pair
    leaf2: Pair

    def position(self) -> Position:
        return build_family(
            "out_star", [(*self.center, 0), (*self.leaf1, 0), (*self.leaf2, 0)], n=2
        )

    def mirrored(self) -> K12Config:
        return K12Config(self.center, self.leaf2, self.leaf1)

    def __str__(self):
        (a, b), (c, d), (e, f) = self.center, self.leaf1, self.leaf2
        return f"[({a},{b}),[{c},{d}],[{e},{f}]]"


def _floor_half(x: int) -> int:
    return x // 2


def thm3_case1(cfg: K12Config, reading: str = "blue_leaf") -> Optional[Game]:
    """Case 1 under one of its two readings.

    ``"red_leaf"``: center ``(a, b)``, one leaf ``(0, c)``, other leaf empty.
    ``"blue_leaf"``: center ``(a, b)``, one leaf ``(c, 0)``, other leaf empty.
    Both require ``c >= 1`` and ``a >= 1``.
    """
    (a, b), leaf, other = cfg.center, cfg.leaf1, cfg.leaf2
    if other != (0, 0):
        return None
    if reading == "red_leaf":
        ok = leaf[0] == 0 and leaf[1] >= 1
    elif reading == "blue_leaf":
        ok = leaf[0] >= 1 and leaf[1] == 0
    else:
        raise ValueError(f"unknown reading {reading!r}")
    if not ok or a < 1:
        return None
    if a == 1:
        return integer(-_floor_half(b))
    return switch(_floor_half(a) - 1, _floor_half(a - b) + 1)


def _thm3_ordered(cfg: K12Config, case1_reading: str) -> Optional[tuple[int, Game]]:
    (a, b), (c, d), (e, f) = cfg.center, cfg.leaf1, cfg.leaf2
    v = thm3_case1(cfg, case1_reading)
    if v is not None:
        return 1, v
    if min(a, b, c, f) >= 1 and d == 0 and e == 0:
        return 2, integer(_floor_half(a - b))
    if min(a, b, c, e, f) >= 1 and d == 0:
        return 3, integer(_floor_half(a - 1))
    if (a, b) == (0, 0):
        if min(c, d, e, f) >= 1:
            return 4, switch(c + e - 1, -(d + f - 1))
        if min(c, d, f) >= 1 and e == 0:
            return 5, switch(c - 1, -(3 * (d + f) - 5))
        if min(c, d) >= 1 and (e, f) == (0, 0):
            return 6, switch(3 * c - 5, -(3 * d - 5))
    if a in (1, 2) and b == 0 and c == 0 and d >= 1 and (e, f) == (0, 0):
        return 7, ZERO
    return None


def thm3_case(cfg: K12Config, case1_reading: str = "blue_leaf") -> Optional[tuple[int, Game]]:
    """``(case number, value)`` for the first matching case, either leaf order."""
    hit = _thm3_ordered(cfg, case1_reading)
    if hit is None:
        hit = _thm3_ordered(cfg.mirrored(), case1_reading)
    return hit


def thm3_k12_value(cfg: K12Config, case1_reading: str = "blue_leaf") -> Optional[Game]:
    hit = thm3_case(cfg, case1_reading)
    return None if hit is None else hit[1]


# ---------------------------------------------------------------------------
# Blue/red in-stars


def thm4_instar_value(center: Pair, leaves: Sequence[Pair]) -> Optional[Game]:
    b_c, r_c = center
    b_l = sum(b for b, _ in leaves)
    r_l = sum(r for _, r in leaves)
    if r_c == 0 and r_l == 0 and b_c >= 1 and b_l >= 1:
        return integer(3 * b_c + 2 * b_l - 2)
    if len(leaves) != 2:
        return None
    for x, y in (leaves, leaves[::-1]):
        v = _thm4_two_leaf(center, tuple(x), tuple(y))
        if v is not None:
            return v
    return None


def _thm4_two_leaf(center: Pair, x: Pair, y: Pair) -> Optional[Game]:
    if center == (0, 0):
        if (x, y) == ((0, 1), (1, 0)):
            return ZERO
        if (x, y) == ((0, 2), (2, 0)):
            return STAR
        a, zero1 = x
        zero2, b = y
        if zero1 == 0 and zero2 == 0:
            if a >= 2 and b == 1:
                return integer(2 * a - 2)
            if a >= 3 and b == 2:
                return switch(2 * a - 6, 0)
            if a >= 3 and b >= 3:
                return switch(2 * a - 6, -2 * b + 6)
    a, r = center
    if r == 0 and a >= 1 and x[0] >= 1 and x[1] == 0 and y[0] == 0 and y[1] >= 2:
        return integer(3 * a + 2 * x[0] - 5)
    return None


# ---------------------------------------------------------------------------
# The directed path on three vertices


def thm5_p3_value(v1: Pair, v2: Pair, v3: Pair) -> Optional[Game]:
    (a, r1), (x2, y2), (x3, y3) = v1, v2, v3
    if r1 != 0 or x3 != 0:
        return None
    c = y3
    if y2 == 0 and x2 >= 1 and c >= 1:
        b = x2
        if a == 0 and b == 1:
            return ZERO
        return integer(2 * a + 3 * b - 5)
    if x2 == 0 and a >= 1 and y2 >= 1:
        b = y2
        if b == 1 and c == 0:
            return ZERO
        if a == 1:
            return integer(-2 * b - 3 * c + 2)
        return integer(-2 * b - 3 * c + 4)
    if (x2, y2) == (0, 0) and c >= a >= 1:
        b = c
        if a == 1:
            return integer(-3 * b + 2)
        if a == 2:
            return switch(0, -3 * b + 5)
        return switch(2 * a - 6, -3 * b + 5)
    return None


# ---------------------------------------------------------------------------
# Green-only families (values are nimber indices)


def nim_sum(heaps) -> int:
    return reduce(xor, heaps, 0)


def green_star_value(orientation: str, g0: int, leaf_heaps: Sequence[int]) -> int:
    if orientation == "in":
        return g0
    if orientation == "out":
        return nim_sum(leaf_heaps)
    raise ValueError(f"orientation must be 'in' or 'out', not {orientation!r}")


def green_path_value(heaps: Sequence[int]) -> int:
    """``heaps[0]`` sits on the source; the even-indexed heaps g2, g4, ... count."""
    return nim_sum(heaps[1::2])


def tt_triple_outcome(g1: int, g2: int, g3: int) -> Outcome:
    return Outcome.P if g2 == g3 else Outcome.N


def tournament_value(n: int) -> int:
    """Closed-form heap size for one green pebble on the sink of the n-vertex transitive tournament."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n


def green_position(family: str, heaps: Sequence[int], n: int | None = None) -> Position:
    return build_family(family, [PebbleCount(0, 0, g) for g in heaps], n=n)
