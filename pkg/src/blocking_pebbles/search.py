"""Brute-force census of values over small DAGs.

Exploratory: every DAG on up to ``max_vertices`` vertices (one representative
per isomorphism class, no isolated vertices except the one-vertex graph) with
every blue/red/green distribution of at most ``max_pebbles`` pebbles.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .position import Position, _kahn_order, serialize
from .solver import Solver
from .values import Game, classify, render


def dag_classes(n: int) -> list[tuple[tuple[int, int], ...]]:
    """One arc set per isomorphism class of DAGs on ``n`` vertices without isolated vertices."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for mask in range(1 << len(pairs)):
        arcs = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if n > 1 and len({x for a in arcs for x in a}) < n:
            continue
        if any((v, u) in arcs for u, v in arcs) or _kahn_order(n, arcs) is None:
            continue
        seen.add(min(tuple(sorted((p[u], p[v]) for u, v in arcs)) for p in perms))
    return sorted(seen)


def distributions(n: int, max_pebbles: int) -> Iterator[tuple[tuple[int, int, int], ...]]:
    slots = 3 * n
    for total in range(max_pebbles + 1):
        for bars in itertools.combinations(range(total + slots - 1), slots - 1):
            counts, prev = [], -1
            for b in bars + (total + slots - 1,):
                counts.append(b - prev - 1)
                prev = b
            yield tuple(tuple(counts[3 * v : 3 * v + 3]) for v in range(n))


@dataclass
class Census:
    counts: dict[Game, int] = field(default_factory=lambda: defaultdict(int))
    examples: dict[Game, Position] = field(default_factory=dict)
    positions: int = 0

    def sorted_values(self) -> list[Game]:
        def order(g: Game):
            if g.number is not None:
                return (0, g.number, "")
            return (1, Fraction(0), render(g))

        return sorted(self.counts, key=order)

    def dyadics(self) -> list[Game]:
        return [g for g in self.sorted_values() if g.number is not None and g.number.denominator > 1]


def iter_positions(max_vertices: int, max_pebbles: int) -> Iterator[Position]:
    for n in range(1, max_vertices + 1):
        for arcs in dag_classes(n):
            for peb in distributions(n, max_pebbles):
                yield Position.make(n, arcs, peb)


def census(max_vertices: int, max_pebbles: int, solver: Solver | None = None) -> Census:
    solver = solver or Solver()
    result = Census()
    for p in iter_positions(max_vertices, max_pebbles):
        g = solver.game_value(p)
        result.positions += 1
        result.counts[g] += 1
        result.examples.setdefault(g, p)
    return result


def find_value(target: Game, max_vertices: int, max_pebbles: int, solver: Solver | None = None) -> Iterator[Position]:
    solver = solver or Solver()
    for p in iter_positions(max_vertices, max_pebbles):
        if solver.game_value(p) is target:
            yield p


def census_lines(c: Census) -> list[str]:
    lines = [f"{render(g)}\t{classify(g)}\t{c.counts[g]}\t{serialize(c.examples[g])}" for g in c.sorted_values()]
    dy = ", ".join(render(g) for g in c.dyadics()) or "none"
    lines.append(f"# {c.positions} positions, {len(c.counts)} distinct values; non-integer dyadics: {dy}")
    return lines
