"""Blocking Pebbles positions: a labeled DAG with (blue, red, green) pebbles per vertex."""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class PositionError(ValueError):
    """Base class for invalid positions."""


class CycleError(PositionError):
    pass


class PebbleCountError(PositionError):
    pass


class VertexError(PositionError):
    pass


class FormatError(PositionError):
    pass


class PebbleCount(NamedTuple):
    blue: int = 0
    red: int = 0
    green: int = 0

    @property
    def total(self) -> int:
        return self.blue + self.red + self.green

    def swapped(self) -> PebbleCount:
        return PebbleCount(self.red, self.blue, self.green)


EMPTY = PebbleCount()


def _kahn_order(n: int, arcs: Iterable[tuple[int, int]]) -> list[int] | None:
    """Smallest-label-first topological order, or None when there is a cycle."""
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        succ[u].append(v)
        indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    return order if len(order) == n else None


@dataclass(frozen=True)
class Digraph:
    """A validated DAG on vertices ``0..n-1``. Shared by every position on the same graph."""

    vertex_count: int
    arcs: tuple[tuple[int, int], ...]
    in_nbrs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    out_nbrs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    order: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise VertexError("vertex count must be non-negative")
        arcs = []
        for arc in self.arcs:
            u, v = (int(x) for x in arc)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexError(f"arc {u}->{v} references a vertex outside 0..{n - 1}")
            if u == v:
                raise CycleError(f"self-loop at vertex {u}")
            arcs.append((u, v))
        if len(set(arcs)) != len(arcs):
            raise PositionError("duplicate arc")
        arcs.sort()
        order = _kahn_order(n, arcs)
        if order is None:
            raise CycleError("arc set contains a directed cycle")
        ins: list[list[int]] = [[] for _ in range(n)]
        outs: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            outs[u].append(v)
            ins[v].append(u)
        object.__setattr__(self, "arcs", tuple(arcs))
        object.__setattr__(self, "in_nbrs", tuple(map(tuple, ins)))
        object.__setattr__(self, "out_nbrs", tuple(map(tuple, outs)))
        object.__setattr__(self, "order", tuple(order))

    @cached_property
    def rank(self) -> tuple[int, ...]:
        rank = [0] * self.vertex_count
        for i, v in enumerate(self.order):
            rank[v] = i
        return tuple(rank)


@dataclass(frozen=True)
class Position:
    """A game state. Construct with :meth:`make`; instances are immutable."""

    graph: Digraph
    pebbles: tuple[PebbleCount, ...]

    def __post_init__(self):
        if len(self.pebbles) != self.graph.vertex_count:
            raise VertexError(
                f"{len(self.pebbles)} pebble entries for {self.graph.vertex_count} vertices"
            )
        for v, pc in enumerate(self.pebbles):
            if min(pc) < 0:
                raise PebbleCountError(f"negative pebble count at vertex {v}: {tuple(pc)}")

    @classmethod
    def make(
        cls,
        vertex_count: int,
        arcs: Iterable[tuple[int, int]] = (),
        pebbles: dict[int, Sequence[int]] | Sequence[Sequence[int]] | None = None,
    ) -> Position:
        graph = Digraph(vertex_count, tuple(arcs))
        counts = [EMPTY] * vertex_count
        if isinstance(pebbles, dict):
            for v, pc in pebbles.items():
                if not 0 <= v < vertex_count:
                    raise VertexError(f"pebbles given for unknown vertex {v}")
                counts[v] = PebbleCount(*pc)
        elif pebbles is not None:
            pebbles = list(pebbles)
            if len(pebbles) != vertex_count:
                raise VertexError(f"{len(pebbles)} pebble entries for {vertex_count} vertices")
            counts = [PebbleCount(*pc) for pc in pebbles]
        return cls(graph, tuple(counts))

    def with_pebbles(self, pebbles: tuple[PebbleCount, ...]) -> Position:
        """Same graph, new distribution. Skips validation; callers keep counts non-negative."""
        p = object.__new__(Position)
        object.__setattr__(p, "graph", self.graph)
        object.__setattr__(p, "pebbles", pebbles)
        return p

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return self.graph.arcs

    def totals(self) -> PebbleCount:
        return PebbleCount(*(sum(c) for c in zip(*self.pebbles))) if self.pebbles else EMPTY

    def is_green_only(self) -> bool:
        return all(pc.blue == 0 and pc.red == 0 for pc in self.pebbles)

    def swap_colors(self) -> Position:
        return self.with_pebbles(tuple(pc.swapped() for pc in self.pebbles))

    def __str__(self):
        return serialize(self)


# ---------------------------------------------------------------------------
# Families

FAMILIES = ("out_star", "in_star", "path", "transitive_triple", "transitive_tournament", "single_arc")


def family_arcs(family: str, n: int | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and arc list of a named family."""
    if family in ("out_star", "in_star", "path", "transitive_tournament"):
        if n is None or n < 1:
            raise ValueError(f"{family} needs n >= 1")
    if family == "out_star":
        return n + 1, [(0, i) for i in range(1, n + 1)]
    if family == "in_star":
        return n + 1, [(i, 0) for i in range(1, n + 1)]
    if family == "path":
        return n, [(i, i + 1) for i in range(n - 1)]
    if family == "transitive_tournament":
        return n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    if family == "transitive_triple":
        return 3, [(0, 1), (0, 2), (1, 2)]
    if family == "single_arc":
        return 2, [(0, 1)]
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def build_family(family: str, pebbles: Sequence[Sequence[int]], n: int | None = None) -> Position:
    """Position on a named graph family.

    Vertex 0 is the center of a star, the source of a path, single arc or
    transitive tournament. ``n`` counts leaves for stars and vertices for
    paths and tournaments.
    """
    count, arcs = family_arcs(family, n)
    if len(pebbles) != count:
        raise ValueError(f"{family} has {count} vertices but {len(pebbles)} pebble entries were given")
    return Position.make(count, arcs, pebbles)


# ---------------------------------------------------------------------------
# Structure


def components(p: Position) -> list[Position]:
    """Weakly connected components, ordered by smallest vertex, each relabeled in order."""
    n = p.vertex_count
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in p.arcs:
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    if len(groups) == 1:
        return [p]
    out = []
    for verts in sorted(groups.values()):
        index = {v: i for i, v in enumerate(verts)}
        arcs = [(index[u], index[v]) for u, v in p.arcs if u in index]
        out.append(Position(Digraph(len(verts), tuple(arcs)), tuple(p.pebbles[v] for v in verts)))
    return out


def disjoint_union(*parts: Position) -> Position:
    arcs, pebbles, offset = [], [], 0
    for q in parts:
        arcs += [(u + offset, v + offset) for u, v in q.arcs]
        pebbles += q.pebbles
        offset += q.vertex_count
    return Position(Digraph(offset, tuple(arcs)), tuple(pebbles))


def rank_potential(p: Position) -> tuple[int, int]:
    """(total pebbles, sum of topological rank times pebbles) -- strictly decreases with every move."""
    rank = p.graph.rank
    total = weighted = 0
    for v, pc in enumerate(p.pebbles):
        t = pc.blue + pc.red + pc.green
        total += t
        weighted += rank[v] * t
    return total, weighted


# ---------------------------------------------------------------------------
# File format


def to_dict(p: Position) -> dict:
    return {
        "vertices": [{"id": v, "pebbles": list(pc)} for v, pc in enumerate(p.pebbles)],
        "arcs": [list(a) for a in p.arcs],
    }


def serialize(p: Position, indent: int | None = None) -> str:
    return json.dumps(to_dict(p), indent=indent)


def from_dict(data) -> Position:
    if not isinstance(data, dict) or "vertices" not in data:
        raise FormatError("position must be an object with a 'vertices' array")
    verts, arcs = data["vertices"], data.get("arcs", [])
    if not isinstance(verts, list) or not isinstance(arcs, list):
        raise FormatError("'vertices' and 'arcs' must be arrays")
    table: dict[int, tuple[int, int, int]] = {}
    for entry in verts:
        try:
            vid, pc = entry["id"], entry.get("pebbles", [0, 0, 0])
        except (TypeError, KeyError):
            raise FormatError(f"malformed vertex entry {entry!r}") from None
        if not _is_int(vid) or not isinstance(pc, list) or len(pc) != 3 or not all(map(_is_int, pc)):
            raise FormatError(f"malformed vertex entry {entry!r}")
        if vid in table:
            raise VertexError(f"duplicate vertex id {vid}")
        if min(pc) < 0:
            raise PebbleCountError(f"negative pebble count at vertex {vid}: {pc}")
        table[vid] = tuple(pc)
    n = len(table)
    if set(table) != set(range(n)):
        raise VertexError(f"vertex ids must be exactly 0..{n - 1}")
    pairs = []
    for arc in arcs:
        if not isinstance(arc, list) or len(arc) != 2 or not all(map(_is_int, arc)):
            raise FormatError(f"malformed arc {arc!r}")
        pairs.append(tuple(arc))
    return Position.make(n, pairs, [table[v] for v in range(n)])


def parse(text: str) -> Position:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return from_dict(data)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)
