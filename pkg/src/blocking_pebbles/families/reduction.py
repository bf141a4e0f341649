"""Tree reduction for green-only positions, plus small oriented-tree enumeration."""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterator

from ..position import Position, PositionError


def is_oriented_tree(p: Position) -> bool:
    n = p.vertex_count
    if n == 0 or len(p.arcs) != n - 1:
        return False
    seen = {0}
    todo = [0]
    nbrs = [set(p.graph.in_nbrs[v]) | set(p.graph.out_nbrs[v]) for v in range(n)]
    while todo:
        v = todo.pop()
        for u in nbrs[v] - seen:
            seen.add(u)
            todo.append(u)
    return len(seen) == n


def odd_reachable(p: Position) -> set[int]:
    """Vertices at the end of some odd-length directed path starting at a source."""
    g = p.graph
    sources = [v for v in range(g.vertex_count) if not g.in_nbrs[v]]
    seen = {(s, 0) for s in sources}
    queue = deque(seen)
    while queue:
        v, parity = queue.popleft()
        for w in g.out_nbrs[v]:
            state = (w, parity ^ 1)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return {v for v, parity in seen if parity}


def reduce_tree(t: Position) -> Position:
    """Reduced digraph of a green-only oriented tree.

    Keeps the odd-reachable vertices with their pebbles and the arcs among
    them, and adds a fresh empty apex (vertex 0) with an arc to each of them.
    Kept vertices are relabeled 1, 2, ... in their original order.
    """
    if not is_oriented_tree(t):
        raise PositionError("reduce_tree needs an oriented tree")
    if not t.is_green_only():
        raise PositionError("reduce_tree needs a green-only position")
    kept = sorted(odd_reachable(t))
    index = {v: i + 1 for i, v in enumerate(kept)}
    arcs = [(0, index[v]) for v in kept]
    arcs += [(index[u], index[v]) for u, v in t.arcs if u in index and v in index]
    pebbles = [(0, 0, 0)] + [t.pebbles[v] for v in kept]
    return Position.make(len(kept) + 1, arcs, pebbles)


def _labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = (v for v in range(n) if degree[v] == 1)
        edges.append((u, w))
        yield edges


def _canonical_arcs(n: int, arcs) -> tuple:
    return min(
        tuple(sorted((perm[u], perm[v]) for u, v in arcs))
        for perm in itertools.permutations(range(n))
    )


def oriented_trees(n: int) -> list[tuple[tuple[int, int], ...]]:
    """One arc set per isomorphism class of oriented trees on ``n`` vertices."""
    classes = set()
    for edges in _labeled_trees(n):
        for flips in itertools.product((False, True), repeat=len(edges)):
            arcs = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
            classes.add(_canonical_arcs(n, arcs))
    return sorted(classes)
