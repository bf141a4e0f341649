import itertools
import random

import pytest
from hypothesis import given, settings

from blocking_pebbles.position import Position, build_family, disjoint_union
from blocking_pebbles.solver import (
    BudgetExceeded,
    NotImpartialError,
    Outcome,
    Solver,
    game_value,
    grundy,
    outcome,
)
from blocking_pebbles.values import DOWN, ZERO, add, integer, negate, nimber, render
from strategies import positions, random_position


def test_integer_construction_three():
    p = build_family("single_arc", [(6, 1, 0), (0, 0, 0)])
    assert game_value(p) is integer(3)


def test_down_position():
    p = build_family("out_star", [(0, 0, 0), (1, 0, 0), (0, 1, 1)], n=2)
    g = game_value(p)
    assert g is DOWN
    assert render(g) == "v"


def test_k12_example_value():
    p = build_family("out_star", [(2, 1, 0), (1, 0, 0), (0, 1, 0)], n=2)
    assert game_value(p) is ZERO


def test_green_examples():
    assert grundy(build_family("in_star", [(0, 0, 3), (0, 0, 1), (0, 0, 2)], n=2)) == 3
    out = build_family("out_star", [(0, 0, 5), (0, 0, 1), (0, 0, 2), (0, 0, 3)], n=3)
    assert grundy(out) == 0
    path = build_family("path", [(0, 0, g) for g in (1, 2, 3, 4)], n=4)
    assert grundy(path) == 6


def test_outcome_examples():
    assert outcome(Position.make(0)) is Outcome.P
    assert outcome(build_family("single_arc", [(4, 1, 0), (0, 0, 0)])) is Outcome.L
    assert outcome(build_family("transitive_triple", [(0, 0, 5), (0, 0, 2), (0, 0, 2)])) is Outcome.P
    assert outcome(build_family("single_arc", [(0, 0, 0), (0, 0, 1)])) is Outcome.N
    assert outcome(build_family("single_arc", [(1, 4, 0), (0, 0, 0)])) is Outcome.R


def test_empty_and_pebbleless_positions_are_zero():
    assert game_value(Position.make(0)) is ZERO
    assert game_value(build_family("path", [(0, 0, 0)] * 3, n=3)) is ZERO
    assert grundy(Position.make(2)) == 0


def test_grundy_rejects_colored_pebbles():
    with pytest.raises(NotImpartialError):
        grundy(build_family("single_arc", [(1, 0, 0), (0, 0, 0)]))


def test_budget_is_enforced():
    p = build_family("path", [(3, 3, 3), (0, 0, 0), (0, 0, 0), (0, 0, 0)], n=4)
    with pytest.raises(BudgetExceeded):
        Solver(budget=10).game_value(p)
    # a failed call leaves no wrong entries behind
    s = Solver(budget=10)
    with pytest.raises(BudgetExceeded):
        s.game_value(p)
    s.budget = 10**7
    assert s.game_value(p) is game_value(p)


@settings(max_examples=50, deadline=None)
@given(positions(max_vertices=3, max_pebbles=4), positions(max_vertices=3, max_pebbles=4))
def test_sum_decomposition(p, q):
    assert game_value(disjoint_union(p, q)) is add(game_value(p), game_value(q))


@settings(max_examples=100, deadline=None)
@given(positions(max_vertices=4, max_pebbles=5))
def test_color_swap_negates(p):
    assert game_value(p.swap_colors()) is negate(game_value(p))


@settings(max_examples=100, deadline=None)
@given(positions(max_vertices=4, max_pebbles=6))
def test_outcome_matches_value_sign(p):
    from blocking_pebbles.values import leq

    g = game_value(p)
    expected = {
        (True, True): Outcome.P,
        (True, False): Outcome.L,
        (False, True): Outcome.R,
        (False, False): Outcome.N,
    }[(leq(ZERO, g), leq(g, ZERO))]
    assert outcome(p) is expected


def _green_positions(max_vertices, max_pebbles):
    """Every green-only distribution over every labeled DAG on few vertices."""
    for n in range(1, max_vertices + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            arcs = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            for heaps in itertools.product(range(max_pebbles + 1), repeat=n):
                if sum(heaps) <= max_pebbles:
                    yield Position.make(n, arcs, [(0, 0, h) for h in heaps])


def test_impartial_consistency_exhaustive():
    # every DAG on <= 4 vertices is isomorphic to one whose arcs go low -> high
    s = Solver()
    count = 0
    for p in _green_positions(4, 6):
        assert s.game_value(p) is nimber(s.grundy(p))
        count += 1
    assert count > 5000


def test_memo_soundness():
    rng = random.Random(11)
    memo, plain = Solver(), Solver(memo=False)
    # the memo-free search is exponential, so keep positions tiny
    for i in range(300):
        p = random_position(rng, 3, 3) if i % 2 else random_position(rng, 4, 2)
        assert memo.game_value(p) is plain.game_value(p)
        if p.is_green_only():
            assert memo.grundy(p) == plain.grundy(p)


def test_symmetric_star_keys_agree_with_exact_keys():
    exact, sym = Solver(), Solver(symmetric_stars=True)
    rng = random.Random(5)
    for family in ("out_star", "in_star"):
        for _ in range(150):
            n = rng.randint(2, 3)
            peb = [[0, 0, 0] for _ in range(n + 1)]
            for _ in range(rng.randint(0, 6)):
                peb[rng.randrange(n + 1)][rng.randrange(3)] += 1
            p = build_family(family, peb, n=n)
            assert sym.game_value(p) is exact.game_value(p)


def test_green_placement_is_never_needed():
    # the pay-two option that removes own+green and places green is dominated
    full, pruned = Solver(), Solver(skip_green_placement=True)
    rng = random.Random(3)
    checked = 0
    for _ in range(400):
        p = random_position(rng, 3, 6)
        if not any(pc.green and (pc.blue or pc.red) for pc in p.pebbles):
            continue
        assert pruned.game_value(p) is full.game_value(p)
        checked += 1
    assert checked > 100
