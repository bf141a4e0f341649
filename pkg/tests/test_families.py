import itertools
import random

import pytest

from blocking_pebbles.families import (
    K12Config,
    green_path_value,
    green_position,
    green_star_value,
    odd_reachable,
    oriented_trees,
    reduce_tree,
    thm1_integer_position,
    thm2_outstar_value,
    thm3_case,
    thm3_k12_value,
    thm4_instar_value,
    thm5_p3_value,
    tournament_value,
    tt_triple_outcome,
    verify,
)
from blocking_pebbles.families.closed_forms import switch
from blocking_pebbles.position import Position, PositionError, build_family, family_arcs
from blocking_pebbles.solver import Outcome, game_value, grundy
from blocking_pebbles.values import STAR, ZERO, integer, negate, nimber


# --- closed forms ------------------------------------------------------------


@pytest.mark.parametrize("k, source", [(1, (2, 1, 0)), (0, (0, 0, 0)), (-2, (1, 4, 0))])
def test_integer_positions(k, source):
    p = thm1_integer_position(k)
    assert p.pebbles[0] == source
    assert game_value(p) is integer(k)


def test_outstar_examples():
    assert thm2_outstar_value((0, 0), [(1, 0)]) is integer(1)
    assert thm2_outstar_value((0, 0), [(1, 0), (0, 1)]) is STAR
    assert thm2_outstar_value((0, 0), [(2, 0), (1, 0), (0, 1)]) is switch(4, 0)
    assert thm2_outstar_value((0, 0), [(0, 0)]) is None


def test_k12_examples():
    assert thm3_k12_value(K12Config((3, 1), (1, 0), (0, 1))) is integer(1)
    assert thm3_k12_value(K12Config((0, 0), (2, 1), (1, 2))) is switch(2, -2)
    assert thm3_k12_value(K12Config((1, 0), (0, 3), (0, 0))) is ZERO


def test_k12_leaf_order_does_not_matter():
    cfg = K12Config((2, 1), (0, 1), (1, 0))
    assert thm3_case(cfg) == thm3_case(cfg.mirrored())
    assert str(cfg) == "[(2,1),[0,1],[1,0]]"


def test_instar_examples():
    assert thm4_instar_value((1, 0), [(1, 0)]) is integer(3)
    assert thm4_instar_value((0, 0), [(0, 2), (2, 0)]) is STAR
    assert thm4_instar_value((0, 0), [(4, 0), (0, 1)]) is integer(6)


def test_p3_examples():
    for c in range(1, 5):
        assert thm5_p3_value((0, 0), (1, 0), (0, c)) is ZERO
    assert thm5_p3_value((1, 0), (0, 2), (0, 1)) is integer(-5)
    assert thm5_p3_value((2, 0), (0, 0), (0, 3)) is switch(0, -4)


def test_green_formulas():
    assert green_star_value("in", 0, [4, 4]) == 0
    assert green_star_value("out", 9, [3, 5]) == 6
    assert green_star_value("out", 7, []) == 0
    assert green_path_value([1, 2]) == 2
    assert green_path_value([4, 0, 7, 0]) == 0
    assert green_path_value([1, 2, 3, 4, 5]) == 6
    with pytest.raises(ValueError):
        green_star_value("sideways", 0, [])


def test_triple_and_tournament_formulas():
    assert tt_triple_outcome(0, 0, 0) is Outcome.P
    assert tt_triple_outcome(9, 4, 4) is Outcome.P
    assert tt_triple_outcome(0, 1, 2) is Outcome.N
    assert [tournament_value(n) for n in (1, 3, 4)] == [1, 3, 4]


def test_green_path_formula_matches_solver_on_five_vertices():
    heaps = (1, 2, 3, 4, 5)
    assert grundy(green_position("path", heaps, n=5)) == green_path_value(heaps)


def test_tournament_sink_pebble_is_heap_n_minus_one():
    for n in range(1, 7):
        p = green_position("transitive_tournament", [0] * (n - 1) + [1], n=n)
        assert grundy(p) == n - 1


# --- values the solver pins down where the closed forms disagree -------------


def test_k12_value_of_small_mixed_center():
    # Left has no move; Right's only move leaves Left a move and Right none
    p = K12Config((1, 2), (1, 0), (0, 1)).position()
    assert game_value(p) is ZERO


def test_k12_case_two_rounds_up_for_odd_even():
    # a=3, b=2: the solver gives the ceiling of (a-b)/2
    p = K12Config((3, 2), (1, 0), (0, 1)).position()
    assert game_value(p) is integer(1)


# --- symmetry -----------------------------------------------------------------


def _mirror(pairs):
    return [(r, b) for b, r in pairs]


def test_mirrored_star_configurations_negate():
    pairs = [(b, r) for b in range(3) for r in range(3)]
    checked = 0
    for family, fn in (("out_star", thm2_outstar_value), ("in_star", thm4_instar_value)):
        for n in (1, 2):
            for cfg in itertools.product(pairs, repeat=n + 1):
                if fn(cfg[0], cfg[1:]) is None:
                    continue
                p = build_family(family, [(*x, 0) for x in cfg], n=n)
                q = build_family(family, [(*x, 0) for x in _mirror(cfg)], n=n)
                assert game_value(q) is negate(game_value(p))
                checked += 1
    assert checked > 20


@pytest.mark.parametrize("family, n, sources", [
    ("path", 4, [0]),
    ("out_star", 3, [0]),
    ("in_star", 3, [1, 2, 3]),
    ("transitive_triple", None, [0]),
])
def test_source_pebbles_are_superfluous(family, n, sources):
    rng = random.Random(family)
    count, _ = family_arcs(family, n)
    for _ in range(40):
        heaps = [rng.randint(0, 3) for _ in range(count)]
        base = grundy(green_position(family, heaps, n=n))
        extra = list(heaps)
        for s in sources:
            extra[s] += rng.randint(1, 3)
        assert grundy(green_position(family, extra, n=n)) == base


# --- reduction ----------------------------------------------------------------


def _tree(n, arcs, heaps):
    return Position.make(n, arcs, [(0, 0, h) for h in heaps])


def test_reduce_in_star_is_single_arc():
    t = green_position("in_star", [5, 1, 2, 3], n=3)
    d = reduce_tree(t)
    assert d.vertex_count == 2 and d.arcs == ((0, 1),)
    assert d.pebbles == ((0, 0, 0), (0, 0, 5))


def test_reduce_path_is_out_star_on_even_vertices():
    t = green_position("path", [1, 2, 3, 4, 5], n=5)
    d = reduce_tree(t)
    assert d.arcs == ((0, 1), (0, 2))
    assert d.pebbles == ((0, 0, 0), (0, 0, 2), (0, 0, 4))
    assert grundy(d) == grundy(t)


# the branching tree drawn in the worked reduction example; labels left to right
BRANCHING_TREE_ARCS = [(0, 1), (2, 1), (1, 3), (3, 4), (4, 5), (4, 6), (5, 7), (8, 3), (4, 9), (1, 10)]


def test_reduce_branching_tree():
    t = _tree(11, BRANCHING_TREE_ARCS, [0] * 11)
    assert odd_reachable(t) == {1, 3, 4, 5, 6, 7, 9}
    d = reduce_tree(t)
    assert d.vertex_count == 8
    apex = {(0, v) for v in range(1, 8)}
    assert set(d.arcs) == apex | {(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (3, 7)}


def test_reduce_rejects_bad_input():
    with pytest.raises(PositionError):
        reduce_tree(Position.make(3, [(0, 1)], [(0, 0, 1)] * 3))
    with pytest.raises(PositionError):
        reduce_tree(build_family("single_arc", [(1, 0, 0), (0, 0, 0)]))


def test_reduction_breaks_when_parities_mix():
    # vertex 2 is one step from source 4 and two steps from source 0
    arcs = [(0, 1), (1, 2), (2, 3), (4, 2)]
    t = _tree(5, arcs, [0, 0, 0, 1, 0])
    assert grundy(t) == 0
    assert grundy(reduce_tree(t)) == 1


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 3), (4, 8), (5, 27)])
def test_oriented_tree_counts(n, count):
    assert len(oriented_trees(n)) == count


def test_reduction_holds_on_trees_with_unique_source_parity():
    # wherever each vertex sits at a single parity from all sources, D(T) matches T
    rng = random.Random(2)
    for n in range(1, 6):
        for arcs in oriented_trees(n):
            probe = _tree(n, arcs, [0] * n)
            if not _single_parity(probe):
                continue
            for _ in range(8):
                heaps = [rng.randint(0, 2) for _ in range(n)]
                t = _tree(n, arcs, heaps)
                assert grundy(reduce_tree(t)) == grundy(t)


def _single_parity(t):
    g = t.graph
    seen = set()
    todo = [(v, 0) for v in range(t.vertex_count) if not g.in_nbrs[v]]
    seen.update(todo)
    while todo:
        v, par = todo.pop()
        for w in g.out_nbrs[v]:
            if (w, par ^ 1) not in seen:
                seen.add((w, par ^ 1))
                todo.append((w, par ^ 1))
    return all(not ((v, 0) in seen and (v, 1) in seen) for v in range(t.vertex_count))


# --- verifier -------------------------------------------------------------------


def test_verify_small_bounds():
    r = verify("thm1", {"k": 3})
    assert r.cases_checked == 7 and r.passed
    r = verify("green_path", {"heap": 3})
    assert r.passed and r.cases_checked > 0


def test_verify_unknown_ids():
    with pytest.raises(KeyError):
        verify("thm9")
    with pytest.raises(KeyError):
        verify("thm1", {"leaves": 2})


def test_verify_records_budget_skips():
    from blocking_pebbles.solver import Solver

    r = verify("thm5", {"per_vertex": 2}, Solver(budget=3))
    assert r.skipped and r.cases_checked + len(r.skipped) > 0


def test_verify_report_lines_are_tab_separated():
    r = verify("tt_triple", {"heap": 1})
    lines = r.lines()
    assert len(lines) == 8
    assert all(line.count("\t") == 4 for line in lines)
    assert lines[0] == "tt_triple\t(0,0,0)\tP\tP\tyes"


def test_verify_tournament_records_uniform_fit():
    r = verify("tournament")
    assert len(r.mismatches) == 5
    assert r.passed
    assert any("n-1 holds uniformly" in note for note in r.notes)


def test_verify_thm3_reports_red_leaf_reading():
    r = verify("thm3", {"per_vertex": 2})
    assert r.discrepancies
    assert any("red-leaf reading" in note for note in r.notes)


def test_nimber_helper_agrees_with_grundy_on_green_star():
    p = green_position("out_star", [2, 1, 3], n=2)
    assert game_value(p) is nimber(grundy(p))
