import pytest
from hypothesis import given, settings, strategies as st

from sigmix import (SignalType, Status, builtin_scenario, make_instance,
                    solve_exact, solve_greedy, type_score)
from sigmix.greedy import score_order


def test_type_score_values(seven):
    assert type_score(seven.types[2]) == pytest.approx(10 / 600)
    assert type_score(SignalType(1, 1, 1, 1)) == 1
    scores = [type_score(t) for t in seven.types]
    assert scores[4] == pytest.approx(12 / 525)
    assert max(scores) == scores[4]


def test_order_breaks_ties_by_id():
    inst = make_instance([2, 1, 2], [2, 1, 2], [1, 1, 1], 10, 10)
    assert score_order(inst) == [0, 1, 2]


def test_basic_case(basic):
    assert score_order(basic) == [2, 1, 0]
    sol = solve_greedy(basic)
    assert sol.mix.counts == (1, 0, 3)
    assert sol.quality == 32
    assert sol.status is Status.HEURISTIC
    assert sol.nodes_explored == 0


def test_single_type():
    sol = solve_greedy(builtin_scenario("single_type"))
    assert sol.mix.counts == (3,)
    assert sol.quality == 30


def test_cap_30():
    sol = solve_greedy(builtin_scenario("cap_study_30"))
    assert sol.mix.counts == (0, 5, 30)
    assert sol.quality == 325


def test_seven_types(seven):
    sol = solve_greedy(seven)
    assert sol.mix.counts == (0, 0, 10, 0, 20, 0, 0)
    assert sol.quality == 340


def test_greedy_can_be_suboptimal():
    # the higher-scored type blocks two of the lower-scored one
    inst = make_instance([5, 3], [4, 3], [1, 1], 6, 100)
    g, x = solve_greedy(inst), solve_exact(inst)
    assert g.mix.counts == (1, 0) and g.quality == 5
    assert x.mix.counts == (0, 2) and x.quality == 6


def test_continues_past_blocked_type(basic):
    # type 2 is skipped on energy but type 1 still fits afterwards
    assert solve_greedy(basic).mix.counts[0] == 1


def test_permutation_keeps_quality(seven):
    types = list(reversed(seven.types))
    permuted = seven.replace_types(types)
    assert solve_greedy(permuted).quality == solve_greedy(seven).quality


grid = st.integers(1, 50).map(lambda x: x / 10)


@st.composite
def instances(draw, min_types=1, max_types=5):
    k = draw(st.integers(min_types, max_types))
    q = draw(st.lists(st.integers(1, 20), min_size=k, max_size=k))
    e = draw(st.lists(st.integers(10, 500), min_size=k, max_size=k))
    t = draw(st.lists(grid, min_size=k, max_size=k))
    cap = draw(st.none() | st.integers(0, 10))
    return make_instance(q, e, t, draw(st.integers(10, 3000)),
                         draw(st.integers(5, 300)) / 10, per_type_cap=cap)


@given(instances())
def test_always_feasible(inst):
    sol = solve_greedy(inst)
    assert sol.totals.feasible
    assert sol == solve_greedy(inst)


@given(instances(max_types=1))
def test_single_type_is_optimal(inst):
    assert solve_greedy(inst).quality == solve_exact(inst).quality


@settings(deadline=None)
@given(instances(min_types=2), st.randoms(use_true_random=False))
def test_dominated_and_permutation_invariant(inst, rnd):
    g = solve_greedy(inst)
    assert g.quality <= solve_exact(inst).quality + 1e-9 * max(1, g.quality)
    types = list(inst.types)
    rnd.shuffle(types)
    # caps are uniform here, so reordering the list is harmless
    assert solve_greedy(inst.replace_types(types)).quality == pytest.approx(g.quality)
