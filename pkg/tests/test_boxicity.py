from random import Random

import pytest

from boxagree import (
    Graph,
    adiga_lower_bound,
    boxicity_report,
    decide_boxicity_leq,
    intersection_graph,
    is_interval_graph,
    roberts_upper_bound,
)
from boxagree import fixtures

from helpers import complete, cycle, path, random_graph


def test_adiga_examples():
    assert adiga_lower_bound(fixtures.k_partite(3)) == 3
    assert adiga_lower_bound(cycle(5)) == 2
    two_edges = Graph(4, [(1, 2), (3, 4)])
    assert adiga_lower_bound(two_edges) == 1


def test_adiga_on_pair_partite_exact():
    for d in range(1, 9):
        assert adiga_lower_bound(fixtures.k_partite(d)) == d


def test_adiga_rejects_universal_vertex():
    with pytest.raises(ValueError):
        adiga_lower_bound(fixtures.load("w4"))


def test_roberts_examples():
    assert roberts_upper_bound(complete(7)) == 0
    assert roberts_upper_bound(fixtures.expected_graph("fig38a")) == 4
    assert roberts_upper_bound(fixtures.k_partite(4)) == 4


def test_decide_five_cycle():
    c5 = cycle(5)
    no1 = decide_boxicity_leq(c5, 1)
    yes2 = decide_boxicity_leq(c5, 2)
    assert no1.status == "no"
    assert yes2.status == "yes"
    assert intersection_graph(yes2.witness) == c5


def test_decide_k_partite_three():
    k32 = fixtures.k_partite(3)
    assert decide_boxicity_leq(k32, 2).status == "no"
    yes3 = decide_boxicity_leq(k32, 3)
    assert yes3.status == "yes"
    assert intersection_graph(yes3.witness) == k32


def test_decide_k_partite_four_no_at_three():
    assert decide_boxicity_leq(fixtures.k_partite(4), 3).status == "no"


def test_decide_fig38_graphs_at_two():
    for name in ("fig38a", "fig38b"):
        g = fixtures.expected_graph(name)
        decision = decide_boxicity_leq(g, 2)
        assert decision.status == "yes"
        assert intersection_graph(decision.witness) == g
        assert decision.witness.dimension == 2


def test_decide_rejects_complete_and_bad_d():
    with pytest.raises(ValueError):
        decide_boxicity_leq(complete(3), 2)
    with pytest.raises(ValueError):
        decide_boxicity_leq(cycle(4), 0)


def test_decide_monotone_in_d():
    rng = Random(30)
    for _ in range(20):
        g = random_graph(rng, max_n=7)
        if g.is_complete():
            continue
        statuses = [decide_boxicity_leq(g, d).status for d in (1, 2, 3)]
        assert "inconclusive" not in statuses
        first_yes = statuses.index("yes") if "yes" in statuses else len(statuses)
        assert all(s == "no" for s in statuses[:first_yes])
        assert all(s == "yes" for s in statuses[first_yes:])


def test_budget_exhaustion_is_inconclusive():
    g = fixtures.expected_graph("fig38a")
    decision = decide_boxicity_leq(g, 2, budget=10)
    assert decision.status == "inconclusive"
    assert decision.witness is None


def test_report_path_is_interval():
    rep = boxicity_report(path(3))
    assert rep.exact == 1
    assert intersection_graph(rep.witness) == path(3)


def test_report_complete_graph_is_zero():
    rep = boxicity_report(complete(5))
    assert (rep.lower, rep.upper, rep.exact) == (0, 0, 0)


def test_report_fig38b_exact_two():
    rep = boxicity_report(fixtures.expected_graph("fig38b"))
    assert rep.exact == 2
    assert rep.lower <= 2 <= rep.upper


def test_report_k_partite_four_without_search():
    rep = boxicity_report(fixtures.k_partite(4))
    assert rep.exact == 4
    assert rep.lower == rep.upper == 4
    assert any("without search" in note for note in rep.notes)


def test_report_fig38c_settles_at_three():
    rep = boxicity_report(fixtures.load("fig38c"))
    assert rep.exact == 3
    assert any("no 2-box realization" in note for note in rep.notes)


def test_report_bounds_sandwich_random():
    rng = Random(31)
    for _ in range(15):
        g = random_graph(rng, max_n=7)
        rep = boxicity_report(g)
        assert rep.lower <= rep.upper
        if rep.exact is not None:
            assert rep.lower <= rep.exact <= rep.upper
            if rep.witness is not None:
                assert intersection_graph(rep.witness) == g


def test_induced_subgraph_monotonicity():
    rng = Random(32)
    for _ in range(12):
        g = random_graph(rng, max_n=7)
        rep = boxicity_report(g)
        if rep.exact is None:
            continue
        labels = sorted(rng.sample(range(1, g.n + 1), rng.randint(1, g.n)))
        sub = g.induced(labels)
        sub_rep = boxicity_report(sub)
        if sub_rep.exact is not None:
            assert sub_rep.exact <= rep.exact


def test_interval_filter_agrees_with_search():
    rng = Random(33)
    for _ in range(25):
        g = random_graph(rng, max_n=6)
        if g.is_complete():
            continue
        assert (decide_boxicity_leq(g, 1).status == "yes") == is_interval_graph(g)


def test_boxicity_two_graphs_get_exact_planar_coordinates():
    g = fixtures.expected_graph("fig38a")
    witness = decide_boxicity_leq(g, 2).witness
    assert witness.n == 8
    assert all(b.dimension == 2 for b in witness.boxes)
