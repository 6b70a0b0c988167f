import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_canonical, brute_has_wheel, dfs_longest_path
from pathwheel.detect import DetectorLimits, ResourceLimitError
from pathwheel.graphcore import (
    Graph,
    all_labeled_graphs,
    clique_union,
    complement,
    cycle,
    from_graph6,
    petersen,
)
from pathwheel.search import (
    SearchLimitError,
    all_graph_classes,
    canonical_code,
    canonical_form,
    confirm_ramsey,
    count_path_free,
    enum_connected_path_free,
    enum_path_free,
    verify_upper_bound,
)
from test_graphcore import graphs


def relabel(g, perm):
    return Graph.from_edges(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=7), st.randoms(use_true_random=False))
def test_canonical_code_invariant_under_relabelling(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    assert canonical_code(relabel(g, perm)) == canonical_code(g)
    assert canonical_form(g).size == g.size


def test_canonical_code_separates_classes_order_5():
    # two labelled graphs share a code iff their all-permutation minima agree
    codes = {}
    for g in all_labeled_graphs(5):
        codes.setdefault(brute_canonical(g), set()).add(canonical_code(g))
    assert len(codes) == 34
    assert all(len(v) == 1 for v in codes.values())
    assert len({next(iter(v)) for v in codes.values()}) == 34


def test_canonical_code_on_regular_graphs():
    p = petersen()
    rng = random.Random(3)
    perm = list(range(10))
    rng.shuffle(perm)
    assert canonical_code(relabel(p, perm)) == canonical_code(p)
    assert canonical_code(cycle(10)) != canonical_code(clique_union([5, 5]))


@pytest.mark.parametrize("k, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_graph_class_counts(k, count):
    classes = all_graph_classes(7)
    assert sum(1 for g in classes if g.order == k) == count


def test_graph_classes_match_networkx_atlas():
    nx = pytest.importorskip("networkx")
    from networkx.generators.atlas import graph_atlas_g

    expected = set()
    for h in graph_atlas_g()[1:]:
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        expected.add(canonical_code(g))
    assert expected == {canonical_code(g) for g in all_graph_classes(7)}


@pytest.mark.parametrize("n, max_order, count", [(3, 5, 2), (4, 4, 5), (4, 6, 7)])
def test_connected_catalogue_examples(n, max_order, count):
    assert len(list(enum_connected_path_free(n, max_order))) == count


@pytest.mark.parametrize("n, t, count", [(4, 5, 9), (3, 4, 3), (3, 2, 2), (2, 5, 1), (4, 6, 15)])
def test_enum_path_free_examples(n, t, count):
    assert count_path_free(n, t) == count
    assert len(list(enum_path_free(n, t))) == count


def test_enum_matches_labeled_brute_force():
    for n in range(2, 5):
        for t in range(1, 7):
            want = {
                brute_canonical(g)
                for g in all_labeled_graphs(t)
                if dfs_longest_path(g) < n
            }
            got = [brute_canonical(g) for g in enum_path_free(n, t)]
            assert len(got) == len(set(got)) == len(want), (n, t)
            assert set(got) == want


def test_connected_catalogue_is_connected_and_free():
    for g in enum_connected_path_free(5, 8):
        assert dfs_longest_path(g) < 5
        assert g.order <= 8


@pytest.mark.parametrize(
    "n, m, t, verified",
    [(3, 7, 9, True), (3, 7, 8, False), (4, 9, 11, True), (4, 9, 10, False)],
)
def test_verify_upper_examples(n, m, t, verified):
    rep = verify_upper_bound(n, m, t)
    assert rep.verified is verified
    if verified:
        assert rep.counterexample is None
        assert rep.graphs_enumerated == count_path_free(n, t)
    else:
        g = rep.counterexample
        assert dfs_longest_path(g) < n
        assert not brute_has_wheel(complement(g), m) if g.order <= 8 else True


def test_counterexample_for_3_7_is_four_edges():
    rep = verify_upper_bound(3, 7, 8)
    assert rep.counterexample == clique_union([2, 2, 2, 2])
    assert rep.to_dict()["counterexample"] == "G`?G?C"
    assert from_graph6("G`?G?C") == clique_union([2, 2, 2, 2])


@pytest.mark.parametrize(
    "n, m, R",
    [(2, 3, 4), (2, 4, 5), (3, 3, 7), (3, 4, 5), (3, 5, 7), (3, 6, 7), (4, 4, 7), (4, 5, 10)],
)
def test_small_regime_values_by_search(n, m, R):
    # R is the least t with the upper bound verified
    assert verify_upper_bound(n, m, R).verified
    assert not verify_upper_bound(n, m, R - 1).verified


def test_small_values_by_labeled_brute_force():
    # R(P_3, W_4) = 5 over every labelled graph on 4 vertices
    bad = [g for g in all_labeled_graphs(4) if dfs_longest_path(g) < 3 and not brute_has_wheel(complement(g), 4)]
    assert bad
    ok = all(
        dfs_longest_path(g) >= 3 or brute_has_wheel(complement(g), 4)
        for g in all_labeled_graphs(5)
    )
    assert ok


def test_workers_do_not_change_result():
    for args in [(3, 7, 8), (4, 9, 11), (4, 10, 12)]:
        a = verify_upper_bound(*args, workers=1)
        b = verify_upper_bound(*args, workers=2)
        assert a.to_dict() == b.to_dict()


def test_limits_are_reported():
    with pytest.raises(ResourceLimitError):
        verify_upper_bound(3, 7, 20, DetectorLimits(24, 16))
    with pytest.raises(SearchLimitError) as err:
        verify_upper_bound(4, 9, 11, budget=5)
    assert isinstance(err.value.progress, dict)
    with pytest.raises(ValueError):
        verify_upper_bound(1, 7, 5)


def test_confirm_ramsey():
    rep = confirm_ramsey(4, 9)
    assert rep.R == 11 and rep.upper_verified
    assert rep.witness.parts == (3, 3, 2, 2)
    d = rep.to_dict()
    assert d["witness_verified"] and "elapsed" not in d["upper"]
    with pytest.raises(ValueError):
        confirm_ramsey(4, 8)
