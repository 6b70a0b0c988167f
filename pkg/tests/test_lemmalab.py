import json

import pytest

from pathwheel.graphcore import Graph, clique_union, complete, complete_multipartite, cycle, empty, path, star
from pathwheel.lemmalab import (
    EXHAUSTIVE_LEMMAS,
    LEMMA_IDS,
    RANDOM_LEMMAS,
    Exhaustive,
    LemmaInstance,
    Randomized,
    check_conclusion,
    check_hypothesis,
    evaluate,
    generate_random,
    parse_corpus,
    run_suite,
)

K33 = complete_multipartite([3, 3])
# X = {0,1,2}, rest {3,4,5}; only 0-3 is an edge
SPARSE6 = Graph.from_edges(6, [(0, 3)])
# two K2 components at 5-6 and 7-8; 0..4 isolated
TWO_K2_PLUS5 = Graph.from_edges(9, [(5, 6), (7, 8)])


def inst(lemma, g, **kw):
    return LemmaInstance(lemma, g, **kw)


POSITIVE = [
    inst("L2.1", cycle(5), n=4),
    inst("L2.1", complete(4), n=4),
    inst("L2.1", K33, n=6),
    inst("L2.2", star(5), x=1, n=2),
    inst("L2.2", complete(4), x=0, n=4),
    inst("L2.2", cycle(5), x=0, n=3),
    inst("L2.3", path(4), x=0, y=3, n=3),
    inst("L2.3", complete(4), x=0, y=1, n=4),
    inst("L2.3", cycle(5), x=0, y=2, n=3),
    inst("L2.4", path(4), x=0, y=3, n=4),
    inst("L2.4", complete(4), x=0, y=1, n=6),
    inst("L2.4", cycle(6), x=0, y=3, n=4),
    inst("L2.5", path(4), n=3),
    inst("L2.5", complete(4), n=7),
    inst("L2.5", cycle(6), n=5),
    inst("L2.6", star(5), x=0, n=2),
    inst("L2.6", complete(4), x=0, n=4),
    inst("L2.6", cycle(5), x=0, n=3),
    inst("L2.7", cycle(5), x=0, n=3),
    inst("L2.7", complete(4), x=0, n=5),
    inst("L2.7", K33, x=0, n=4),
    inst("L3", clique_union([3, 3]), m=6),
    inst("L3", clique_union([2, 2, 2]), m=4),
    inst("L3", empty(3), m=3),
    inst("L4.1", star(4), n=4),
    inst("L4.1", empty(5), n=5),
    inst("L4.1", clique_union([2, 2]), n=4),
    inst("L4.2", empty(3), n=2),
    inst("L4.2", star(5), n=4),
    inst("L4.2", clique_union([2, 2, 2]), n=3),
    inst("L4.3", star(5), n=4),
    inst("L4.3", path(6), n=4),
    inst("L4.3", clique_union([3, 3]), n=4),
    inst("L5", empty(3), graph2=empty(1), p=3, m=3),
    inst("L5", empty(4), graph2=empty(2), p=4, m=6),
    inst("L5", path(3), graph2=empty(1), p=2, m=3),
    inst("L6", empty(5), n=2, m=5),
    inst("L6", clique_union([2, 2, 2, 2]), n=3, m=7),
    inst("L6", empty(7), n=3, m=7),
    inst("L7", empty(5), X={0, 1, 2}, p=2, m=3),
    inst("L7", empty(6), X={0, 1, 2}, p=3, m=6),
    inst("L7", SPARSE6, X={0, 1, 2}, p=3, m=5),
    inst("L8", empty(7), X1={0, 1, 2}, X2={2, 3, 4}, p=2, m=7),
    inst("L8", empty(7), X1={0, 1, 2}, X2={2, 3, 4}, p=2, m=3),
    inst("L8", empty(8), X1={0, 1, 2}, X2={3, 4, 5}, p=2, m=8),
    inst("L9", TWO_K2_PLUS5, R={5, 6, 7, 8}, X1={0, 1, 2}, X2={2, 3, 4}, p=4, q=5, m=8),
    inst("L9", TWO_K2_PLUS5, R={5, 6, 7, 8}, X1={0, 1, 2}, X2={2, 3, 4}, p=4, q=5, m=3),
    inst("L9", TWO_K2_PLUS5, R={5, 6, 7, 8}, X1={0, 1, 2}, X2={2, 3, 4}, p=4, q=3, m=5),
]

NEGATIVE = [
    inst("L2.1", path(4), n=2),
    inst("L2.1", cycle(5), n=5),
    inst("L2.1", complete(2), n=2),
    inst("L2.2", cycle(5), x=0, n=4),
    inst("L2.2", empty(3), x=0, n=2),
    inst("L2.2", path(3), x=1, n=3),
    inst("L2.3", path(4), x=0, y=2, n=3),
    inst("L2.3", cycle(5), x=0, y=1, n=4),
    inst("L2.3", Graph.from_edges(3, [(0, 1)]), x=0, y=1, n=2),
    inst("L2.4", path(4), x=0, y=3, n=5),
    inst("L2.4", path(4), x=0, y=1, n=2),
    inst("L2.4", empty(3), x=0, y=1, n=2),
    inst("L2.5", path(4), n=4),
    inst("L2.5", clique_union([2, 2]), n=2),
    inst("L2.5", complete(2), n=2),
    inst("L2.6", cycle(5), x=0, n=4),
    inst("L2.6", star(5), x=0, n=3),
    inst("L2.6", empty(3), x=0, n=2),
    inst("L2.7", cycle(5), x=0, n=4),
    inst("L2.7", path(4), x=0, n=2),
    inst("L2.7", complete(4), x=0, n=6),
    inst("L3", complete(4), m=4),
    inst("L3", clique_union([3, 1]), m=4),
    inst("L3", clique_union([2, 2]), m=5),
    inst("L4.1", path(4), n=4),
    inst("L4.1", star(4), n=3),
    inst("L4.1", empty(3), n=4),
    inst("L4.2", path(5), n=4),
    inst("L4.2", empty(4), n=4),
    inst("L4.2", complete(3), n=2),
    inst("L4.3", complete(5), n=4),
    inst("L4.3", star(5), n=5),
    inst("L4.3", star(4), n=4),
    inst("L5", path(3), graph2=empty(1), p=4, m=3),
    inst("L5", empty(3), graph2=empty(1), p=3, m=5),
    inst("L5", empty(3), graph2=empty(0), p=3, m=3),
    inst("L6", clique_union([2, 2]), n=2, m=5),
    inst("L6", clique_union([2, 2, 2, 2]), n=3, m=6),
    inst("L6", clique_union([3, 3, 3]), n=3, m=7),
    inst("L7", star(5), X={1, 2, 3}, p=2, m=3),
    inst("L7", empty(5), X={0, 1}, p=2, m=3),
    inst("L7", empty(5), X={0, 1, 2}, p=3, m=3),
    inst("L8", empty(7), X1={0, 1, 2}, X2={1, 2, 3}, p=2, m=3),
    inst("L8", empty(7), X1={0, 1, 2}, X2={3, 4, 5, 6}, p=2, m=3),
    inst("L8", empty(7), X1={0, 1, 2}, X2={2, 3, 4}, p=3, m=3),
    inst("L9", TWO_K2_PLUS5, R={5, 6, 7, 8}, X1={0, 1, 2}, X2={2, 3, 4}, p=4, q=6, m=3),
    inst("L9", TWO_K2_PLUS5, R={4, 5, 6, 7, 8}, X1={0, 1, 2}, X2={2, 3, 4}, p=4, q=3, m=3),
    inst("L9", TWO_K2_PLUS5, R={5, 6, 7, 8}, X1={0, 1, 2}, X2={2, 3, 4}, p=5, q=5, m=3),
]


@pytest.mark.parametrize("i", POSITIVE, ids=lambda i: i.lemma)
def test_positive_instances(i):
    assert check_hypothesis(i)
    assert check_conclusion(i)


@pytest.mark.parametrize("i", NEGATIVE, ids=lambda i: i.lemma)
def test_negative_instances(i):
    assert not check_hypothesis(i)


def test_every_lemma_has_three_of_each():
    for lemma in LEMMA_IDS:
        assert sum(i.lemma == lemma for i in POSITIVE) >= 3, lemma
        assert sum(i.lemma == lemma for i in NEGATIVE) >= 3, lemma


def test_documented_examples():
    assert evaluate(inst("L2.1", cycle(5), n=4)) == evaluate(inst("L3", clique_union([3, 3]), m=6))
    v = evaluate(inst("L4.1", star(4), n=4))
    assert v.hypothesis_holds and v.conclusion_holds


def test_conclusion_can_fail():
    # hypothesis false, conclusion false: no long path from an endpoint of 2K2
    i = inst("L2.2", clique_union([2, 2]), x=0, n=3)
    assert not check_hypothesis(i) and not check_conclusion(i)


def test_field_validation():
    with pytest.raises(ValueError):
        LemmaInstance("L2.1", cycle(5))
    with pytest.raises(ValueError):
        LemmaInstance("L2.1", cycle(5), n=4, m=3)
    with pytest.raises(ValueError):
        LemmaInstance("L2.3", cycle(5), x=1, y=1, n=3)
    with pytest.raises(ValueError):
        LemmaInstance("L2.2", cycle(5), x=5, n=3)
    with pytest.raises(ValueError):
        LemmaInstance("L7", empty(3), X={0, 3}, p=2, m=3)
    with pytest.raises(ValueError):
        LemmaInstance("L10", cycle(5), n=3)


@pytest.mark.parametrize("i", POSITIVE[::4] + NEGATIVE[::5], ids=lambda i: i.lemma)
def test_round_trip(i):
    d = i.to_dict()
    assert LemmaInstance.from_dict(json.loads(json.dumps(d))) == i


def test_parse_corpus():
    assert parse_corpus("exhaustive:7") == Exhaustive(7)
    assert parse_corpus("random:1000:1") == Randomized(1000, 1, 16)
    assert parse_corpus("random:10:2:9") == Randomized(10, 2, 9)
    for bad in ["exhaustive", "exhaustive:0", "random:5", "mixed:1", "random:a:b"]:
        with pytest.raises(ValueError):
            parse_corpus(bad)


@pytest.mark.parametrize("lemma", EXHAUSTIVE_LEMMAS)
def test_small_exhaustive_runs_clean(lemma):
    rep = run_suite(lemma, Exhaustive(5))
    assert rep.violations == []
    assert rep.resource_errors == 0
    assert rep.hypothesis_true > 0


@pytest.mark.parametrize("lemma", RANDOM_LEMMAS)
def test_small_random_runs_clean(lemma):
    rep = run_suite(lemma, Randomized(40, 7))
    assert rep.violations == [] and rep.starved == 0
    assert rep.instances == rep.hypothesis_true == 40


def test_random_generation_is_seeded():
    a, _, _ = generate_random("L7", Randomized(20, 3))
    b, _, _ = generate_random("L7", Randomized(20, 3))
    c, _, _ = generate_random("L7", Randomized(20, 4))
    assert a == b
    assert a != c


def test_exhaustive_rejected_for_structured_lemmas():
    with pytest.raises(ValueError):
        run_suite("L5", Exhaustive(3))
    with pytest.raises(ValueError):
        run_suite("L99", Exhaustive(3))


def test_suite_workers_agree():
    a = run_suite("L2.4", Exhaustive(5), workers=1).to_dict()
    b = run_suite("L2.4", Exhaustive(5), workers=2).to_dict()
    assert a == b
