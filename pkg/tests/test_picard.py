import pytest

from chipfire import (Divisor, PreconditionError, WeightedMultigraph,
                      count_pic0, count_picb0, degree,
                      enumerate_coset_representatives_bruteforce, equivalent,
                      is_balanced, pic0_structure, picb0_structure)


def test_pic0_structure(triangle, tw):
    assert pic0_structure(triangle).invariant_factors == (3,)
    assert pic0_structure(tw).invariant_factors == (8,)
    single = WeightedMultigraph.build(["v"], [])
    assert pic0_structure(single).invariant_factors == ()


def test_picb0_structure(triangle, tw):
    assert picb0_structure(tw).invariant_factors == (4,)
    assert picb0_structure(triangle) == pic0_structure(triangle)
    banana = WeightedMultigraph.build(
        ["u", "v"], [("e1", ("u", "v")), ("e2", ("u", "v"))],
        {"u": 2}, {"e1": 2, "e2": 2})
    assert picb0_structure(banana).invariant_factors == (2,)


def test_picb0_requires_pleasant(tw):
    bad = WeightedMultigraph.build(
        tw.vertices, [(e.id, e.ends) for e in tw.edges], {"v1": 2})
    with pytest.raises(PreconditionError):
        picb0_structure(bad)


def test_counts(triangle, tw, four_edge_pleasant):
    assert count_pic0(tw) == 8
    assert count_pic0(triangle) == 3
    assert count_pic0(four_edge_pleasant) == 16
    assert count_picb0(tw) == 4
    assert count_picb0(triangle) == count_pic0(triangle)
    assert count_picb0(four_edge_pleasant) == 8


def test_bruteforce_balanced_degree1(tw):
    reps = enumerate_coset_representatives_bruteforce(tw, 1, balanced_only=True)
    assert len(reps) == 4
    assert all(degree(D) == 1 and is_balanced(tw, D) for D in reps)
    expected = [Divisor({"v1": 0, "v2": -1, "v3": 2}),
                Divisor({"v1": 0, "v2": 0, "v3": 1}),
                Divisor({"v1": 2, "v2": -1, "v3": 0}),
                Divisor({"v1": 0, "v2": 1, "v3": 0})]
    for want in expected:
        assert sum(1 for D in reps if equivalent(tw, D, want)) == 1


def test_bruteforce_matches_structure(tw, triangle):
    for g in (tw, triangle):
        reps = enumerate_coset_representatives_bruteforce(g, 0)
        assert len(reps) == pic0_structure(g).order


def test_single_weighted_vertex():
    g = WeightedMultigraph.build(["v"], [], {"v": 3})
    assert enumerate_coset_representatives_bruteforce(
        g, 0, balanced_only=True) == [Divisor({"v": 0})]


def test_disconnected_direct_sum(tw):
    two = WeightedMultigraph.build(
        [*tw.vertices, "w1", "w2", "w3"],
        [(e.id, e.ends) for e in tw.edges]
        + [("x", ("w1", "w2")), ("y", ("w1", "w3")), ("z", ("w2", "w3"))],
        dict(tw.vertex_weight), dict(tw.edge_weight))
    assert pic0_structure(two).order == 8 * 3
    assert picb0_structure(two).order == 4 * 3
    assert count_pic0(two) == 24 and count_picb0(two) == 12
