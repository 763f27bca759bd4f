import pytest

from chipfire import (BernardiReducer, Divisor, PreconditionError,
                      WeightedMultigraph, degree, enumerate_subweightings,
                      enumerate_trees, equivalent, expand_hat,
                      hat_tree_to_pair, is_balanced, laplacian,
                      orientation_divisor, torsor_act, tour, tour_forest,
                      tree_divisor, trivial_subweighting, weighted_genus)
from chipfire.bernardi import hat_reference_shift, reduce as bernardi_reduce

TW_ROOTS = (("v2",), {"v2": ("a", 1)})


def _tw_sub(tw, T, sigma):
    roots, starts = TW_ROOTS
    for ts in enumerate_subweightings(tw, T, roots=roots, starts=starts):
        if all(ts.sigma[e] == s for e, s in sigma.items()):
            return ts
    raise AssertionError("no such sub-weighting")


def test_tour_first_panel(triangle):
    O = tour(triangle, ("a", "b"), q="v2", e0="a")
    assert O.direction == {"a": ("v2", "v1"), "b": ("v1", "v3"),
                           "c": ("v2", "v3")}


def test_tour_third_panel(triangle):
    O = tour(triangle, ("b", "c"), q="v2", e0="a")
    assert O.direction == {"a": ("v1", "v2"), "b": ("v3", "v1"),
                           "c": ("v2", "v3")}


def test_tour_single_edge():
    g = WeightedMultigraph.build(["q", "v"], [("e", ("q", "v"))])
    O = tour(g, ("e",), q="q")
    assert O.direction == {"e": ("q", "v")}


def test_tour_rejects_non_tree(triangle):
    with pytest.raises(PreconditionError):
        tour(triangle, ("a",), q="v2")


def test_orientation_divisors(triangle):
    first = tour(triangle, ("a", "b"), q="v2", e0="a")
    third = tour(triangle, ("b", "c"), q="v2", e0="a")
    assert orientation_divisor(triangle, first).vector(triangle) == [0, -1, 1]
    assert orientation_divisor(triangle, third).vector(triangle) == [0, 0, 0]


def test_subweighting_counts(tw):
    roots, starts = TW_ROOTS
    sizes = {T: len(enumerate_subweightings(tw, T, roots=roots, starts=starts))
             for T in enumerate_trees(tw)}
    assert sizes == {("a", "b"): 4, ("a", "c"): 2, ("b", "c"): 2}


def test_balanced_subweightings(tw):
    roots, starts = TW_ROOTS
    bal = enumerate_subweightings(tw, ("a", "b"), balanced_only=True,
                                  roots=roots, starts=starts)
    assert sorted((ts.sigma["a"], ts.sigma["b"]) for ts in bal) \
        == [(1, 1), (2, 2)]


def test_sigma_balance_matches_divisor_balance(tw):
    roots, starts = TW_ROOTS
    for T in enumerate_trees(tw):
        everything = enumerate_subweightings(tw, T, roots=roots, starts=starts)
        flagged = enumerate_subweightings(tw, T, balanced_only=True,
                                          roots=roots, starts=starts)
        for ts in everything:
            assert (ts in flagged) == is_balanced(tw, tree_divisor(tw, ts))


def test_tree_divisors(tw):
    assert tree_divisor(tw, _tw_sub(tw, ("a", "b"), {"a": 2, "b": 2})) \
        .vector(tw) == [0, -1, 2]
    assert tree_divisor(tw, _tw_sub(tw, ("a", "b"), {"a": 1, "b": 1})) \
        .vector(tw) == [0, 0, 1]
    assert tree_divisor(tw, _tw_sub(tw, ("b", "c"), {"b": 2, "c": 1})) \
        .vector(tw) == [0, 1, 0]


def test_tree_divisor_degree(tw, four_edge_pleasant):
    for g in (tw, four_edge_pleasant):
        for T in enumerate_trees(g):
            for ts in enumerate_subweightings(g, T):
                assert degree(tree_divisor(g, ts)) == weighted_genus(g) - 1


def test_loop_contributes_its_weight():
    g = WeightedMultigraph.build(["v"], [("l", ("v", "v"))],
                                 edge_weight={"l": 2})
    ts = trivial_subweighting(g, ())
    assert tree_divisor(g, ts).vector(g) == [1]  # 2 - w(v)
    assert degree(tree_divisor(g, ts)) == weighted_genus(g) - 1


def test_hat_correspondence_tw(tw):
    hat = expand_hat(tw)
    shift = hat_reference_shift(tw)
    pairs = set()
    for hatT in enumerate_trees(hat.graph):
        ts = hat_tree_to_pair(tw, hat, hatT)
        pairs.add((ts.forest_edges, tuple(sorted(ts.sigma.items()))))
        DO = orientation_divisor(hat.graph, tour_forest(hat.graph, hatT))
        assert tree_divisor(tw, ts).vector(tw) == (DO - shift).vector(tw)
    assert len(pairs) == 8


def test_hat_tree_copy_choice_sweeps_sigma(tw):
    # fixing the rest of the tree, the chosen copy of edge "a" determines sigma
    hat = expand_hat(tw)
    sigmas = set()
    for copy in ("a#1", "a#2"):
        ts = hat_tree_to_pair(tw, hat, (copy, "b#1"))
        sigmas.add(ts.sigma["a"])
    assert sigmas == {1, 2}


def test_reduce_examples(tw):
    ts, cert = bernardi_reduce(tw, Divisor({"v1": 2, "v2": -2, "v3": 1}),
                               q="v2", e0="a")
    assert ts.forest_edges == ("b", "c")
    assert ts.sigma == {"a": 2, "b": 2, "c": 1}
    assert laplacian(tw, cert.potential).vector(tw) == [2, -3, 1]


def test_reduce_fixed_point(tw):
    ts0 = _tw_sub(tw, ("a", "b"), {"a": 1, "b": 1})
    reducer = BernardiReducer(tw, *TW_ROOTS)
    ts, cert = reducer.reduce(tree_divisor(tw, ts0))
    assert ts == ts0
    assert set(cert.potential.values()) == {0}


def test_reduce_unweighted_zero(triangle):
    ts, _ = bernardi_reduce(triangle, Divisor.zero(triangle), q="v2", e0="a")
    assert set(ts.forest_edges) == {"b", "c"}


def test_reduce_rejects_wrong_degree(tw):
    with pytest.raises(PreconditionError):
        bernardi_reduce(tw, Divisor.zero(tw))


def test_triangle_qorientable_divisors_exhaust_classes(triangle):
    divisors = [Divisor({"v1": 0, "v2": -1, "v3": 1}),
                Divisor({"v1": 1, "v2": -1, "v3": 0}),
                Divisor.zero(triangle)]
    for i, D1 in enumerate(divisors):
        for D2 in divisors[i + 1:]:
            assert equivalent(triangle, D1, D2) is None
    # three classes = whole degree-0 group of order 3
    from chipfire import pic0_structure
    assert pic0_structure(triangle).order == 3


def test_torsor_action(tw):
    reducer = BernardiReducer(tw, *TW_ROOTS)
    ts0 = _tw_sub(tw, ("a", "b"), {"a": 2, "b": 2})
    moved = torsor_act(tw, Divisor({"v1": 2, "v2": -1, "v3": -1}), ts0, reducer)
    assert moved.forest_edges == ("b", "c")
    assert moved.sigma == {"a": 2, "b": 2, "c": 1}
    assert torsor_act(tw, Divisor.zero(tw), ts0, reducer) == ts0
    with pytest.raises(PreconditionError):
        torsor_act(tw, Divisor({"v1": 1}), ts0, reducer)


def test_tour_covers_from_root(four_edge_pleasant):
    # the tour orientation lets every vertex be reached from the root
    g = four_edge_pleasant
    for T in enumerate_trees(g):
        O = tour(g, T, q="v1")
        reached = {"v1"}
        frontier = ["v1"]
        while frontier:
            v = frontier.pop()
            for eid, (tail, head) in O.direction.items():
                if tail == v and head not in reached:
                    reached.add(head)
                    frontier.append(head)
        assert reached == set(g.vertices)
