from chipfire import (Divisor, chip_fire, degree, equivalent, is_balanced,
                      laplacian, unbalancing_class)
from chipfire.divisors import LaplacianSystem


def test_degree(tw):
    assert degree(Divisor({"v1": -2, "v2": -3, "v3": 5})) == 0
    assert degree(Divisor.zero(tw)) == 0
    assert degree(Divisor({"v1": 0, "v2": -1, "v3": 2})) == 1


def test_is_balanced(four_edge_pleasant, tw):
    g = four_edge_pleasant
    assert is_balanced(g, Divisor({"v1": 2, "v2": 7, "v3": -5}))
    assert not is_balanced(g, Divisor({"v1": 1, "v2": 0, "v3": 0}))
    assert not is_balanced(tw, Divisor({"v1": 1, "v2": -1, "v3": 1}))
    assert is_balanced(tw, Divisor({"v1": 0, "v2": 0, "v3": 1}))


def test_unbalancing_class(four_edge_pleasant, tw):
    g = four_edge_pleasant
    classes = {tuple(sorted(unbalancing_class(g, Divisor({"v1": a})).residues.items()))
               for a in range(-4, 5)}
    assert len(classes) == 2
    assert unbalancing_class(tw, Divisor({"v1": 4, "v2": 2, "v3": -1})).residues \
        == {"v1": 0, "v2": 0, "v3": 0}
    assert unbalancing_class(tw, Divisor({"v1": 1, "v2": 5, "v3": -2})).residues \
        == {"v1": 1, "v2": 0, "v3": 0}


def test_laplacian(four_edge_pleasant, triangle):
    D = laplacian(four_edge_pleasant, {"v1": 0, "v2": 0, "v3": 1})
    assert D.vector(four_edge_pleasant) == [-2, -3, 5]
    assert laplacian(triangle, {"v1": 7, "v2": 7, "v3": 7}).vector(triangle) \
        == [0, 0, 0]
    assert laplacian(triangle, {"v1": 1, "v2": 0, "v3": 0}).vector(triangle) \
        == [2, -1, -1]


def test_chip_fire_matches_indicator(tw):
    for v in tw.vertices:
        f = {u: 1 if u == v else 0 for u in tw.vertices}
        assert chip_fire(tw, v).vector(tw) == laplacian(tw, f).vector(tw)


def test_loops_contribute_nothing():
    from chipfire import WeightedMultigraph
    g = WeightedMultigraph.build(["u", "v"],
                                 [("e", ("u", "v")), ("l", ("u", "u"))])
    assert laplacian(g, {"u": 1, "v": 0}).vector(g) == [1, -1]


def test_equivalent_with_certificate(tw):
    D1 = Divisor({"v1": 2, "v2": -2, "v3": 1})
    D2 = Divisor({"v1": 0, "v2": 1, "v3": 0})
    cert = equivalent(tw, D1, D2)
    assert cert is not None
    f = cert.potential
    # certificate value is 0 at the first vertex of the component
    assert f["v1"] == 0
    assert laplacian(tw, f).vector(tw) == (D1 - D2).vector(tw)


def test_equivalent_reflexive(tw):
    D = Divisor({"v1": 1, "v2": 2, "v3": 3})
    cert = equivalent(tw, D, D)
    assert cert is not None and set(cert.potential.values()) == {0}


def test_inequivalent_representatives(tw):
    assert equivalent(tw, Divisor({"v1": 0, "v2": 0, "v3": 1}),
                      Divisor({"v1": 0, "v2": -1, "v3": 2})) is None


def test_degree_mismatch_is_not_equivalent(tw):
    assert equivalent(tw, Divisor.zero(tw), Divisor({"v1": 1})) is None


def test_class_key_separates_classes(tw):
    sys = LaplacianSystem(tw)
    D1 = Divisor({"v1": 2, "v2": -2, "v3": 1})
    D2 = Divisor({"v1": 0, "v2": 1, "v3": 0})
    D3 = Divisor({"v1": 0, "v2": 0, "v3": 1})
    assert sys.class_key(D1) == sys.class_key(D2)
    assert sys.class_key(D1) != sys.class_key(D3)
