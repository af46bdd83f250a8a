import random
from itertools import combinations

import pytest

from regulab import catalog
from regulab.evenconn import (
    SFoldProduct,
    all_expressions,
    colon_graph,
    colon_ideal_of_power,
    default_edge_order,
    even_connected_pairs,
    find_even_connection,
    maximal_expression,
    ordered_generators,
    verify_ordered_colon_decomposition,
)
from regulab.graph import SimpleGraph, cycle_graph
from regulab.ideals import Monomial, edge_ideal, graph_of, polarize

P4 = SimpleGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
K3 = SimpleGraph("abc", [("a", "b"), ("a", "c"), ("b", "c")])


def test_sfold_product_validates_edges():
    with pytest.raises(ValueError):
        SFoldProduct(P4, [("a", "c")])
    m = SFoldProduct(P4, [("c", "b"), ("a", "b")])
    assert m.s == 2
    assert str(m.product()) == "a*b^2*c"
    assert m.distinct_edges() == [(("a", "b"), 1), (("b", "c"), 1)]


def test_even_connection_witnesses():
    m = SFoldProduct(P4, [("b", "c")])
    ec = find_even_connection(P4, m, "a", "d")
    assert ec.sequence == ("a", "b", "c", "d")
    assert ec.edge_uses == (("b", "c"),)
    assert ec.check(P4, m)

    c5 = catalog.get("C5")
    m2 = SFoldProduct(c5, [("u_1", "u_2")])
    ec2 = find_even_connection(c5, m2, "u_0", "u_3")
    assert ec2.sequence == ("u_0", "u_1", "u_2", "u_3")
    assert ec2.check(c5, m2)

    # square: a even-connected to itself through the opposite edge of K3
    m3 = SFoldProduct(K3, [("b", "c")])
    ec3 = find_even_connection(K3, m3, "a", "a")
    assert ec3 is not None and ec3.sequence[0] == ec3.sequence[-1] == "a"
    assert ec3.check(K3, m3)


def test_bare_edge_is_not_an_even_connection():
    # endpoints of a host edge are not even-connected just by that edge
    m = SFoldProduct(P4, [("a", "b")])
    assert find_even_connection(P4, m, "c", "d") is None


def test_multiplicity_bound_respected():
    # walking through bc twice needs bc twice in the multiset
    p6 = SimpleGraph("abcdef", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f")])
    m1 = SFoldProduct(p6, [("b", "c"), ("d", "e")])
    assert find_even_connection(p6, m1, "a", "f") is not None
    m2 = SFoldProduct(p6, [("b", "c"), ("b", "c")])
    assert find_even_connection(p6, m2, "a", "f") is None


def test_colon_graph_of_c5():
    host = catalog.get("C5")
    result = colon_graph(host, SFoldProduct(host, [("u_1", "u_2")]))
    assert result.new_edges == (("u_0", "u_3"),)
    assert result.squares == ()
    # dual route: same graph from pure ideal arithmetic + polarization
    pol, _ = polarize(colon_ideal_of_power(host, SFoldProduct(host, [("u_1", "u_2")])))
    assert set(graph_of(pol).edges()) == set(result.graph.edges())


def test_colon_graph_square_becomes_whisker():
    m = SFoldProduct(K3, [("b", "c")])
    result = colon_graph(K3, m)
    assert result.squares == ("a",)
    assert result.graph.has_edge("a", "a@1")


def test_colon_graph_matches_polarized_colon_ideal_randomly():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(3, 5)
        verts = [f"v{i}" for i in range(n)]
        edges = [e for e in combinations(verts, 2) if rng.random() < 0.6]
        g = SimpleGraph(verts, edges)
        if not edges:
            continue
        s = rng.randint(1, 2)
        multiset = [rng.choice(edges) for _ in range(s)]
        m = SFoldProduct(g, multiset)
        result = colon_graph(g, m)
        pol, _ = polarize(colon_ideal_of_power(g, m))
        assert set(graph_of(pol).edges()) == set(result.graph.edges())


def test_maximal_expression_prefers_early_edges():
    c4 = cycle_graph(4)  # edges v1v2, v1v4, v2v3, v3v4 in sorted order
    order = default_edge_order(c4)
    m = Monomial.of("v1", "v2", "v3", "v4")
    assert maximal_expression(m, order, 2) == (1, 0, 0, 1)
    vecs = all_expressions(m, order, 2)
    assert set(vecs) == {(1, 0, 0, 1), (0, 1, 1, 0)}
    assert maximal_expression(m, order, 2) == max(vecs)
    with pytest.raises(ValueError):
        maximal_expression(Monomial.of("v1", "v3"), order, 1)


def test_maximal_expression_agrees_with_enumeration():
    rng = random.Random(17)
    g = catalog.get("G_1")
    order = default_edge_order(g)
    for s in (1, 2):
        for gen in edge_ideal(g).power(s).gens:
            assert maximal_expression(gen, order, s) == max(all_expressions(gen, order, s))


def test_ordered_generators_descend():
    go = ordered_generators(catalog.get("C5"), 2)
    assert list(go.expressions) == sorted(go.expressions, reverse=True)
    assert len(go.generators) == len(edge_ideal(catalog.get("C5")).power(2).gens)
    assert str(go.generators[0]).startswith("u_0")


def test_ordered_colon_decomposition_p4():
    reports = verify_ordered_colon_decomposition(P4, 1)
    assert [r.holds for r in reports] == [True, True]
    assert [r.variables for r in reports] == [("a",), ("b",)]


def test_even_connected_pairs_cover_colon_quadrics():
    host = catalog.get("C5")
    m = SFoldProduct(host, [("u_1", "u_2"), ("u_3", "u_4")])
    pairs = even_connected_pairs(host, m)
    colon = colon_ideal_of_power(host, m)
    deg2 = {g for g in colon.gens if g.degree() == 2}
    predicted = {Monomial.of(u, v) for u, v in host.edges()} | {
        Monomial.of(u, v) for u, v in pairs
    }
    assert deg2 == predicted
