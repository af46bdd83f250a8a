import random

import pytest

from regulab.graph import (
    SimpleGraph,
    are_isomorphic,
    clique_number,
    collapse_false_twins,
    complete_graph,
    contains_induced,
    cycle_graph,
    distance_partition,
    enumerate_induced,
    gap_pattern,
    graph_to_text,
    is_bipartite,
    is_chordal,
    is_diamond_free,
    is_gap_free,
    max_cliques,
    multiply_vertices,
    parse_graph_text,
    path_graph,
)


def test_text_round_trip():
    g = parse_graph_text("a b\nb c\nvertex d\n# comment\n")
    assert g.n == 4
    assert g.num_edges() == 2
    assert g.has_edge("a", "b") and not g.has_edge("a", "c")
    assert parse_graph_text(graph_to_text(g)) == g


def test_parse_rejects_malformed_line():
    with pytest.raises(ValueError, match="line 2"):
        parse_graph_text("a b\na b c\n")


def test_complement_of_c5_is_c5():
    c5 = cycle_graph(5)
    assert are_isomorphic(c5.complement(), c5) is not None


def test_gap_detection():
    assert not is_gap_free(gap_pattern())
    # P4: the two end edges are disjoint but the middle edge is induced
    assert is_gap_free(path_graph(4))
    assert is_gap_free(complete_graph(5))
    # C4 complement is a perfect matching, i.e. a gap
    assert not is_gap_free(cycle_graph(4).complement())


def test_gap_free_iff_complement_c4_free():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(4, 7)
        verts = [f"v{i}" for i in range(n)]
        edges = [
            (verts[i], verts[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.5
        ]
        g = SimpleGraph(verts, edges)
        expect = contains_induced(g.complement(), "Cycle", 4) is None
        assert is_gap_free(g) == expect


def test_diamond_detection():
    diamond = SimpleGraph("abcd", [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")])
    assert not is_diamond_free(diamond)
    # K4 has no INDUCED diamond
    assert is_diamond_free(complete_graph(4))
    assert is_diamond_free(cycle_graph(6))


def test_chordality_with_witnesses():
    res = is_chordal(cycle_graph(4))
    assert not res
    assert res.cycle is not None and len(res.cycle) >= 4
    res = is_chordal(path_graph(6))
    assert res and res.peo is not None
    # verify the PEO independently: each vertex simplicial in the remainder
    g = path_graph(6)
    remaining = set(g.vertices)
    for v in res.peo:
        nbrs = g.neighbors(v) & remaining
        for a in nbrs:
            for b in nbrs:
                assert a == b or g.has_edge(a, b)
        remaining.discard(v)
    assert not is_chordal(cycle_graph(5).complement())
    assert is_chordal(complete_graph(6))


def test_bipartite_with_witnesses():
    res = is_bipartite(cycle_graph(6))
    assert res and res.parts is not None
    a, b = res.parts
    for u, v in cycle_graph(6).edges():
        assert (u in a) != (v in a)
    res = is_bipartite(cycle_graph(5))
    assert not res
    assert res.odd_cycle is not None and len(res.odd_cycle) % 2 == 1


def test_clique_numbers():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(SimpleGraph("abc", [])) == 1
    assert max_cliques(complete_graph(3)) == [frozenset({"v1", "v2", "v3"})]


def test_induced_enumeration_dedupes_by_image():
    # C6 contains exactly 2 induced P4 per image set; one embedding reported each
    embs = enumerate_induced(cycle_graph(6), "Path", 4)
    images = [e.image() for e in embs]
    assert len(images) == len(set(images)) == 6


def test_multiply_collapse_round_trip():
    base = cycle_graph(5)
    g = multiply_vertices(base, {"v1": 3, "v4": 2})
    assert g.n == 5 + 2 + 1
    back, mult = collapse_false_twins(g)
    assert are_isomorphic(back, base) is not None
    assert sorted(mult.values()) == [1, 1, 1, 2, 3]


def test_multiplied_copies_inherit_neighborhood():
    g = multiply_vertices(path_graph(3), {"v2": 2})
    assert g.has_edge("v2^1", "v1") and g.has_edge("v2^2", "v3")
    assert not g.has_edge("v2^1", "v2^2")


def test_isomorphism_positive_and_negative():
    g = cycle_graph(5)
    h = SimpleGraph("pqrst", [("p", "q"), ("q", "r"), ("r", "s"), ("s", "t"), ("t", "p")])
    iso = are_isomorphic(g, h)
    assert iso is not None
    for u, v in g.edges():
        assert h.has_edge(iso[u], iso[v])
    assert are_isomorphic(g, path_graph(5)) is None
    assert are_isomorphic(g, cycle_graph(6)) is None


def test_distance_partition():
    g = path_graph(4)
    d = distance_partition(g, ["v1"])
    assert d == {"v1": 0, "v2": 1, "v3": 2, "v4": 3}
    g2 = SimpleGraph("abc", [("a", "b")])
    assert distance_partition(g2, ["a"])["c"] == float("inf")
