import random
from itertools import combinations

import pytest

from regulab import catalog
from regulab.betti import (
    FieldSpec,
    QQ,
    SIZE_WALL,
    SizeWallError,
    betti_table,
    froberg_linear_check,
    graph_regularity,
    rank_exact_char0,
    rank_mod_p,
    reduced_homology_dims,
    regularity,
    stanley_reisner,
)
from regulab.graph import SimpleGraph, complete_graph, cycle_graph, path_graph
from regulab.ideals import Monomial, MonomialIdeal, edge_ideal, polarize


def M(*names):
    return Monomial.of(*names)


def test_field_spec_validation():
    assert FieldSpec(0).characteristic == 0
    assert FieldSpec(7).characteristic == 7
    for bad in (1, 4, -2, 9):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_rank_backends_against_known_matrices():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank_exact_char0(rows) == 2
    assert rank_mod_p(rows, 5) == 2
    # rank can drop modulo p
    assert rank_exact_char0([[2]]) == 1
    assert rank_mod_p([[2]], 2) == 0
    # big integers stay exact (floats would misrank this)
    huge = [[10**40, 1], [10**40 + 1, 1]]
    assert rank_exact_char0(huge) == 2


def test_rank_backends_against_sympy():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(3)
    for _ in range(20):
        rows = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(4)]
        assert rank_exact_char0(rows) == sympy.Matrix(rows).rank()


def test_reduced_homology_of_classical_complexes():
    # hollow triangle = independence complex non-example; build directly:
    # non-faces {abc} over abc gives the boundary of a 2-simplex
    nf = stanley_reisner(MonomialIdeal([M("a", "b", "c")]))
    assert reduced_homology_dims(nf, "abc") == {1: 1}
    # restriction avoiding every non-face is a full simplex: contractible
    nf2 = stanley_reisner(MonomialIdeal([M("z", "w", "q")]))
    assert reduced_homology_dims(nf2, "zw") == {}
    # independence complex of C5 is homotopy-equivalent to a circle
    nf3 = stanley_reisner(edge_ideal(catalog.get("C5")))
    assert reduced_homology_dims(nf3, nf3.vertices) == {1: 1}
    # two isolated points: reduced H_0 = 1
    nf4 = stanley_reisner(MonomialIdeal([M("a", "b")]))
    assert reduced_homology_dims(nf4, "ab") == {0: 1}


def test_betti_table_single_edge():
    table = betti_table(MonomialIdeal([M("x", "y")]))
    assert table.as_dict() == {(0, 2): 1}
    assert table.regularity() == 2


def test_betti_table_frozen_values():
    assert betti_table(edge_ideal(catalog.get("C5"))).as_dict() == {
        (0, 2): 5, (1, 3): 5, (2, 5): 1
    }
    assert betti_table(edge_ideal(cycle_graph(4))).as_dict() == {
        (0, 2): 4, (1, 3): 4, (2, 4): 1
    }


def test_row_zero_matches_generator_count():
    ideal = edge_ideal(catalog.get("G_1")).power(2)
    table = betti_table(ideal).as_dict()
    assert table[(0, 4)] == len(ideal.gens)


def test_regularity_conventions():
    assert regularity(MonomialIdeal([])) == 1
    assert regularity(MonomialIdeal([M("x"), M("y")])) == 1


def test_regularity_frozen_values():
    assert regularity(edge_ideal(catalog.get("C5"))) == 3
    assert regularity(edge_ideal(path_graph(4))) == 2
    assert regularity(edge_ideal(complete_graph(3))) == 2
    assert regularity(edge_ideal(catalog.get("C5")).power(2)) == 4


def test_polarization_preserves_betti_numbers():
    rng = random.Random(9)
    variables = ["x", "y", "z", "w"]
    for _ in range(15):
        gens = []
        for _ in range(rng.randint(1, 4)):
            picks = [rng.choice(variables) for _ in range(rng.randint(2, 4))]
            gens.append(M(*picks))
        ideal = MonomialIdeal(gens)
        pol, _ = polarize(ideal)
        assert betti_table(ideal).as_dict() == betti_table(pol).as_dict()


def test_froberg_linear_check():
    assert froberg_linear_check(path_graph(4))
    assert not froberg_linear_check(catalog.get("C5"))
    with pytest.raises(ValueError):
        froberg_linear_check(SimpleGraph("ab", []))


def test_graph_regularity_fast_path_agrees_with_oracle():
    for g in (path_graph(4), cycle_graph(4), complete_graph(4)):
        assert graph_regularity(g) == regularity(edge_ideal(g))


def test_size_wall():
    big = path_graph(SIZE_WALL + 1)
    with pytest.raises(SizeWallError):
        betti_table(edge_ideal(big))


# Minimal 6-vertex triangulation of the real projective plane: its
# Stanley-Reisner ideal is the canonical example of characteristic-dependent
# Betti numbers, so it exercises the modular rank backend end to end.
_RP2_FACETS = ["123", "126", "134", "145", "156", "235", "245", "246", "346", "356"]


def _rp2_ideal():
    facets = {frozenset(f) for f in _RP2_FACETS}
    nonfaces = [frozenset(c) for c in combinations("123456", 3) if frozenset(c) not in facets]
    assert len(nonfaces) == 10
    return MonomialIdeal([M(*sorted(t)) for t in nonfaces])


def test_projective_plane_betti_depends_on_characteristic():
    ideal = _rp2_ideal()
    t0 = betti_table(ideal, FieldSpec(0)).as_dict()
    t2 = betti_table(ideal, FieldSpec(2)).as_dict()
    t3 = betti_table(ideal, FieldSpec(3)).as_dict()
    assert t0 == {(0, 3): 10, (1, 4): 15, (2, 5): 6}
    assert t2 == {(0, 3): 10, (1, 4): 15, (2, 5): 6, (2, 6): 1, (3, 6): 1}
    assert t3 == t0
    assert regularity(ideal, QQ) == 3
    assert regularity(ideal, FieldSpec(2)) == 4


def test_edge_ideal_betti_tables_match_brute_force_homology():
    """Cross-check the subset scan (cone skipping, collapses) against a
    direct Hochster sum with no shortcuts."""
    rng = random.Random(21)
    for _ in range(10):
        n = rng.randint(3, 5)
        verts = [f"v{i}" for i in range(n)]
        edges = [e for e in combinations(verts, 2) if rng.random() < 0.5]
        if not edges:
            continue
        ideal = edge_ideal(SimpleGraph(verts, edges))
        nf = stanley_reisner(ideal)
        expect: dict = {}
        for k in range(1, len(nf.vertices) + 1):
            for w in combinations(nf.vertices, k):
                for d, h in reduced_homology_dims(nf, w).items():
                    key = (k - d - 2, k)
                    expect[key] = expect.get(key, 0) + h
        assert betti_table(ideal).as_dict() == expect
