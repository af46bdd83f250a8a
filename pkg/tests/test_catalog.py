import pytest

from regulab import catalog
from regulab.graph import (
    are_isomorphic,
    clique_number,
    contains_induced,
    cycle_graph,
    is_diamond_free,
    is_gap_free,
)

FIGURES = ["G_0", "G_1", "G_2", "G_3", "G_4", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"]


@pytest.mark.parametrize("name,n,e", [("G_10", 7, 9), ("G_0", 8, 13), ("G_4", 8, 13)])
def test_figure_sizes(name, n, e):
    g = catalog.get(name)
    assert (g.n, g.num_edges()) == (n, e)


def test_figure_flags():
    for name in FIGURES:
        g = catalog.get(name)
        assert clique_number(g) == 3
        if name == "G_4":
            assert not is_gap_free(g)
        else:
            assert is_gap_free(g) and is_diamond_free(g)
            assert contains_induced(g, "Cycle", 5) is not None


# Vertices outside every triangle: the only admissible multiplication targets.
_TRIANGLE_FREE = {
    "G_1": ["u_0", "u_1", "u_4"],
    "G_2": ["u_1"],
    "G_3": ["u_0", "u_2", "u_3", "u_4"],
    "G_5": ["u_1", "u_4"],
    "G_6": ["u_1", "u_4", "b_2"],
    "G_7": ["u_1", "b_3", "b_4"],
    "G_8": ["u_1", "b_2", "b_4"],
    "G_9": [],
    "G_10": ["u_0", "u_1", "u_4", "y"],
    "G_0": ["u_1", "y"],
}


@pytest.mark.parametrize("name", sorted(_TRIANGLE_FREE))
def test_triangle_free_vertices(name):
    got = catalog.triangle_free_vertices(catalog.get(name))
    assert sorted(got) == sorted(_TRIANGLE_FREE[name])


def test_duplicate_panels():
    """Three of the figure panels depict the same graph under different
    labelings; every other pair of bases is non-isomorphic."""
    dup = {"G_6", "G_7", "G_8"}
    for i, a in enumerate(catalog.FIGURE_BASES):
        for b in catalog.FIGURE_BASES[i + 1:]:
            iso = are_isomorphic(catalog.get(a), catalog.get(b))
            if {a, b} <= dup:
                assert iso is not None
            else:
                assert iso is None


def test_generic_names():
    assert catalog.get("C_6").num_edges() == 6
    assert are_isomorphic(catalog.get("C_6^c"), cycle_graph(6).complement()) is not None
    assert catalog.get("K_4").num_edges() == 6
    assert catalog.get("P_3").num_edges() == 2
    assert catalog.get("2K2").num_edges() == 2
    assert catalog.get("G10") == catalog.get("G_10")  # both spellings
    with pytest.raises(catalog.CatalogError):
        catalog.get("Q_3")


def test_c5_uses_figure_labels():
    assert sorted(catalog.get("C5").vertices) == ["u_0", "u_1", "u_2", "u_3", "u_4"]


def test_enumerate_family_dedup_and_filter():
    members = list(catalog.enumerate_family("C5", 2))
    # 5 triangle-free vertices, multiplicity 1..2, up to rotation/reflection:
    # number of binary necklaces on 5 beads = 8
    assert len(members) == 8
    for g in members:
        assert is_gap_free(g) and is_diamond_free(g)
    filtered = list(catalog.enumerate_family("C5", 2, "gap-and-diamond-free"))
    assert len(filtered) == len(members)


def test_entry_summary():
    e = catalog.entry("G_4")
    assert not e.gap_free and e.diamond_free
