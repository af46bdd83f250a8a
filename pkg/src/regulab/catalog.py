"""Built-in constructors for the named graphs and generated families.

Edge lists for G_0..G_10 and G_4 are literal data transcribed from the
source figures, kept with their original labels (u_i, a_i, b_i, y) so the
transcription stays auditable.  A load-time self-check asserts the
expected structural flags; a failure means a mis-transcribed edge, and is
raised rather than silently ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .graph import (
    SimpleGraph,
    are_isomorphic,
    clique_number,
    complete_graph,
    contains_induced,
    cycle_graph,
    gap_pattern,
    in_triangle,
    is_diamond_free,
    is_gap_free,
    multiply_vertices,
    path_graph,
)

_C5_EDGES = [("u_0", "u_1"), ("u_1", "u_2"), ("u_2", "u_3"), ("u_3", "u_4"), ("u_4", "u_0")]

# Literal edge data; C5 part listed separately for readability.
_FIGURE_EDGES: dict[str, list[tuple[str, str]]] = {
    "G_0": [("a_0", "y"), ("y", "a_2"),
            ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3"),
            ("a_2", "u_0"), ("a_2", "u_4"), ("a_2", "u_2")],
    "G_1": [("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3")],
    "G_2": [("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3"),
            ("a_2", "u_0"), ("a_2", "u_4"), ("a_2", "u_2")],
    "G_3": [("b_0", "u_4"), ("b_0", "u_1"), ("b_0", "b_2"),
            ("b_2", "u_1"), ("b_2", "u_3")],
    "G_4": [("b_0", "u_4"), ("b_0", "u_1"), ("b_0", "b_2"),
            ("b_2", "u_1"), ("b_2", "u_3"),
            ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3")],
    "G_5": [("b_1", "u_0"), ("b_4", "u_0"), ("b_1", "u_2"), ("b_4", "u_3"), ("b_1", "b_4"),
            ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3")],
    "G_6": [("b_1", "u_0"), ("b_4", "u_0"), ("b_1", "u_2"), ("b_4", "u_3"), ("b_1", "b_4"),
            ("b_2", "u_3"), ("b_2", "u_1"), ("b_1", "b_2"),
            ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3")],
    "G_7": [("b_4", "u_0"), ("b_4", "u_3"), ("b_3", "u_4"), ("b_3", "u_2"), ("b_4", "b_3"),
            ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3"),
            ("a_2", "u_0"), ("a_2", "u_4"), ("a_2", "u_2")],
    "G_8": [("b_4", "u_0"), ("b_4", "u_3"),
            ("b_2", "a_2"), ("b_2", "u_1"), ("b_2", "u_3"),
            ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3"),
            ("a_2", "u_0"), ("a_2", "u_4"), ("a_2", "u_2")],
    "G_9": [("b_0", "u_4"), ("b_0", "u_1"), ("b_0", "a_0"), ("b_0", "b_2"),
            ("b_2", "a_2"), ("b_2", "u_1"), ("b_2", "u_3"),
            ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3"),
            ("a_2", "u_0"), ("a_2", "u_4"), ("a_2", "u_2")],
    "G_10": [("a_0", "y"),
             ("a_0", "u_0"), ("a_0", "u_2"), ("a_0", "u_3")],
}

# Classification bases, in recognizer order; G_4 is deliberately absent
# (it has a gap and generates nothing admissible).
FIGURE_BASES = ["C5", "G_0", "G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: SimpleGraph
    gap_free: bool
    diamond_free: bool
    has_induced_c5: bool


class CatalogError(ValueError):
    pass


def _build_figure_graph(name: str) -> SimpleGraph:
    extra = _FIGURE_EDGES[name]
    vertices = ["u_0", "u_1", "u_2", "u_3", "u_4"]
    for u, v in extra:
        for w in (u, v):
            if w not in vertices:
                vertices.append(w)
    return SimpleGraph(vertices, _C5_EDGES + extra)


_NAME_RE = re.compile(r"^(C|K|P)_?(\d+)(\^c|c)?$")


def get(name: str) -> SimpleGraph:
    """Catalog lookup: G_0..G_10, C_n, C_n^c, K_n, P_n, 2K2."""
    key = name.strip()
    if key in ("2K2", "2K_2"):
        return gap_pattern()
    gkey = key.replace("G", "G_") if re.fullmatch(r"G\d+", key) else key
    if gkey in _FIGURE_EDGES:
        _self_check()
        return _build_figure_graph(gkey)
    m = _NAME_RE.match(key)
    if m:
        family, n, comp = m.group(1), int(m.group(2)), m.group(3)
        if family == "C":
            if n == 5 and not comp:
                # C5 with the u_i labels used throughout the figures.
                return SimpleGraph(["u_0", "u_1", "u_2", "u_3", "u_4"], _C5_EDGES)
            g = cycle_graph(n)
            return g.complement() if comp else g
        if comp:
            raise CatalogError(f"complement form only supported for cycles: {name!r}")
        if family == "K":
            return complete_graph(n)
        if family == "P":
            return path_graph(n)
    raise CatalogError(f"unknown catalog name {name!r}")


def names() -> list[str]:
    return FIGURE_BASES[:4] + ["G_4"] + FIGURE_BASES[5:] + ["C_n", "C_n^c", "K_n", "P_n", "2K2"]


def entry(name: str) -> CatalogEntry:
    g = get(name)
    return CatalogEntry(
        name=name,
        graph=g,
        gap_free=is_gap_free(g),
        diamond_free=is_diamond_free(g),
        has_induced_c5=contains_induced(g, "Cycle", 5) is not None,
    )


@lru_cache(maxsize=1)
def _self_check() -> bool:
    """Guard against figure mis-transcription (cannot fully prove it)."""
    problems: list[str] = []
    for name in _FIGURE_EDGES:
        g = _build_figure_graph(name)
        gap = is_gap_free(g)
        dia = is_diamond_free(g)
        c5 = contains_induced(g, "Cycle", 5) is not None
        if name == "G_4":
            if gap:
                problems.append("G_4 should contain a gap")
        else:
            if not (gap and dia and c5):
                problems.append(f"{name} should be (gap, diamond)-free with an induced C5")
        if clique_number(g) != 3:
            problems.append(f"{name} should have clique number 3")
    if problems:
        raise CatalogError("catalog self-check failed: " + "; ".join(problems))
    return True


def triangle_free_vertices(g: SimpleGraph) -> list[str]:
    """Vertices in no triangle; the only admissible multiplication targets."""
    return [v for v in g.vertices if not in_triangle(g, v)]


def enumerate_family(
    base_name: str,
    max_multiplicity: int,
    filter: str = "all",
) -> Iterator[SimpleGraph]:
    """All admissible vertex multiplications of a catalog base.

    Multiplicities range over 1..max_multiplicity on vertices in no
    triangle of the base; the stream is deduplicated up to isomorphism.
    filter is "all" or "gap-and-diamond-free".
    """
    if max_multiplicity < 1:
        raise ValueError("max_multiplicity must be >= 1")
    if filter not in ("all", "gap-and-diamond-free"):
        raise ValueError(f"unknown filter {filter!r}")
    base = get(base_name)
    free = triangle_free_vertices(base)
    emitted: list[SimpleGraph] = []
    for mults in product(range(1, max_multiplicity + 1), repeat=len(free)):
        plan = {v: k for v, k in zip(free, mults) if k > 1}
        g = multiply_vertices(base, plan)
        if filter == "gap-and-diamond-free" and not (is_gap_free(g) and is_diamond_free(g)):
            continue
        if any(are_isomorphic(g, h) for h in emitted):
            continue
        emitted.append(g)
        yield g
