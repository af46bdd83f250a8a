"""Finite simple graphs with exact induced-substructure detection.

Graphs are immutable values: a tuple of string vertex labels plus a
symmetric, irreflexive adjacency relation stored as one bitmask per
vertex.  All algorithms here are exhaustive subset/backtracking scans,
tuned for desk scale (catalog graphs and their small multiplications,
well under 64 vertices).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union


class SimpleGraph:
    """Undirected simple graph with unique string vertex labels."""

    __slots__ = ("vertices", "_index", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertex labels")
        index = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for u, v in edges:
            if u not in index or v not in index:
                raise ValueError(f"edge ({u!r}, {v!r}) uses unknown vertex")
            if u == v:
                raise ValueError(f"loop at {u!r} not allowed")
            i, j = index[u], index[v]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.vertices = vs
        self._index = index
        self._adj = tuple(adj)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs, each with u < v, sorted."""
        out = []
        for i, v in enumerate(self.vertices):
            mask = self._adj[i]
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if i < j:
                    out.append(tuple(sorted((v, self.vertices[j]))))
        return sorted(out)

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self._adj[self._index[u]] >> self._index[v] & 1)

    def neighbors(self, v: str) -> frozenset[str]:
        return frozenset(self.vertices[j] for j in _bits(self._adj[self._index[v]]))

    def degree(self, v: str) -> int:
        return self._adj[self._index[v]].bit_count()

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def isolated_vertices(self) -> list[str]:
        return [v for i, v in enumerate(self.vertices) if not self._adj[i]]

    def adjacency_mask(self, v: str) -> int:
        return self._adj[self._index[v]]

    def index_of(self, v: str) -> int:
        return self._index[v]

    def __eq__(self, other) -> bool:
        """Label-level equality (same vertex set, same edge set)."""
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and set(self.edges()) == set(other.edges())

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), frozenset(self.edges())))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.n} vertices, {self.num_edges()} edges)"

    # -- elementary constructions ----------------------------------------

    def complement(self) -> SimpleGraph:
        full = (1 << self.n) - 1
        adj = [full & ~m & ~(1 << i) for i, m in enumerate(self._adj)]
        g = SimpleGraph.__new__(SimpleGraph)
        g.vertices = self.vertices
        g._index = self._index
        g._adj = tuple(adj)
        return g

    def induced_subgraph(self, keep: Iterable[str]) -> SimpleGraph:
        keep = list(keep)
        for v in keep:
            if v not in self._index:
                raise ValueError(f"unknown vertex label {v!r}")
        keep_set = set(keep)
        edges = [(u, v) for u, v in self.edges() if u in keep_set and v in keep_set]
        return SimpleGraph(keep, edges)

    def remove_vertices(self, drop: Iterable[str]) -> SimpleGraph:
        drop = set(drop)
        return self.induced_subgraph([v for v in self.vertices if v not in drop])

    def closed_neighborhood(self, v: str) -> frozenset[str]:
        """st v = N(v) together with v itself."""
        return self.neighbors(v) | {v}


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- named patterns -------------------------------------------------------

def gap_pattern() -> SimpleGraph:
    """Two disjoint edges (2K2); the defining instance of a gap."""
    return SimpleGraph(["p1", "p2", "p3", "p4"], [("p1", "p2"), ("p3", "p4")])


def diamond_pattern() -> SimpleGraph:
    """K4 minus one edge."""
    return SimpleGraph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("c", "d")],
    )


def cricket_pattern() -> SimpleGraph:
    return SimpleGraph(
        ["w1", "w2", "w3", "w4", "w5"],
        [("w1", "w3"), ("w2", "w3"), ("w3", "w4"), ("w3", "w5"), ("w4", "w5")],
    )


def cycle_graph(n: int, prefix: str = "v") -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    return SimpleGraph(vs, edges)


def anticycle_graph(n: int, prefix: str = "v") -> SimpleGraph:
    return cycle_graph(n, prefix).complement()


def path_graph(n: int, prefix: str = "v") -> SimpleGraph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_graph(n: int, prefix: str = "v") -> SimpleGraph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, list(combinations(vs, 2)))


def pattern_graph(name: str, n: Optional[int] = None) -> SimpleGraph:
    """Pattern lookup: Gap, Diamond, Cricket, Cycle(n), Anticycle(n), Clique(n), Path(n)."""
    key = name.lower()
    if key == "gap":
        return gap_pattern()
    if key == "diamond":
        return diamond_pattern()
    if key == "cricket":
        return cricket_pattern()
    if n is None:
        raise ValueError(f"pattern {name!r} needs a size")
    if key == "cycle":
        return cycle_graph(n)
    if key == "anticycle":
        return anticycle_graph(n)
    if key == "clique":
        return complete_graph(n)
    if key == "path":
        return path_graph(n)
    raise ValueError(f"unknown pattern {name!r}")


@dataclass(frozen=True)
class InducedEmbedding:
    """Injective vertex map realizing a pattern as an induced subgraph."""

    pattern: str
    mapping: tuple[tuple[str, str], ...]  # (pattern vertex, host vertex) pairs

    def image(self) -> frozenset[str]:
        return frozenset(h for _, h in self.mapping)

    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)


def _induced_embeddings(
    host: SimpleGraph, pattern: SimpleGraph, first_only: bool
) -> list[dict[str, str]]:
    """Backtracking search for induced embeddings of `pattern` into `host`.

    Exhaustive, ordered by host vertex index; results deduplicated by image
    vertex set (i.e. up to pattern automorphism).
    """
    pn, hn = pattern.n, host.n
    if pn > hn:
        return []
    # Order pattern vertices so each (after the first) touches a previous one
    # when possible; improves pruning on connected patterns.
    order: list[int] = []
    placed = 0
    remaining = set(range(pn))
    while remaining:
        best = max(
            remaining,
            key=lambda i: (pattern._adj[i] & placed).bit_count(),
        )
        order.append(best)
        remaining.discard(best)
        placed |= 1 << best
    pdeg = [pattern._adj[i].bit_count() for i in range(pn)]
    hadj = host._adj
    padj = pattern._adj

    results: list[dict[str, str]] = []
    seen_images: set[int] = set()
    assign = [-1] * pn  # pattern index -> host index
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == pn:
            image = 0
            for h in assign:
                image |= 1 << h
            if image not in seen_images:
                seen_images.add(image)
                results.append(
                    {pattern.vertices[p]: host.vertices[assign[p]] for p in range(pn)}
                )
            return first_only
        p = order[depth]
        need_adj = padj[p]
        for h in range(hn):
            if used >> h & 1:
                continue
            if hadj[h].bit_count() < pdeg[p]:
                continue
            ok = True
            for q in order[:depth]:
                hq = assign[q]
                want = need_adj >> q & 1
                have = hadj[h] >> hq & 1
                if want != have:
                    ok = False
                    break
            if not ok:
                continue
            assign[p] = h
            used |= 1 << h
            if extend(depth + 1):
                return True
            used &= ~(1 << h)
            assign[p] = -1
        return False

    extend(0)
    return results


def contains_induced(
    host: SimpleGraph, pattern: Union[str, SimpleGraph], n: Optional[int] = None
) -> Optional[InducedEmbedding]:
    """One induced embedding of the pattern, or None if absent."""
    name = pattern if isinstance(pattern, str) else "custom"
    pg = pattern_graph(pattern, n) if isinstance(pattern, str) else pattern
    found = _induced_embeddings(host, pg, first_only=True)
    if not found:
        return None
    return InducedEmbedding(name, tuple(sorted(found[0].items())))


def enumerate_induced(
    host: SimpleGraph, pattern: Union[str, SimpleGraph], n: Optional[int] = None
) -> list[InducedEmbedding]:
    """Every induced embedding, up to pattern automorphism (one per image set)."""
    name = pattern if isinstance(pattern, str) else "custom"
    pg = pattern_graph(pattern, n) if isinstance(pattern, str) else pattern
    return [
        InducedEmbedding(name, tuple(sorted(m.items())))
        for m in _induced_embeddings(host, pg, first_only=False)
    ]


def is_gap_free(g: SimpleGraph) -> bool:
    return contains_induced(g, "Gap") is None


def is_diamond_free(g: SimpleGraph) -> bool:
    return contains_induced(g, "Diamond") is None


# -- chordality -----------------------------------------------------------

@dataclass(frozen=True)
class ChordalityResult:
    is_chordal: bool
    peo: Optional[tuple[str, ...]]  # perfect elimination ordering
    cycle: Optional[tuple[str, ...]]  # induced cycle on >= 4 vertices

    def __bool__(self) -> bool:
        return self.is_chordal


def is_chordal(g: SimpleGraph) -> ChordalityResult:
    """Chordality by simplicial elimination, with a checkable witness.

    Returns a perfect elimination ordering when chordal, otherwise some
    induced cycle on >= 4 vertices.
    """
    n = g.n
    alive = (1 << n) - 1
    adj = list(g._adj)
    peo: list[str] = []
    for _ in range(n):
        pick = -1
        for i in _bits(alive):
            nb = adj[i] & alive
            simplicial = True
            for j in _bits(nb):
                if nb & ~adj[j] & ~(1 << j):
                    simplicial = False
                    break
            if simplicial:
                pick = i
                break
        if pick < 0:
            for k in range(4, n + 1):
                emb = contains_induced(g, "Cycle", k)
                if emb is not None:
                    d = emb.as_dict()
                    cyc = tuple(d[f"v{i}"] for i in range(1, k + 1))
                    return ChordalityResult(False, None, cyc)
            raise AssertionError("no simplicial vertex yet no induced long cycle")
        peo.append(g.vertices[pick])
        alive &= ~(1 << pick)
    return ChordalityResult(True, tuple(peo), None)


# -- cliques --------------------------------------------------------------

def _maximal_cliques(adj: Sequence[int], n: int) -> Iterator[int]:
    """Bron-Kerbosch with pivoting over bitmask adjacency."""

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: (p & adj[u]).bit_count())
        for v in _bits(p & ~adj[pivot]):
            yield from bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if n:
        yield from bk(0, (1 << n) - 1, 0)


def max_cliques(g: SimpleGraph) -> list[frozenset[str]]:
    """All cliques of maximum size.  Each vertex alone counts as a clique."""
    if g.n == 0:
        return []
    best: list[int] = []
    best_size = 0
    for mask in _maximal_cliques(g._adj, g.n):
        size = mask.bit_count()
        if size > best_size:
            best, best_size = [mask], size
        elif size == best_size:
            best.append(mask)
    return sorted(
        (frozenset(g.vertices[i] for i in _bits(m)) for m in best),
        key=lambda c: sorted(c),
    )


def clique_number(g: SimpleGraph) -> int:
    """omega(g); 1 for a nonempty edgeless graph, 0 with no vertices."""
    if g.n == 0:
        return 0
    return max(m.bit_count() for m in _maximal_cliques(g._adj, g.n))


def all_triangles(g: SimpleGraph) -> list[frozenset[str]]:
    out = []
    for u, v in g.edges():
        common = g.adjacency_mask(u) & g.adjacency_mask(v)
        for k in _bits(common):
            w = g.vertices[k]
            if u < w and v < w:
                out.append(frozenset((u, v, w)))
    return out


def in_triangle(g: SimpleGraph, v: str) -> bool:
    mv = g.adjacency_mask(v)
    for i in _bits(mv):
        if mv & g._adj[i]:
            return True
    return False


# -- bipartiteness ---------------------------------------------------------

@dataclass(frozen=True)
class BipartitenessResult:
    is_bipartite: bool
    parts: Optional[tuple[frozenset[str], frozenset[str]]]
    odd_cycle: Optional[tuple[str, ...]]

    def __bool__(self) -> bool:
        return self.is_bipartite


def is_bipartite(g: SimpleGraph) -> BipartitenessResult:
    """Breadth-first 2-coloring; returns a bipartition or an odd cycle."""
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        parent[start] = -1
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in _bits(g._adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    pu = _path_to_root(u, parent)
                    pw = _path_to_root(w, parent)
                    common = (set(pu) & set(pw))
                    lca = next(x for x in pu if x in common)
                    cyc = pu[: pu.index(lca) + 1] + list(reversed(pw[: pw.index(lca)]))
                    return BipartitenessResult(
                        False, None, tuple(g.vertices[i] for i in cyc)
                    )
    a = frozenset(g.vertices[i] for i, c in color.items() if c == 0)
    b = frozenset(g.vertices[i] for i, c in color.items() if c == 1)
    return BipartitenessResult(True, (a, b), None)


def _path_to_root(v: int, parent: Mapping[int, int]) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


# -- vertex multiplication and twin collapse --------------------------------

Plan = Mapping[str, Union[int, SimpleGraph]]


def multiply_vertices(g: SimpleGraph, plan: Plan) -> SimpleGraph:
    """Replace each planned vertex by an independent set (or a graph).

    Multiplying v by k >= 2 introduces copies "v^1".."v^k", each adjacent to
    N(v); k = 1 leaves v untouched.  Substituting a graph F wires E(F)
    internally and joins every vertex of F to N(v).
    """
    new_vertices: list[str] = []
    new_edges: list[tuple[str, str]] = []
    replacement: dict[str, list[str]] = {}
    for v in g.vertices:
        spec = plan.get(v, 1)
        if isinstance(spec, SimpleGraph):
            copies = list(spec.vertices)
        else:
            if spec < 1:
                raise ValueError(f"multiplicity for {v!r} must be >= 1")
            copies = [v] if spec == 1 else [f"{v}^{i}" for i in range(1, spec + 1)]
        replacement[v] = copies
        new_vertices.extend(copies)
    if len(set(new_vertices)) != len(new_vertices):
        raise ValueError("vertex label collision during multiplication")
    for u, v in g.edges():
        for a in replacement[u]:
            for b in replacement[v]:
                new_edges.append((a, b))
    for v in g.vertices:
        spec = plan.get(v, 1)
        if isinstance(spec, SimpleGraph):
            new_edges.extend(spec.edges())
    return SimpleGraph(new_vertices, new_edges)


def collapse_false_twins(g: SimpleGraph) -> tuple[SimpleGraph, dict[str, int]]:
    """Merge non-adjacent vertices with equal open neighborhoods.

    Inverse of vertex multiplication: multiply_vertices(base, mult) is
    isomorphic to g, and the base has no false twins.  Twins are merged in
    ascending label order, keeping the lexicographically least label.
    """
    current = g
    mult = {v: 1 for v in g.vertices}
    while True:
        merged = False
        vs = sorted(current.vertices)
        for a, b in combinations(vs, 2):
            if current.has_edge(a, b):
                continue
            if current.neighbors(a) == current.neighbors(b):
                mult[a] = mult.get(a, 1) + mult.pop(b, 1)
                current = current.remove_vertices([b])
                merged = True
                break
        if not merged:
            break
    return current, {v: mult[v] for v in current.vertices}


# -- isomorphism ------------------------------------------------------------

def _refine_colors(g: SimpleGraph) -> list[int]:
    """Iterated neighborhood color refinement; stable integer colors."""
    colors = [g._adj[i].bit_count() for i in range(g.n)]
    for _ in range(g.n):
        sig = [
            (colors[i], tuple(sorted(colors[j] for j in _bits(g._adj[i]))))
            for i in range(g.n)
        ]
        palette = {s: c for c, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> Optional[dict[str, str]]:
    """A vertex bijection preserving adjacency both ways, or None.

    Color refinement narrows candidates, then exhaustive backtracking;
    exact at the sizes this toolkit handles.
    """
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    cg, ch = _refine_colors(g), _refine_colors(h)
    if sorted(cg) != sorted(ch):
        return None
    by_color: dict[int, list[int]] = {}
    for j, c in enumerate(ch):
        by_color.setdefault(c, []).append(j)
    # Map rarest-color vertices first.
    order = sorted(range(g.n), key=lambda i: (len(by_color[cg[i]]), i))
    assign = [-1] * g.n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == g.n:
            return True
        i = order[depth]
        for j in by_color[cg[i]]:
            if used >> j & 1:
                continue
            ok = True
            for k in order[:depth]:
                if (g._adj[i] >> k & 1) != (h._adj[j] >> assign[k] & 1):
                    ok = False
                    break
            if not ok:
                continue
            assign[i] = j
            used |= 1 << j
            if extend(depth + 1):
                return True
            used &= ~(1 << j)
            assign[i] = -1
        return False

    if not extend(0):
        return None
    return {g.vertices[i]: h.vertices[assign[i]] for i in range(g.n)}


# -- distances ---------------------------------------------------------------

def distance_partition(g: SimpleGraph, h: Iterable[str]) -> dict[str, float]:
    """Distance from every vertex to the vertex set h; D_0 = h, unreachable = inf."""
    sources = list(h)
    if not sources:
        raise ValueError("distance_partition needs a nonempty vertex set")
    dist = {v: math.inf for v in g.vertices}
    queue = []
    for v in sources:
        if v not in g._index:
            raise ValueError(f"unknown vertex label {v!r}")
        dist[v] = 0
        queue.append(v)
    while queue:
        u = queue.pop(0)
        for w in g.neighbors(u):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# -- text format --------------------------------------------------------------

def parse_graph_text(text: str) -> SimpleGraph:
    """Graph text format: one edge "u v" per line, "vertex w" for isolated
    vertices, "#" comments."""
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []

    def add_vertex(v: str) -> None:
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'vertex NAME'")
            add_vertex(parts[1])
        elif len(parts) == 2:
            add_vertex(parts[0])
            add_vertex(parts[1])
            edges.append((parts[0], parts[1]))
        else:
            raise ValueError(f"line {lineno}: expected 'u v' or 'vertex w'")
    return SimpleGraph(vertices, edges)


def graph_to_text(g: SimpleGraph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines.extend(f"vertex {v}" for v in g.isolated_vertices())
    return "\n".join(lines) + ("\n" if lines else "")
