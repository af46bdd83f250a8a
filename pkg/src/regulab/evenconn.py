"""Even-connections and the combinatorics of colon ideals of powers.

Implements the alternating-walk search characterizing the degree-2
generators of (I(G)^{s+1} : e_1...e_s), the associated colon graph, the
total order on generators of powers induced by an edge order, and the
ordered colon decomposition identity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import SimpleGraph
from .ideals import Monomial, MonomialIdeal, edge_ideal

Edge = tuple[str, str]  # sorted label pair


def _norm_edge(e: Iterable[str]) -> Edge:
    u, v = e
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class SFoldProduct:
    """A multiset of s host edges together with their product monomial."""

    host: SimpleGraph
    edges: tuple[Edge, ...]  # sorted multiset

    def __init__(self, host: SimpleGraph, edges: Iterable[Iterable[str]]):
        norm = tuple(sorted(_norm_edge(e) for e in edges))
        if not norm:
            raise ValueError("s-fold product needs s >= 1 edges")
        for u, v in norm:
            if not host.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "edges", norm)

    @property
    def s(self) -> int:
        return len(self.edges)

    def product(self) -> Monomial:
        out = Monomial()
        for u, v in self.edges:
            out = out * Monomial.of(u, v)
        return out

    def distinct_edges(self) -> list[tuple[Edge, int]]:
        out: list[tuple[Edge, int]] = []
        for e in self.edges:
            if out and out[-1][0] == e:
                out[-1] = (e, out[-1][1] + 1)
            else:
                out.append((e, 1))
        return out


@dataclass(frozen=True)
class EvenConnection:
    """Witness sequence p_0 ... p_{2l+1} with its odd-position edge uses."""

    sequence: tuple[str, ...]
    edge_uses: tuple[Edge, ...]  # multiset edge consumed at each odd pair

    @property
    def ell(self) -> int:
        return len(self.edge_uses)

    def check(self, host: SimpleGraph, m: SFoldProduct) -> bool:
        """Verify conditions (i)-(iv) of the definition verbatim."""
        p = self.sequence
        if len(p) < 4 or len(p) % 2 != 0:
            return False
        ell = (len(p) - 2) // 2
        if ell < 1 or len(self.edge_uses) != ell:
            return False
        # (i) consecutive pairs are host edges
        if not all(host.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1)):
            return False
        # (iii) odd pairs equal the assigned multiset edges
        for j in range(ell):
            if _norm_edge((p[2 * j + 1], p[2 * j + 2])) != self.edge_uses[j]:
                return False
        # (iv) per-edge usage bounded by multiplicity
        for e, count in _count(self.edge_uses).items():
            if count > m.edges.count(e):
                return False
        return True


def _count(items: Iterable[Edge]) -> dict[Edge, int]:
    out: dict[Edge, int] = {}
    for e in items:
        out[e] = out.get(e, 0) + 1
    return out


def _walk_states(host: SimpleGraph, m: SFoldProduct, start: str):
    """BFS over (even-position vertex, remaining edge-use counts).

    Yields predecessor links for witness reconstruction: state -> (previous
    state, odd vertex stepped through, multiset edge consumed).
    """
    distinct = m.distinct_edges()
    full = tuple(c for _, c in distinct)
    init = (start, full)
    prev: dict = {init: None}
    queue = [init]
    while queue:
        state = queue.pop(0)
        w, rem = state
        for x in host.neighbors(w):
            for k, (e, _) in enumerate(distinct):
                if rem[k] == 0 or x not in e:
                    continue
                y = e[1] if e[0] == x else e[0]
                rem2 = rem[:k] + (rem[k] - 1,) + rem[k + 1:]
                nxt = (y, rem2)
                if nxt not in prev:
                    prev[nxt] = (state, x, e)
                    queue.append(nxt)
    return prev


def find_even_connection(
    host: SimpleGraph, m: SFoldProduct, u: str, v: str
) -> Optional[EvenConnection]:
    """A witness that u and v are even-connected w.r.t. m, or None.

    The search is complete: states are (current vertex, remaining edge-use
    multiset).  u = v is allowed and yields a square generator.  A bare
    host edge does not count (the definition demands l >= 1).
    """
    if not host.has_vertex(u) or not host.has_vertex(v):
        raise ValueError("endpoints must be host vertices")
    prev = _walk_states(host, m, u)
    best: Optional[tuple] = None
    for state in prev:
        w, rem = state
        if prev[state] is None:  # l = 0 start; a bare edge is not allowed
            continue
        if host.has_edge(w, v):
            if best is None or _state_depth(prev, state) < _state_depth(prev, best):
                best = state
    if best is None:
        return None
    # Reconstruct p_0 .. p_{2l+1}.
    seq: list[str] = [v]
    uses: list[Edge] = []
    state = best
    while prev[state] is not None:
        parent, odd_vertex, e = prev[state]
        seq.append(state[0])
        seq.append(odd_vertex)
        uses.append(e)
        state = parent
    seq.append(u)
    return EvenConnection(tuple(reversed(seq)), tuple(reversed(uses)))


def _state_depth(prev: dict, state) -> int:
    d = 0
    while prev[state] is not None:
        state = prev[state][0]
        d += 1
    return d


def even_connected_pairs(host: SimpleGraph, m: SFoldProduct) -> set[tuple[str, str]]:
    """All pairs (u, v), u <= v (u = v for squares), even-connected w.r.t. m."""
    pairs: set[tuple[str, str]] = set()
    for u in host.vertices:
        prev = _walk_states(host, m, u)
        for state in prev:
            if prev[state] is None:
                continue
            w, _ = state
            for v in host.neighbors(w):
                pairs.add((u, v) if u <= v else (v, u))
    return pairs


@dataclass(frozen=True)
class ColonGraphResult:
    graph: SimpleGraph
    new_edges: tuple[Edge, ...]  # even-connected non-edges of the host
    squares: tuple[str, ...]  # vertices even-connected to themselves

    def whisker_label(self, v: str) -> str:
        return f"{v}@1"


def colon_graph(host: SimpleGraph, m: SFoldProduct) -> ColonGraphResult:
    """Graph whose edge ideal is the polarized colon (I^{s+1} : m).

    Edges are the host edges, the even-connected pairs, and one whisker
    v -- v@1 per vertex even-connected to itself (the polarized square).
    All host vertices are kept, isolated or not.
    """
    pairs = even_connected_pairs(host, m)
    new_edges = tuple(
        sorted((u, v) for u, v in pairs if u != v and not host.has_edge(u, v))
    )
    squares = tuple(sorted(u for u, v in pairs if u == v))
    vertices = list(host.vertices) + [f"{v}@1" for v in squares]
    edges = host.edges() + list(new_edges) + [(v, f"{v}@1") for v in squares]
    return ColonGraphResult(SimpleGraph(vertices, edges), new_edges, squares)


def colon_ideal_of_power(host: SimpleGraph, m: SFoldProduct) -> MonomialIdeal:
    """(I(G)^{s+1} : e_1...e_s) computed purely by ideal arithmetic."""
    ideal = edge_ideal(host)
    return ideal.power(m.s + 1).colon(m.product())


# -- generator order ----------------------------------------------------------

@dataclass(frozen=True)
class GeneratorOrder:
    """Minimal generators of I^s, ordered by their maximal expressions."""

    edge_order: tuple[Edge, ...]
    s: int
    generators: tuple[Monomial, ...]  # descending
    expressions: tuple[tuple[int, ...], ...]  # matching maximal exponent vectors


def maximal_expression(
    m: Monomial, edge_order: Sequence[Edge], s: int
) -> tuple[int, ...]:
    """Lexicographically greatest (a_1..a_k) with m = L_1^{a_1}...L_k^{a_k}.

    Greedy with backtracking over the edge order; exhaustive, so the first
    completed assignment is the lex-greatest one.
    """
    monos = [Monomial.of(u, v) for u, v in edge_order]
    k = len(monos)
    dead: set[tuple[Monomial, int, int]] = set()

    def search(rem: Monomial, i: int, left: int) -> Optional[list[int]]:
        if left == 0:
            return [0] * (k - i) if rem.is_one() else None
        if i == k:
            return None
        key = (rem, i, left)
        if key in dead:
            return None
        li = monos[i]
        top = 0
        probe = rem
        while top < left and li.divides(probe):
            probe = probe // li
            top += 1
        probe = rem
        for a in range(top, -1, -1):
            tail = search(_div_pow(rem, li, a), i + 1, left - a)
            if tail is not None:
                return [a] + tail
        dead.add(key)
        return None

    vec = search(m, 0, s)
    if vec is None:
        raise ValueError(f"{m} is not a product of {s} edges from the order")
    return tuple(vec)


def _div_pow(m: Monomial, d: Monomial, a: int) -> Monomial:
    for _ in range(a):
        m = m // d
    return m


def all_expressions(
    m: Monomial, edge_order: Sequence[Edge], s: int
) -> list[tuple[int, ...]]:
    """Every exponent vector expressing m as an ordered s-fold edge product."""
    monos = [Monomial.of(u, v) for u, v in edge_order]
    k = len(monos)
    out: list[tuple[int, ...]] = []

    def search(rem: Monomial, i: int, left: int, acc: list[int]) -> None:
        if left == 0:
            if rem.is_one():
                out.append(tuple(acc + [0] * (k - i)))
            return
        if i == k:
            return
        li = monos[i]
        a = 0
        probe = rem
        while True:
            search(probe, i + 1, left - a, acc + [a])
            if a < left and li.divides(probe):
                probe = probe // li
                a += 1
            else:
                break

    search(m, 0, s, [])
    return out


def default_edge_order(host: SimpleGraph) -> tuple[Edge, ...]:
    return tuple(host.edges())


def ordered_generators(
    host: SimpleGraph, s: int, edge_order: Optional[Sequence[Edge]] = None
) -> GeneratorOrder:
    """Generators of I(G)^s sorted descending by maximal expression."""
    if s < 1:
        raise ValueError("s must be >= 1")
    order = tuple(_norm_edge(e) for e in edge_order) if edge_order else default_edge_order(host)
    gens = edge_ideal(host).power(s).gens
    pairs = sorted(
        ((maximal_expression(g, order, s), g) for g in gens), reverse=True
    )
    return GeneratorOrder(
        edge_order=order,
        s=s,
        generators=tuple(g for _, g in pairs),
        expressions=tuple(v for v, _ in pairs),
    )


# -- ordered colon decomposition ------------------------------------------------

@dataclass(frozen=True)
class DecompositionReport:
    s: int
    ell: int
    holds: bool
    variables: tuple[str, ...]  # the "some variables" set, when the identity holds


def verify_ordered_colon_decomposition(
    host: SimpleGraph,
    s: int,
    edge_order: Optional[Sequence[Edge]] = None,
    ells: Optional[Iterable[int]] = None,
) -> list[DecompositionReport]:
    """Check ((I^{s+1}, L_1..L_l) : L_{l+1}) = ((I^{s+1} : L_{l+1}), variables).

    A failed identity is reported, not raised: it would falsify the
    claimed decomposition, never the arithmetic.
    """
    order = ordered_generators(host, s, edge_order)
    ideal = edge_ideal(host)
    power = ideal.power(s + 1)
    gens = order.generators
    r = len(gens)
    reports = []
    for ell in ells if ells is not None else range(1, r):
        if not 1 <= ell <= r - 1:
            raise ValueError(f"ell={ell} out of range 1..{r - 1}")
        target = gens[ell]
        left = power.add(gens[:ell]).colon(target)
        base = power.colon(target)
        variables = tuple(
            str(g) for g in left.gens if g.degree() == 1
        )
        rebuilt = base.add([g for g in left.gens if g.degree() == 1])
        reports.append(
            DecompositionReport(s=s, ell=ell, holds=(rebuilt == left), variables=variables)
        )
    return reports
