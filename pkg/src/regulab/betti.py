"""Ground-truth regularity oracle via Hochster's formula.

Pipeline: polarize the ideal, translate the squarefree result into its
Stanley-Reisner non-face system, then sum exact reduced-homology ranks of
vertex-subset restrictions.  Restrictions with a cone point are skipped
(contractible); the rest are shrunk by elementary collapses before any
linear algebra runs.  Ranks are exact: fraction-free integer elimination
in characteristic 0, modular elimination over prime fields.  No floating
point anywhere.

Conventions (b_{i,j} of the IDEAL, not the quotient):
    b_{i,j}(I) = b_{i+1,j}(S/I),
    b_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(restriction to W),
    reg(zero ideal) = reg(variable-generated ideal) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

import numpy as np

from .graph import SimpleGraph, is_chordal
from .ideals import MonomialIdeal, polarize, var_str

SIZE_WALL = 24  # hard cap on polarized vertices; beyond this, refuse


class SizeWallError(ValueError):
    """Raised when a Hochster run would exceed the desk-scale size wall."""


@dataclass(frozen=True)
class FieldSpec:
    """Exact coefficient field: characteristic 0 (rationals) or a prime."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and (c < 2 or any(c % p == 0 for p in range(2, int(c**0.5) + 1))):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")


QQ = FieldSpec(0)


@dataclass(frozen=True)
class NonFaceSystem:
    """Stanley-Reisner data: minimal non-faces over a vertex set."""

    vertices: tuple[str, ...]
    nonfaces: tuple[frozenset[str], ...]

    def masks(self) -> tuple[dict[str, int], list[int]]:
        index = {v: i for i, v in enumerate(self.vertices)}
        return index, [
            sum(1 << index[v] for v in nf) for nf in self.nonfaces
        ]


def stanley_reisner(ideal: MonomialIdeal) -> NonFaceSystem:
    """Non-face system of a squarefree ideal: non-faces = generator supports."""
    if not ideal.is_squarefree():
        raise ValueError("stanley_reisner needs a squarefree ideal")
    vertices = tuple(sorted(var_str(v) for v in ideal.variables()))
    nonfaces = tuple(
        frozenset(var_str(v) for v in g.support()) for g in ideal.gens
    )
    return NonFaceSystem(vertices, nonfaces)


# -- exact rank ------------------------------------------------------------

def rank_exact_char0(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination.

    Division-free cross-multiplication with per-row gcd reduction keeps
    entries bounded at these sizes.
    """
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        pval = prow[col]
        for r in range(rank + 1, nrows):
            val = m[r][col]
            if not val:
                continue
            row = m[r]
            for c in range(col, ncols):
                row[c] = row[c] * pval - prow[c] * val
            g = 0
            for c in range(col, ncols):
                g = gcd(g, row[c])
                if g == 1:
                    break
            if g > 1:
                for c in range(col, ncols):
                    row[c] //= g
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by vectorized modular elimination."""
    if not rows or not rows[0]:
        return 0
    m = np.array(rows, dtype=np.int64) % p
    nrows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        nz = np.nonzero(m[rank:, col])[0]
        if nz.size == 0:
            continue
        pivot = rank + nz[0]
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = m[rank] * inv % p
        targets = np.nonzero(m[rank + 1:, col])[0] + rank + 1
        if targets.size:
            m[targets] = (m[targets] - np.outer(m[targets, col], m[rank])) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank(rows: list[list[int]], field: FieldSpec) -> int:
    if field.characteristic == 0:
        return rank_exact_char0(rows)
    return rank_mod_p(rows, field.characteristic)


# -- restricted complexes -----------------------------------------------------

def _restricted_faces(w_mask: int, nf_masks: list[int]) -> list[int]:
    """All subsets of w_mask containing no non-face, as bitmasks (incl. 0)."""
    verts = []
    m = w_mask
    while m:
        low = m & -m
        verts.append(low)
        m ^= low
    by_vertex: list[list[int]] = []
    for bit in verts:
        by_vertex.append([nf for nf in nf_masks if nf & bit and nf & w_mask == nf])
    faces = [0]
    stack = [(0, 0)]
    while stack:
        cur, start = stack.pop()
        for i in range(start, len(verts)):
            new = cur | verts[i]
            if any(nf & new == nf for nf in by_vertex[i]):
                continue
            faces.append(new)
            stack.append((new, i + 1))
    return faces


def _collapse(faces: list[int]) -> set[int]:
    """Elementary collapses: repeatedly remove free face / unique cofacet pairs.

    Homotopy-type preserving, so reduced homology is unchanged; the empty
    face participates (a lone point collapses to the void complex, which
    has vanishing reduced homology, matching the point).
    """
    alive = set(faces)
    all_bits = 0
    for f in faces:
        all_bits |= f
    bit_list = [1 << i for i in range(all_bits.bit_length())]

    def cofacets(f: int) -> list[int]:
        return [f | b for b in bit_list if not f & b and (f | b) in alive]

    count = {f: len(cofacets(f)) for f in alive}
    stack = [f for f, c in count.items() if c == 1]
    while stack:
        f = stack.pop()
        if f not in alive or count[f] != 1:
            continue
        cof = cofacets(f)
        if len(cof) != 1:  # stale entry
            count[f] = len(cof)
            continue
        t = cof[0]
        alive.discard(f)
        alive.discard(t)
        for parent in (t, f):
            sub = parent
            while sub:
                low = sub & -sub
                facet = parent ^ low
                sub ^= low
                if facet in alive:
                    count[facet] -= 1
                    if count[facet] == 1:
                        stack.append(facet)
    return alive


def _homology_of_faces(faces: set[int], field: FieldSpec) -> dict[int, int]:
    """Reduced homology dims of a collapsed face set (masks, incl. 0 if alive)."""
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort()
    top = max(by_dim)
    ranks: dict[int, int] = {}  # d -> rank of boundary C_d -> C_{d-1}
    for d in range(top, -1, -1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, [])
        if not upper or not lower:
            ranks[d] = 0
            continue
        lower_index = {f: i for i, f in enumerate(lower)}
        rows = []
        for f in upper:
            row = [0] * len(lower)
            sign = 1
            sub = f
            # iterate bits ascending; sign alternates by vertex position
            while sub:
                low = sub & -sub
                facet = f ^ low
                sub ^= low
                j = lower_index.get(facet)
                if j is not None:
                    row[j] = sign
                sign = -sign
            rows.append(row)
        ranks[d] = _rank(rows, field)
    dims: dict[int, int] = {}
    for d in range(-1, top + 1):
        cd = len(by_dim.get(d, []))
        h = cd - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            dims[d] = h
    return dims


def reduced_homology_dims(
    nf: NonFaceSystem, w: Iterable[str], field: FieldSpec = QQ
) -> dict[int, int]:
    """Reduced homology of the restriction of the complex to the subset w."""
    index = {v: i for i, v in enumerate(nf.vertices)}
    w_mask = 0
    for v in w:
        if v not in index:
            raise ValueError(f"vertex {v!r} not in the non-face system")
        w_mask |= 1 << index[v]
    nf_masks = [sum(1 << index[v] for v in f) for f in nf.nonfaces]
    faces = _restricted_faces(w_mask, nf_masks)
    return _homology_of_faces(_collapse(faces), field)


# -- Hochster scan --------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Sparse (homological index i, internal degree j) -> b_{i,j} of an ideal."""

    entries: tuple[tuple[tuple[int, int], int], ...]
    characteristic: int

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def regularity(self) -> int:
        if not self.entries:
            return 1  # zero ideal convention
        return max(j - i for (i, j), _ in self.entries)


def _relevant_subsets(n: int, nf_masks: list[int]) -> Iterable[int]:
    """Subsets with no cone point: every vertex lies in a contained non-face.

    Computed by a subset-OR dynamic program: cover[W] = union of non-faces
    inside W; W is relevant iff cover[W] = W.  Cone restrictions are
    contractible and contribute nothing to Hochster's sum.
    """
    size = 1 << n
    cov = [0] * size
    for nf in nf_masks:
        cov[nf] = nf
    for i in range(n):
        bit = 1 << i
        for w in range(size):
            if w & bit:
                c = cov[w ^ bit] | cov[w]
                cov[w] = c
    for w in range(1, size):
        if cov[w] == w:
            yield w


def betti_table(ideal: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    """Graded Betti numbers of the ideal via polarization + Hochster."""
    if ideal.is_zero():
        return BettiTable((), field.characteristic)
    pol, _ = polarize(ideal)
    nf = stanley_reisner(pol)
    n = len(nf.vertices)
    if n > SIZE_WALL:
        raise SizeWallError(
            f"{n} polarized vertices exceed the size wall of {SIZE_WALL}"
        )
    _, nf_masks = nf.masks()
    entries: dict[tuple[int, int], int] = {}
    for w in _relevant_subsets(n, nf_masks):
        faces = _restricted_faces(w, nf_masks)
        dims = _homology_of_faces(_collapse(faces), field)
        if not dims:
            continue
        j = w.bit_count()
        for d, r in dims.items():
            i = j - d - 2  # ideal indexing: b_{i,j}(I) = b_{i+1,j}(S/I)
            entries[(i, j)] = entries.get((i, j), 0) + r
    # Self-check: b_{0,j} must count the minimal generators of degree j.
    degs: dict[int, int] = {}
    for g in ideal.gens:
        degs[g.degree()] = degs.get(g.degree(), 0) + 1
    for j, cnt in degs.items():
        if entries.get((0, j), 0) != cnt:
            raise AssertionError(
                f"Hochster self-check failed: b_0,{j} = {entries.get((0, j), 0)}, "
                f"but the ideal has {cnt} generators of degree {j}"
            )
    return BettiTable(tuple(sorted(entries.items())), field.characteristic)


def regularity(ideal: MonomialIdeal, field: FieldSpec = QQ) -> int:
    """reg(I) = max(j - i) over nonzero Betti entries; reg(0) = 1."""
    return betti_table(ideal, field).regularity()


def graph_regularity(g: SimpleGraph, power: int = 1, field: FieldSpec = QQ) -> int:
    """reg(I(G)^power), with the Froberg fast path at power 1."""
    from .ideals import edge_ideal

    ideal = edge_ideal(g)
    if ideal.is_zero():
        return 1
    if power == 1 and froberg_linear_check(g):
        return 2
    return regularity(ideal.power(power) if power > 1 else ideal, field)


def froberg_linear_check(g: SimpleGraph) -> bool:
    """True iff the complement is chordal, i.e. reg(I(G)) = 2 (Froberg)."""
    if g.num_edges() == 0:
        raise ValueError("froberg_linear_check needs a graph with an edge")
    return is_chordal(g.complement()).is_chordal
