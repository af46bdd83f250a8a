"""Exact monomial-ideal arithmetic.

Variables are (base name, polarization index) pairs; index 0 marks an
original variable, higher indices hold polarized copies.  Monomials are
sparse exponent maps in canonical sorted form, ideals are kept as minimal
generating sets, so ideal equality is plain syntactic equality.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Tuple, TYPE_CHECKING

if TYPE_CHECKING:
    from .graph import SimpleGraph

Variable = Tuple[str, int]  # (base name, polarization index)


def var_str(v: Variable) -> str:
    name, idx = v
    return name if idx == 0 else f"{name}@{idx}"


def parse_var(token: str) -> Variable:
    if "@" in token:
        name, _, idx = token.rpartition("@")
        return (name, int(idx))
    return (token, 0)


class Monomial:
    """Monomial as a sparse map Variable -> positive exponent."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Mapping[Variable, int] | Iterable[tuple[Variable, int]] = ()):
        items = dict(exps)
        for v, e in items.items():
            if e < 0:
                raise ValueError(f"negative exponent for {var_str(v)}")
        self.exps: tuple[tuple[Variable, int], ...] = tuple(
            sorted((v, e) for v, e in items.items() if e > 0)
        )
        self._hash = hash(self.exps)

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def support(self) -> frozenset[Variable]:
        return frozenset(v for v, _ in self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def is_one(self) -> bool:
        return not self.exps

    def exponent(self, v: Variable) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def __mul__(self, other: Monomial) -> Monomial:
        out = dict(self.exps)
        for v, e in other.exps:
            out[v] = out.get(v, 0) + e
        return Monomial(out)

    def divides(self, other: Monomial) -> bool:
        it = dict(other.exps)
        return all(it.get(v, 0) >= e for v, e in self.exps)

    def gcd(self, other: Monomial) -> Monomial:
        it = dict(other.exps)
        return Monomial({v: min(e, it[v]) for v, e in self.exps if v in it})

    def __floordiv__(self, other: Monomial) -> Monomial:
        """Exact quotient after removing gcd; self // d with d | self."""
        out = dict(self.exps)
        for v, e in other.exps:
            have = out.get(v, 0)
            if have < e:
                raise ValueError("inexact monomial division")
            out[v] = have - e
        return Monomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __lt__(self, other: Monomial) -> bool:
        return (self.degree(), self.exps) < (other.degree(), other.exps)

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(
            var_str(v) if e == 1 else f"{var_str(v)}^{e}" for v, e in self.exps
        )

    __repr__ = __str__

    @staticmethod
    def of(*factors: str | Variable) -> Monomial:
        """Monomial from variable names: Monomial.of("x", "x", "y") = x^2*y."""
        out: dict[Variable, int] = {}
        for f in factors:
            v = parse_var(f) if isinstance(f, str) else f
            out[v] = out.get(v, 0) + 1
        return Monomial(out)


ONE = Monomial()


def _minimal_gens(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-reduced, canonically sorted generator set."""
    pool = sorted(set(gens))  # degree-increasing; divisors come first
    kept: list[Monomial] = []
    for m in pool:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal held by its minimal generating set."""

    __slots__ = ("gens", "_hash")

    def __init__(self, gens: Iterable[Monomial] = ()):
        self.gens = _minimal_gens(gens)
        self._hash = hash(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def variables(self) -> frozenset[Variable]:
        out: set[Variable] = set()
        for g in self.gens:
            out |= g.support()
        return frozenset(out)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def power(self, s: int) -> MonomialIdeal:
        if s < 1:
            raise ValueError("power wants s >= 1")
        return MonomialIdeal(
            _prod(combo) for combo in combinations_with_replacement(self.gens, s)
        )

    def colon(self, m: Monomial) -> MonomialIdeal:
        return MonomialIdeal(g // g.gcd(m) for g in self.gens)

    def add(self, extra: Iterable[Monomial] | Monomial) -> MonomialIdeal:
        if isinstance(extra, Monomial):
            extra = (extra,)
        return MonomialIdeal(list(self.gens) + list(extra))

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.gens)) + ")" if self.gens else "(0)"

    __repr__ = __str__


def _prod(ms: Iterable[Monomial]) -> Monomial:
    out = ONE
    for m in ms:
        out = out * m
    return out


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(gens)


# -- polarization -----------------------------------------------------------

PolarizationMap = dict  # new Variable -> original Variable


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """Squarefree polarization: x^e becomes x_0 x_1 ... x_{e-1}.

    A variable (name, i) with exponent e turns into the product of
    (name, i), (name, i+1), ..., (name, i+e-1); the same copies are shared
    across generators, and squarefree input is returned unchanged.
    """
    lineage: PolarizationMap = {}
    new_gens = []
    for g in ideal.gens:
        factors: dict[Variable, int] = {}
        for (name, idx), e in g.exps:
            for t in range(e):
                copy = (name, idx + t)
                factors[copy] = 1
                if t > 0:
                    lineage[copy] = (name, idx)
        new_gens.append(Monomial(factors))
    return MonomialIdeal(new_gens), lineage


# -- edge-ideal dictionary ----------------------------------------------------

def edge_ideal(g: "SimpleGraph") -> MonomialIdeal:
    """I(G) = (xy : xy an edge of G); isolated vertices contribute nothing."""
    return MonomialIdeal(Monomial.of(u, v) for u, v in g.edges())


def graph_of(ideal: MonomialIdeal) -> "SimpleGraph":
    """Graph whose edge ideal this is; vertex set = variables in generators."""
    from .graph import SimpleGraph

    edges = []
    for g in ideal.gens:
        if g.degree() != 2 or not g.is_squarefree():
            raise ValueError(f"generator {g} is not a squarefree quadric")
        u, v = (var_str(w) for w, _ in g.exps)
        edges.append((u, v))
    vertices = sorted(var_str(v) for v in ideal.variables())
    return SimpleGraph(vertices, edges)


# -- text format ----------------------------------------------------------------

def parse_ideal_text(text: str) -> MonomialIdeal:
    """Ideal text format: one generator per line, e.g. "a^2*b*c"."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        factors: dict[Variable, int] = {}
        for token in line.split("*"):
            token = token.strip()
            if not token:
                raise ValueError(f"line {lineno}: empty factor")
            base, _, exp = token.rpartition("^")
            if base and exp.isdigit():
                v, e = parse_var(base), int(exp)
            else:
                v, e = parse_var(token), 1
            if e < 1:
                raise ValueError(f"line {lineno}: exponent must be positive")
            factors[v] = factors.get(v, 0) + e
        gens.append(Monomial(factors))
    return MonomialIdeal(gens)


def ideal_to_text(ideal: MonomialIdeal) -> str:
    return "\n".join(str(g) for g in ideal.gens) + ("\n" if ideal.gens else "")
