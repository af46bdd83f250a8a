"""Named verification suites with machine-readable reports.

Each suite re-checks one headline claim end to end and returns a
SuiteReport with per-case records; the CLI `verify` subcommand and the
acceptance tests are both thin wrappers over run_suite.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from . import catalog
from .betti import FieldSpec, QQ, betti_table, regularity
from .evenconn import (
    SFoldProduct,
    colon_graph,
    colon_ideal_of_power,
    even_connected_pairs,
    verify_ordered_colon_decomposition,
)
from .graph import (
    SimpleGraph,
    are_isomorphic,
    is_chordal,
    is_gap_free,
    multiply_vertices,
)
from .ideals import Monomial, edge_ideal
from .structure import (
    banerjee_sufficiency_check,
    check_anticycle_disjointness,
    check_computer_aided_lemma,
    check_no_big_anticycles,
    check_dominating_triangle_colon,
    check_structure_lemmas,
    classify_gap_diamond_free,
    dominating_triangles,
)

_SEED = 20250517  # fixed so suite contents are reproducible run to run


@dataclass
class CaseRecord:
    case_id: str
    expected: object
    computed: object
    passed: bool
    walltime: float = 0.0
    skipped: bool = False
    reason: str = ""

    def as_dict(self) -> dict:
        return {
            "case": self.case_id,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "walltime": round(self.walltime, 4),
            **({"skipped": True, "reason": self.reason} if self.skipped else {}),
        }


@dataclass
class SuiteReport:
    suite: str
    records: list[CaseRecord] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def passed(self) -> bool:
        return all(r.passed or r.skipped for r in self.records) and not all(
            r.skipped for r in self.records
        )

    def counts(self) -> dict:
        return {
            "cases": len(self.records),
            "passed": sum(r.passed for r in self.records),
            "failed": sum(not r.passed and not r.skipped for r in self.records),
            "skipped": sum(r.skipped for r in self.records),
        }

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "summary": self.counts(),
            "pass": self.passed(),
            "metadata": self.metadata,
            "cases": [r.as_dict() for r in self.records],
        }


class _Budget:
    """Soft wall-clock budget; overruns mark remaining cases skipped."""

    def __init__(self, timeout_secs: Optional[float]):
        self.start = time.monotonic()
        self.timeout = timeout_secs

    def exhausted(self) -> bool:
        return self.timeout is not None and time.monotonic() - self.start > self.timeout


def _timed(record_fn: Callable[[], CaseRecord]) -> CaseRecord:
    t0 = time.monotonic()
    rec = record_fn()
    rec.walltime = time.monotonic() - t0
    return rec


def resolve_jobs(jobs: Optional[int]) -> int:
    if jobs is not None:
        return max(1, jobs)
    env = os.environ.get("REGULAB_JOBS", "")
    return max(1, int(env)) if env.isdigit() else 1


def _pmap(fn, items: list, jobs: int) -> list:
    """Order-stable map, optionally across processes."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- graph samples ----------------------------------------------------------------

def _all_graphs(n: int) -> Iterable[SimpleGraph]:
    """Every labeled graph on n vertices with at least one edge."""
    verts = [f"v{i}" for i in range(1, n + 1)]
    pairs = list(combinations(verts, 2))
    for mask in range(1, 1 << len(pairs)):
        yield SimpleGraph(verts, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def _random_graph(n: int, rng: random.Random, p: float = 0.5) -> SimpleGraph:
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = [e for e in combinations(verts, 2) if rng.random() < p]
    return SimpleGraph(verts, edges)


def family_members(
    bases: list[str], count: int, max_multiplicity: int = 2, max_vertices: int = 12
) -> list[tuple[str, SimpleGraph]]:
    """Deterministic sample of admissible multiplications, round-robin over bases.

    Multiplicity-1-everywhere members (the bases themselves) are skipped.
    """
    streams = [
        (name, iter(catalog.enumerate_family(name, max_multiplicity, "gap-and-diamond-free")))
        for name in bases
    ]
    out: list[tuple[str, SimpleGraph]] = []
    seen_base: set[str] = set()
    while streams and len(out) < count:
        name, it = streams.pop(0)
        advanced = False
        for g in it:
            if g.n > max_vertices:
                continue
            if name not in seen_base:
                seen_base.add(name)  # first emission is the base itself
                continue
            out.append((name, g))
            advanced = True
            break
        if advanced:
            streams.append((name, it))
    return out


# -- linear resolution iff chordal complement -----------------------------------------

def _froberg_case(args) -> CaseRecord:
    tag, g, char = args
    fld = FieldSpec(char)
    expected = is_chordal(g.complement()).is_chordal
    computed = regularity(edge_ideal(g), fld) == 2
    return CaseRecord(tag, expected, computed, expected == computed)


def run_froberg_n5(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    """Linear resolution (reg = 2, by the oracle) iff complement chordal:
    exhaustive on <= 5 vertices, sampled on 6."""
    report = SuiteReport("froberg-n5", metadata={"char": fld.characteristic})
    budget = _Budget(timeout)
    tasks = []
    for n in range(2, 6):
        for i, g in enumerate(_all_graphs(n)):
            tasks.append((f"n{n}-#{i}", g, fld.characteristic))
    rng = random.Random(_SEED)
    for i in range(500):
        g = _random_graph(6, rng)
        if g.num_edges() == 0:
            g = SimpleGraph([f"v{i}" for i in range(1, 7)], [("v1", "v2")])
        tasks.append((f"n6-sample-{i}", g, fld.characteristic))
    if budget.exhausted():
        report.records.append(CaseRecord("all", None, None, False, skipped=True, reason="timeout"))
        return report
    t0 = time.monotonic()
    report.records = _pmap(_froberg_case, tasks, jobs)
    span = time.monotonic() - t0
    for r in report.records:
        r.walltime = span / max(1, len(tasks))
    return report


# -- regularity bound for the classified graphs ---------------------------------------

_REG3_NAMES = ["C5", "C_6^c", "G_0", "G_1", "G_2", "G_3",
               "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"]


def run_reg_le_3(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    report = SuiteReport("reg-le-3", metadata={"char": fld.characteristic})
    budget = _Budget(timeout)
    cases: list[tuple[str, SimpleGraph, str, object]] = [
        ("K_3", catalog.get("K_3"), "==2", 2)
    ]
    for name in _REG3_NAMES:
        cases.append((name, catalog.get(name), "<=3", None))
    members = family_members(
        ["C5", "G_0", "G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"],
        30, max_multiplicity=3,
    )
    for i, (base, g) in enumerate(members):
        cases.append((f"member-{i}-of-{base}", g, "<=3", None))
    for tag, g, kind, exact in cases:
        if budget.exhausted():
            report.records.append(
                CaseRecord(tag, None, None, False, skipped=True, reason="timeout")
            )
            continue
        def check(tag=tag, g=g, kind=kind, exact=exact):
            reg = regularity(edge_ideal(g), fld)
            ok = (reg == exact) if kind == "==2" else (reg <= 3)
            return CaseRecord(tag, f"reg {kind.replace('==2', '= 2')}", reg, ok)
        report.records.append(_timed(check))
    return report


# -- regularity of squares (and one cube) ----------------------------------------------

_DIRECT_S2 = ["C5", "G_1", "G_2", "G_3", "G_10", "G_0"]
_INDIRECT_S2 = ["G_5", "G_6", "G_7", "G_8", "G_9"]


def run_main_theorem_s2(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    report = SuiteReport("main-theorem-s2", metadata={"char": fld.characteristic})
    budget = _Budget(timeout)
    for name in _DIRECT_S2:
        if budget.exhausted():
            report.records.append(CaseRecord(name, 4, None, False, skipped=True, reason="timeout"))
            continue
        def check(name=name):
            reg = regularity(edge_ideal(catalog.get(name)).power(2), fld)
            return CaseRecord(f"reg(I({name})^2) [direct]", 4, reg, reg == 4)
        report.records.append(_timed(check))
    if not budget.exhausted():
        def cube():
            reg = regularity(edge_ideal(catalog.get("C5")).power(3), fld)
            return CaseRecord("reg(I(C5)^3) [direct]", 6, reg, reg == 6)
        report.records.append(_timed(cube))
    for name in _INDIRECT_S2:
        if budget.exhausted():
            report.records.append(CaseRecord(name, None, None, False, skipped=True, reason="timeout"))
            continue
        def check(name=name):
            # Beyond the direct-computation size wall: certify via the
            # sufficiency route (reg(I) <= 4, all s=1 colon graphs reg 2),
            # which pins reg(I^2) = 4, and say so in the record.
            v = banerjee_sufficiency_check(catalog.get(name), 1, fld)
            return CaseRecord(
                f"reg(I({name})^2) [indirect]",
                "certified: reg(I^2) = 4",
                "certified: reg(I^2) = 4" if v.certified else v.verdict,
                v.certified,
            )
        report.records.append(_timed(check))
    return report


# -- the two frozen colon regularities -------------------------------------------------

def run_colon_values(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    report = SuiteReport("colon-values", metadata={"char": fld.characteristic})
    for host_name, e in [("G_0", ("y", "a_2")), ("G_10", ("a_0", "y"))]:
        def check(host_name=host_name, e=e):
            host = catalog.get(host_name)
            ideal = colon_ideal_of_power(host, SFoldProduct(host, [e]))
            reg = regularity(ideal, fld)
            return CaseRecord(f"reg(I({host_name})^2 : {e[0]}*{e[1]})", 3, reg, reg == 3)
        report.records.append(_timed(check))
    return report


# -- sufficiency pipeline ---------------------------------------------------------------

def _y_copies(g: SimpleGraph, base_vertex: str) -> set[str]:
    return {v for v in g.vertices if v == base_vertex or v.startswith(base_vertex + "^")}


def _pure_product_generators(g: SimpleGraph, s_max: int, specials: list[set[str]]):
    """Generators of I^s every factorization of which draws all its edges
    from those meeting one fixed special vertex set."""
    from .evenconn import all_expressions, default_edge_order

    ideal = edge_ideal(g)
    order = default_edge_order(g)
    out: set[tuple[int, str]] = set()
    for s in range(1, s_max + 1):
        for gen in ideal.power(s).gens:
            vecs = all_expressions(gen, order, s)
            for spec in specials:
                if all(
                    all(a == 0 or e[0] in spec or e[1] in spec for e, a in zip(order, vec))
                    for vec in vecs
                ):
                    out.add((s, str(gen)))
                    break
    return out


def run_banerjee(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    """Certification for G_1..G_9 + 20 members; the precise inconclusive
    pattern for the G_0/G_10 families.

    For G_10 members the inconclusive generators are exactly the pure
    products of y-edges; for G_0 members, the pure products of y-edges or
    of u_1-edges ("pure": every factorization into edges stays inside that
    class).  A generator with a mixed factorization is always conclusive,
    even when its maximal expression uses a y-edge.
    """
    report = SuiteReport("banerjee", metadata={"char": fld.characteristic, "s_max": 2})
    budget = _Budget(timeout)
    clean = [(n, catalog.get(n)) for n in
             ["G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9"]]
    clean += [
        (f"member-{i}-of-{b}", g)
        for i, (b, g) in enumerate(family_members(
            ["G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9"], 20, max_vertices=11
        ))
    ]
    total_cases = 0
    fast_cases = 0
    colon_products: list[tuple[SimpleGraph, SFoldProduct]] = []
    for tag, g in clean:
        if budget.exhausted():
            report.records.append(CaseRecord(tag, None, None, False, skipped=True, reason="timeout"))
            continue
        def check(tag=tag, g=g):
            v = banerjee_sufficiency_check(g, 2, fld)
            return CaseRecord(
                tag, "linear powers certified",
                "linear powers certified" if v.certified else v.verdict,
                v.certified,
            ), v
        t0 = time.monotonic()
        rec, v = check()
        rec.walltime = time.monotonic() - t0
        report.records.append(rec)
        total_cases += len(v.cases)
        fast_cases += sum(c.via == "froberg" for c in v.cases)
    frac = fast_cases / total_cases if total_cases else 0.0
    report.records.append(
        CaseRecord("froberg fast-path fraction", ">= 0.95", round(frac, 4), frac >= 0.95)
    )
    report.metadata["colon_cases"] = total_cases

    families = [
        ("G_10", {}, ["y"]),
        ("G_10", {"y": 2}, ["y"]),
        ("G_0", {}, ["y", "u_1"]),
        ("G_0", {"u_1": 2}, ["y", "u_1"]),
    ]
    for base, plan, special_roots in families:
        if budget.exhausted():
            report.records.append(
                CaseRecord(f"{base}{plan}", None, None, False, skipped=True, reason="timeout")
            )
            continue
        def check(base=base, plan=plan, special_roots=special_roots):
            g = multiply_vertices(catalog.get(base), plan)
            v = banerjee_sufficiency_check(g, 2, fld)
            actual = {(c.s, c.generator) for c in v.offenders}
            expect = _pure_product_generators(g, 2, [_y_copies(g, r) for r in special_roots])
            tag = f"{base} member {plan or '(base)'}: inconclusive exactly at pure special products"
            return CaseRecord(tag, sorted(expect), sorted(actual), actual == expect)
        report.records.append(_timed(check))
    return report


# -- even-connection oracle equivalence --------------------------------------------------

def _ec_graph_case(args) -> CaseRecord:
    tag, g, s_max, gen_cap, seed = args
    ideal = edge_ideal(g)
    if ideal.is_zero():
        return CaseRecord(tag, True, True, True)
    rng = random.Random(seed)
    for s in range(1, s_max + 1):
        gens = list(ideal.power(s).gens)
        if gen_cap is not None and len(gens) > gen_cap:
            gens = rng.sample(gens, gen_cap)
        for gen in gens:
            m = _product_from_generator(g, gen, s)
            if m is None:
                return CaseRecord(tag, "factorable", str(gen), False)
            pairs = even_connected_pairs(g, m)
            colon = colon_ideal_of_power(g, m)
            deg2 = {q for q in colon.gens if q.degree() == 2}
            predicted = {Monomial.of(u, v) for u, v in g.edges()} | {
                Monomial.of(u, v) for u, v in pairs
            }
            predicted = {q for q in predicted if not any(
                p != q and p.divides(q) for p in predicted | {w for w in colon.gens if w.degree() == 1}
            )}
            # compare against the actual degree-2 minimal generators
            if deg2 != predicted:
                return CaseRecord(
                    tag,
                    sorted(map(str, predicted)),
                    sorted(map(str, deg2)),
                    False,
                    reason=f"s={s} m={m.product()}",
                )
    return CaseRecord(tag, "equivalent", "equivalent", True)


def _product_from_generator(g: SimpleGraph, gen, s: int) -> Optional[SFoldProduct]:
    from .evenconn import all_expressions, default_edge_order

    order = default_edge_order(g)
    vecs = all_expressions(gen, order, s)
    if not vecs:
        return None
    edges: list = []
    for e, a in zip(order, vecs[0]):
        edges.extend([e] * a)
    return SFoldProduct(g, edges)


def run_even_connection_oracle(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    """Degree-2 minimal generators of (I^{s+1} : m) = host edges plus
    even-connected pairs, after discarding pairs absorbed by degree-1
    generators.  Exhaustive on <= 5 vertices, sampled on 7."""
    report = SuiteReport("even-connection-oracle", metadata={"char": fld.characteristic})
    budget = _Budget(timeout)
    tasks = []
    for n in range(2, 6):
        for i, g in enumerate(_all_graphs(n)):
            tasks.append((f"n{n}-#{i}", g, 2, None, 0))
    rng = random.Random(_SEED + 1)
    for i in range(200):
        g = _random_graph(7, rng, p=0.4)
        # sampled generator set: full enumeration at n = 7 is out of budget
        tasks.append((f"n7-sample-{i}", g, 2, 5, rng.randrange(1 << 30)))
    if budget.exhausted():
        report.records.append(CaseRecord("all", None, None, False, skipped=True, reason="timeout"))
        return report
    t0 = time.monotonic()
    report.records = _pmap(_ec_graph_case, tasks, jobs)
    span = time.monotonic() - t0
    for r in report.records:
        r.walltime = span / max(1, len(tasks))
    report.metadata["n7_generator_cap"] = 5
    return report


# -- ordered colon decomposition ---------------------------------------------------------

def run_ordered_colon(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    report = SuiteReport("ordered-colon")
    plan = [("P_4", 1), ("C5", 1), ("G_1", 1), ("G_10", 1), ("P_4", 2), ("C5", 2)]
    budget = _Budget(timeout)
    for name, s in plan:
        if budget.exhausted():
            report.records.append(
                CaseRecord(f"{name} s={s}", None, None, False, skipped=True, reason="timeout")
            )
            continue
        def check(name=name, s=s):
            reps = verify_ordered_colon_decomposition(catalog.get(name), s)
            bad = [r.ell for r in reps if not r.holds]
            return CaseRecord(
                f"{name} s={s} (all ell=1..{len(reps)})",
                "identity holds",
                "identity holds" if not bad else f"fails at ell={bad}",
                not bad,
            )
        report.records.append(_timed(check))
    return report


# -- structural lemma suite ---------------------------------------------------------------

def run_structure_lemmas(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    report = SuiteReport("structure-lemmas", metadata={"char": fld.characteristic})
    budget = _Budget(timeout)
    g1to9 = ["G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9"]

    for name in g1to9:
        def check(name=name):
            reps = check_structure_lemmas(catalog.get(name))
            bad = [r.lemma for r in reps if not r.ok()]
            return CaseRecord(
                f"clique/star lemmas on {name}", "all clauses", bad or "all clauses", not bad
            )
        report.records.append(_timed(check))

    rng = random.Random(_SEED + 2)
    found = 0
    attempts = 0
    while found < 100 and attempts < 20000 and not budget.exhausted():
        attempts += 1
        n = rng.randint(4, 8)
        left = rng.randint(1, n - 1)
        verts = [f"v{i}" for i in range(1, n + 1)]
        edges = [
            (u, v)
            for u in verts[:left]
            for v in verts[left:]
            if rng.random() < 0.5
        ]
        g = SimpleGraph(verts, edges)
        if g.num_edges() == 0 or not is_gap_free(g):
            continue
        found += 1
        chordal = is_chordal(g.complement()).is_chordal
        report.records.append(
            CaseRecord(
                f"gap-free bipartite #{found} (n={n})",
                "complement chordal",
                "complement chordal" if chordal else "not chordal",
                chordal,
            )
        )
    report.metadata["bipartite_samples"] = found

    # Anticycle lemmas over every colon graph the sufficiency pipeline visits.
    anticycle_graphs = 0
    anticycle_fail = None
    hosts = [(n, catalog.get(n)) for n in g1to9 + ["G_0", "G_10"]]
    hosts += [(f"member-{i}-of-{b}", g) for i, (b, g) in
              enumerate(family_members(g1to9, 20, max_vertices=11))]
    for tag, g in hosts:
        if budget.exhausted():
            report.records.append(
                CaseRecord(f"anticycles: {tag}", None, None, False, skipped=True, reason="timeout")
            )
            continue
        ideal = edge_ideal(g)
        for s in (1, 2):
            for gen in ideal.power(s).gens:
                m = _product_from_generator(g, gen, s)
                result = colon_graph(g, m)
                anticycle_graphs += 1
                r1 = check_anticycle_disjointness(g, m, result)
                r2 = check_no_big_anticycles(g, m, result)
                if not (r1.ok() and r2.ok()):
                    anticycle_fail = f"{tag} s={s} m={gen}: {r1.details or r2.details}"
                    break
            if anticycle_fail:
                break
        if anticycle_fail:
            break
    report.records.append(
        CaseRecord(
            f"anticycle lemmas on {anticycle_graphs} colon graphs",
            "disjoint from product; none of size >= 6",
            anticycle_fail or "disjoint from product; none of size >= 6",
            anticycle_fail is None,
        )
    )

    # Dominating-triangle colons: C5 position + regularity exactly 2.
    for name in g1to9:
        if budget.exhausted():
            report.records.append(
                CaseRecord(f"dom-triangle colon {name}", None, None, False,
                           skipped=True, reason="timeout")
            )
            continue
        def check(name=name):
            g = catalog.get(name)
            bad = []
            for tri in dominating_triangles(g):
                tv = sorted(tri)
                for e in [(tv[0], tv[1]), (tv[0], tv[2]), (tv[1], tv[2])]:
                    reps = check_dominating_triangle_colon(g, tri, SFoldProduct(g, [e]), fld)
                    bad += [f"{e}: {r.lemma} ({r.details})" for r in reps if not r.ok()]
            return CaseRecord(
                f"dominating-triangle colons of {name}", "all clauses", bad or "all clauses", not bad
            )
        report.records.append(_timed(check))

    members = family_members(g1to9, 20, max_vertices=11)
    for tag, g in [(n, catalog.get(n)) for n in g1to9] + [
        (f"member-{i}-of-{b}", g) for i, (b, g) in enumerate(members)
    ]:
        if budget.exhausted():
            report.records.append(
                CaseRecord(f"five-cycle/edge lemma {tag}", None, None, False,
                           skipped=True, reason="timeout")
            )
            continue
        def check(tag=tag, g=g):
            cases = check_computer_aided_lemma(g)
            bad = [c for c in cases if c.clause == "none"]
            return CaseRecord(
                f"five-cycle/edge lemma on {tag} ({len(cases)} pairs)",
                "clause (i) or (ii)",
                "clause (i) or (ii)" if not bad else
                f"fails at C5={bad[0].cycle} e={bad[0].edge}",
                not bad,
            )
        report.records.append(_timed(check))
    return report


def run_five_cycle_edge(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    """Standalone run of the five-cycle/edge case analysis: every induced
    C5 and every disjoint edge satisfies clause (i) or (ii)."""
    report = SuiteReport("five-cycle-edge")
    budget = _Budget(timeout)
    g1to9 = ["G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9"]
    members = family_members(g1to9, 20, max_vertices=11)
    for tag, g in [(n, catalog.get(n)) for n in g1to9] + [
        (f"member-{i}-of-{b}", g) for i, (b, g) in enumerate(members)
    ]:
        if budget.exhausted():
            report.records.append(
                CaseRecord(tag, None, None, False, skipped=True, reason="timeout")
            )
            continue
        def check(tag=tag, g=g):
            cases = check_computer_aided_lemma(g)
            bad = [c for c in cases if c.clause == "none"]
            return CaseRecord(
                f"{tag} ({len(cases)} pairs)",
                "clause (i) or (ii)",
                "clause (i) or (ii)" if not bad else
                f"fails at C5={bad[0].cycle} e={bad[0].edge}",
                not bad,
            )
        report.records.append(_timed(check))
    return report


# -- classification round trip -------------------------------------------------------------

def _canonical_base(name: str) -> str:
    """First catalog base isomorphic to the named one.

    The figure contains isomorphic panels under different labelings
    (G_6 = G_7 = G_8 up to isomorphism), so the classifier's first-hit
    answer is the class representative, not necessarily the input's name.
    """
    g = catalog.get(name)
    for other in catalog.FIGURE_BASES:
        if are_isomorphic(catalog.get(other), g) is not None:
            return other
    raise AssertionError(f"{name} matches no catalog base")


def run_classification(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    report = SuiteReport("classification")
    budget = _Budget(timeout)
    rng = random.Random(_SEED + 3)
    bases = ["C5", "G_0", "G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"]
    canonical = {b: _canonical_base(b) for b in bases}
    report.metadata["base_classes"] = canonical
    for i in range(100):
        if budget.exhausted():
            report.records.append(
                CaseRecord(f"roundtrip-{i}", None, None, False, skipped=True, reason="timeout")
            )
            continue
        def check(i=i):
            base_name = rng.choice(bases)
            base = catalog.get(base_name)
            free = catalog.triangle_free_vertices(base)
            plan = {v: rng.randint(1, 3) for v in free}
            plan = {v: k for v, k in plan.items() if k > 1}
            g = multiply_vertices(base, plan)
            res = classify_gap_diamond_free(g)
            full_plan = {v: plan.get(v, 1) for v in base.vertices}
            expected_base = canonical[base_name]
            tag = f"roundtrip-{i}: {base_name} x {plan or '{}'}"
            if isinstance(res, str):
                return CaseRecord(tag, expected_base, res, False)
            ok = (
                res.base == expected_base
                and sorted(res.multiplicities.values()) == sorted(full_plan.values())
                and are_isomorphic(res.rebuild(), g) is not None
            )
            return CaseRecord(tag, expected_base, res.base, ok)
        report.records.append(_timed(check))

    def g4():
        res = classify_gap_diamond_free(catalog.get("G_4"))
        return CaseRecord("G_4 rejected", "not (gap,diamond)-free", res,
                          res == "not (gap,diamond)-free")
    report.records.append(_timed(g4))
    return report


# -- field robustness ------------------------------------------------------------------------

def _table_key(ideal, char: int):
    return betti_table(ideal, FieldSpec(char)).as_dict()


def _robustness_case(args) -> CaseRecord:
    tag, ideal = args
    t0 = _table_key(ideal, 0)
    same = all(_table_key(ideal, p) == t0 for p in (2, 3))
    return CaseRecord(tag, "identical over char 0, 2, 3",
                      "identical" if same else "DIVERGENT", same)


def run_field_robustness(
    fld: FieldSpec = QQ, jobs: int = 1, timeout: Optional[float] = None
) -> SuiteReport:
    """Betti tables of every ideal from criteria 1-4 recomputed over
    characteristics 0, 2, 3; any divergence is a failure (and is reported,
    not hidden — no characteristic is privileged)."""
    report = SuiteReport("field-robustness", metadata={"chars": [0, 2, 3]})
    budget = _Budget(timeout)
    tasks: list[tuple[str, object]] = []
    for n in range(2, 6):
        for i, g in enumerate(_all_graphs(n)):
            tasks.append((f"c1-n{n}-#{i}", edge_ideal(g)))
    rng = random.Random(_SEED)
    for i in range(500):
        g = _random_graph(6, rng)
        if g.num_edges() == 0:
            g = SimpleGraph([f"v{i}" for i in range(1, 7)], [("v1", "v2")])
        tasks.append((f"c1-n6-sample-{i}", edge_ideal(g)))
    for name in ["K_3"] + _REG3_NAMES:
        tasks.append((f"c2-{name}", edge_ideal(catalog.get(name))))
    for i, (base, g) in enumerate(family_members(
        ["C5", "G_0", "G_1", "G_2", "G_3", "G_5", "G_6", "G_7", "G_8", "G_9", "G_10"],
        30, max_multiplicity=3,
    )):
        tasks.append((f"c2-member-{i}-of-{base}", edge_ideal(g)))
    for name in _DIRECT_S2:
        tasks.append((f"c3-{name}-squared", edge_ideal(catalog.get(name)).power(2)))
    tasks.append(("c3-C5-cubed", edge_ideal(catalog.get("C5")).power(3)))
    for host_name, e in [("G_0", ("y", "a_2")), ("G_10", ("a_0", "y"))]:
        host = catalog.get(host_name)
        tasks.append((
            f"c4-colon-{host_name}",
            colon_ideal_of_power(host, SFoldProduct(host, [e])),
        ))
    if budget.exhausted():
        report.records.append(CaseRecord("all", None, None, False, skipped=True, reason="timeout"))
        return report
    t0 = time.monotonic()
    report.records = _pmap(_robustness_case, tasks, jobs)
    span = time.monotonic() - t0
    for r in report.records:
        r.walltime = span / max(1, len(tasks))
    return report


# -- registry ---------------------------------------------------------------------

SUITES: dict[str, Callable[..., SuiteReport]] = {
    "froberg-n5": run_froberg_n5,
    "reg-le-3": run_reg_le_3,
    "main-theorem-s2": run_main_theorem_s2,
    "colon-values": run_colon_values,
    "banerjee": run_banerjee,
    "even-connection-oracle": run_even_connection_oracle,
    "ordered-colon": run_ordered_colon,
    "structure-lemmas": run_structure_lemmas,
    "five-cycle-edge": run_five_cycle_edge,
    "classification": run_classification,
    "field-robustness": run_field_robustness,
}


def run_suite(
    name: str,
    characteristic: int = 0,
    jobs: Optional[int] = None,
    timeout_secs: Optional[float] = None,
) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[name](FieldSpec(characteristic), resolve_jobs(jobs), timeout_secs)
