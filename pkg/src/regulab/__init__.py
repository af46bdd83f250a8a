"""Exact computations with edge ideals of finite simple graphs:
structure predicates, even-connections, colon graphs, Betti tables
by simplicial homology, and the linear-powers verification suites."""

from .graph import SimpleGraph, parse_graph_text, graph_to_text
from .ideals import Monomial, MonomialIdeal, edge_ideal, graph_of, polarize
from .evenconn import (
    SFoldProduct,
    colon_graph,
    colon_ideal_of_power,
    even_connected_pairs,
    find_even_connection,
    maximal_expression,
    ordered_generators,
    verify_ordered_colon_decomposition,
)
from .betti import FieldSpec, QQ, betti_table, froberg_linear_check, graph_regularity, regularity
from .structure import (
    banerjee_sufficiency_check,
    c5_multiplication_recognizer,
    classify_gap_diamond_free,
    dominating_clique,
    reg_upper_bound_via_star,
)
from .suites import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "SimpleGraph", "parse_graph_text", "graph_to_text",
    "Monomial", "MonomialIdeal", "edge_ideal", "graph_of", "polarize",
    "SFoldProduct", "colon_graph", "colon_ideal_of_power",
    "even_connected_pairs", "find_even_connection",
    "maximal_expression", "ordered_generators", "verify_ordered_colon_decomposition",
    "FieldSpec", "QQ", "betti_table", "froberg_linear_check",
    "graph_regularity", "regularity",
    "banerjee_sufficiency_check", "c5_multiplication_recognizer",
    "classify_gap_diamond_free", "dominating_clique", "reg_upper_bound_via_star",
    "SUITES", "run_suite",
]
