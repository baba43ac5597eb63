"""Stable rank, K0 and graph invariants of Leavitt path algebras of finite graphs."""

from .cycles import condition_K, condition_L, csp_based_at, has_isolated_cycles, simple_cycles, x0_set
from .graph import Edge, Graph, GraphError, ParseError, parse_graph, reaches, sinks
from .hereditary import enumerate_hs, hs_closure, ideal_graph, is_cofinal, quotient_graph, restriction_graph
from .ktheory import k0_presentation, smith_normal_form
from .laurent import bezout, parse_laurent, reduction_witness, verify_irreducible
from .rank import StableRank, cstar_stable_rank, has_pisu_quotient, stable_rank

__all__ = [
    "Edge", "Graph", "GraphError", "ParseError", "StableRank",
    "bezout", "condition_K", "condition_L", "csp_based_at", "cstar_stable_rank",
    "enumerate_hs", "has_isolated_cycles", "has_pisu_quotient", "hs_closure", "ideal_graph",
    "is_cofinal", "k0_presentation", "parse_graph", "parse_laurent", "quotient_graph",
    "reaches", "reduction_witness", "restriction_graph", "simple_cycles", "sinks",
    "smith_normal_form", "stable_rank", "verify_irreducible", "x0_set",
]
