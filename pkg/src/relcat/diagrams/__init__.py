"""String diagrams of gs-monoidal terms: parsing, free equality, DOT, evaluation."""
from .dot import to_dot
from .evaluate import evaluate
from .rewrite import DEFAULT_SIGNATURE, mutate, random_term, rewrite
from .syntax import (DiagramTerm, Signature, make_signature, parse, parse_signature, parse_term, render,
                     term_from_expr, typecheck)
from .termgraph import (TermGraph, canonical, canonical_key, certificate, diagrams_equal, term_graph,
                        to_term_graph)

__all__ = [
    "DEFAULT_SIGNATURE", "DiagramTerm", "Signature", "TermGraph", "canonical", "canonical_key", "certificate",
    "diagrams_equal", "evaluate", "make_signature", "mutate", "parse", "parse_signature", "parse_term",
    "random_term", "render", "rewrite", "term_from_expr", "term_graph", "to_dot", "to_term_graph", "typecheck",
]
