"""Concrete models over finite carriers."""
from .build import KINDS, build_instance, build_model, parse_sorts
from .functions import FinPar, FinPoset, FinPreOrd, FinSet
from .relations import (FinRel, FinRelForall, RelPlus, Span, SpanPlus, SpanX, WeightMatrix, WRel,
                        canonical_span, complement, compose_forall, rel_from_span, span_compose, span_leq,
                        span_mediator, wrel_compose)
from .subcategory import FILTERS, Subcategory, is_functional, is_map, is_total, right_adjoints, subcategory

__all__ = ["FILTERS", "KINDS", "FinPar", "FinPoset", "FinPreOrd", "FinRel", "FinRelForall", "FinSet", "RelPlus",
           "Span", "SpanPlus", "SpanX", "Subcategory", "WRel", "WeightMatrix", "build_instance", "build_model",
           "canonical_span", "complement", "compose_forall", "is_functional", "is_map", "is_total",
           "parse_sorts", "rel_from_span", "right_adjoints", "span_compose", "span_leq", "span_mediator",
           "subcategory", "wrel_compose"]
