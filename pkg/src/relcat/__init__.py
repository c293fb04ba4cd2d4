"""Finite gs-monoidal categories: models, law checking, monads, diagrams and classification."""
from .core import Budget, CategoryModel, Morphism, Sort, check_law, check_laws
from .diagrams import diagrams_equal, evaluate, parse, to_dot
from .instances import build_model
from .semiring import builtin_semirings, canonical_preorder, make_semiring
from .taxonomy import classify

__version__ = "0.1.0"

__all__ = ["Budget", "CategoryModel", "Morphism", "Sort", "build_model", "builtin_semirings",
           "canonical_preorder", "check_law", "check_laws", "classify", "diagrams_equal", "evaluate",
           "make_semiring", "parse", "to_dot", "__version__"]
