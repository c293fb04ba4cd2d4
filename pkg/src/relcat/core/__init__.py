"""Objects, morphisms, arrow expressions, the law catalog and the law-checking engine."""
from .engine import (COUNTEREXAMPLE, DEFAULT_BUDGET, EXHAUSTED, PASS, UNSUPPORTED, Budget,
                     LawReport, Witness, check_instance, check_law, check_laws, combine, replay)
from .expr import (Cocopy, Codischarge, Copy, Discard, Dom, Env, Expr, Gen, Id, Leaf, Par, Seq, Sym,
                   domain_of, eval_arrow)
from .laws import LAWS, Clause, Law, get_law
from .model import CategoryModel, Morphism, hom_leq
from .objects import Sort, flatten_object, word_name, words_up_to

__all__ = [
    "COUNTEREXAMPLE", "DEFAULT_BUDGET", "EXHAUSTED", "PASS", "UNSUPPORTED", "Budget", "LawReport", "Witness",
    "check_instance", "check_law", "check_laws", "combine", "replay",
    "Cocopy", "Codischarge", "Copy", "Discard", "Dom", "Env", "Expr", "Gen", "Id", "Leaf", "Par", "Seq", "Sym",
    "domain_of", "eval_arrow",
    "LAWS", "Clause", "Law", "get_law",
    "CategoryModel", "Morphism", "hom_leq",
    "Sort", "flatten_object", "word_name", "words_up_to",
]
