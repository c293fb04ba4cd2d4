"""Where a model sits among the structures built from copy and discard.

Each predicate is a conjunction of catalogued laws, sometimes with an extra
search (the group test for ``weakly_markov``). :func:`classify` runs them
all, cross-checks the known implications between them and collects hom
counts of the derived subcategories.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core.engine import (COUNTEREXAMPLE, DEFAULT_BUDGET, EXHAUSTED, PASS, UNSUPPORTED, Budget,
                          LawReport, Witness, check_law, combine, witness_json)
from .core.expr import domain_of
from .core.laws import get_law
from .core.objects import word_name, words_up_to
from .errors import CarrierTooLarge, NotEnriched, UnsupportedCapability
from .instances.subcategory import is_functional, is_total

SHARE = ("SHARE_COASSOC", "SHARE_COCOMM", "SHARE_MULT_TENSOR", "SHARE_MULT_UNIT")
GARBAGE = ("GARBAGE_MULT_TENSOR", "GARBAGE_MULT_UNIT")
GS = SHARE + GARBAGE + ("GS_COUNIT",)
COSHARE = ("COGS_ASSOC", "COGS_COMM", "COGS_MULT_TENSOR", "COGS_MULT_UNIT")
COGS = COSHARE + ("COGARBAGE_MULT_TENSOR", "COGARBAGE_MULT_UNIT", "COGS_UNIT")
BIGS = GS + COGS
PREORDER = ("LEQ_REFL", "LEQ_TRANS", "LEQ_COMPOSE_LEFT", "LEQ_COMPOSE_RIGHT", "LEQ_TENSOR_LEFT",
            "LEQ_TENSOR_RIGHT")
OPLAX_CARTESIAN = PREORDER + GS + ("OPLAX_COPY", "OPLAX_DISCARD")
OPLAX_COCARTESIAN = PREORDER + COGS + ("OPLAX_COCOPY", "OPLAX_CODISCHARGE")
CARTESIAN_BICATEGORY = ("LEQ_ANTISYM",) + OPLAX_CARTESIAN + ("CB_RIGHT_ADJ_COPY", "CB_RIGHT_ADJ_DISCARD",
                                                             "CB_LAX_INEQS")
BIALGEBRAIC = BIGS + ("BIALG_1", "BIALG_2", "BIALG_3", "BIALG_4")
FROBENIUS = BIGS + ("FROBENIUS",)

PREDICATES = {
    "share": SHARE,
    "garbage": GARBAGE,
    "gs": GS,
    "diagonals": GS + ("NAT_COPY",),
    "projections": GS + ("NAT_DISCARD",),
    "markov": GS + ("MARKOV_TERMINAL",),
    "restriction": ("R1", "R2", "R3", "R4", "RESTR_TERMINAL"),
    "restriction_products": ("RP1", "RP2", "RP3", "RP4", "RP5", "RP6", "RESTR_TENSOR"),
    "cartesian": GS + ("NAT_COPY", "NAT_DISCARD"),
    "cogs": COGS,
    "bigs": BIGS,
    "bialgebraic": BIALGEBRAIC,
    "frobenius": FROBENIUS,
    "special": ("SPECIAL",),
    "connected": ("CONNECTED",),
    "hopf": ("HOPF",),
    "positive": GS + ("POSITIVITY",),
    "weakly_markov": GS,
    "preorder_enriched": PREORDER,
    "posetal": PREORDER + ("LEQ_ANTISYM",),
    "oplax_cartesian": OPLAX_CARTESIAN,
    "oplax_cocartesian": OPLAX_COCARTESIAN,
    "oplax_bicartesian": OPLAX_CARTESIAN + OPLAX_COCARTESIAN[len(PREORDER):],
    "lax_special": ("LAX_SPECIAL",),
    "lax_connected": ("LAX_CONNECTED",),
    "cartesian_bicategory": CARTESIAN_BICATEGORY,
    "bicat_relations": CARTESIAN_BICATEGORY + ("FROBENIUS",),
    "bicat_bialgebras": CARTESIAN_BICATEGORY + ("BIALG_1", "BIALG_2", "BIALG_3", "BIALG_4"),
}

# (premises, conclusion): whenever every premise passes the conclusion must not fail
IMPLICATIONS = [
    (("gs",), "share"),
    (("gs",), "garbage"),
    (("cartesian",), "diagonals"),
    (("cartesian",), "projections"),
    (("diagonals", "projections"), "cartesian"),
    (("markov",), "gs"),
    (("markov",), "projections"),
    (("projections",), "markov"),
    (("markov",), "weakly_markov"),
    (("diagonals",), "positive"),
    (("gs", "diagonals"), "restriction"),
    (("gs", "diagonals"), "restriction_products"),
    (("restriction_products",), "diagonals"),
    (("bigs",), "gs"),
    (("bigs",), "cogs"),
    (("frobenius",), "bigs"),
    (("bialgebraic",), "bigs"),
    (("frobenius", "bialgebraic"), "connected"),
    (("special", "preorder_enriched"), "lax_special"),
    (("connected", "preorder_enriched"), "lax_connected"),
    (("posetal",), "preorder_enriched"),
    (("oplax_cartesian",), "gs"),
    (("oplax_cocartesian",), "cogs"),
    (("oplax_bicartesian",), "oplax_cartesian"),
    (("oplax_bicartesian",), "oplax_cocartesian"),
    (("oplax_cartesian", "oplax_cocartesian"), "oplax_bicartesian"),
    (("cartesian_bicategory",), "oplax_cartesian"),
    (("cartesian_bicategory",), "oplax_cocartesian"),
    (("cartesian_bicategory",), "lax_special"),
    (("cartesian_bicategory",), "lax_connected"),
    (("cartesian_bicategory",), "posetal"),
    (("bicat_relations",), "cartesian_bicategory"),
    (("bicat_relations",), "frobenius"),
    (("bicat_bialgebras",), "cartesian_bicategory"),
    (("bicat_bialgebras",), "bialgebraic"),
    (("positive", "oplax_cartesian", "posetal"), "restriction"),
]


@dataclass
class PredicateReport:
    predicate: str
    status: str
    reports: list = field(default_factory=list)
    witness: object = None
    detail: str = ""

    @property
    def ok(self):
        return self.status == PASS

    @property
    def failing_law(self):
        for r in self.reports:
            if r.status == COUNTEREXAMPLE:
                return r.law
        return None

    def to_json(self, C=None):
        out = {"status": self.status}
        bad = next((r for r in self.reports if r.status == self.status and self.status != PASS), None)
        if bad is not None:
            out["law"] = bad.law
            if bad.witness is not None:
                out["witness"] = witness_json(bad.witness, C)
            if bad.detail:
                out["detail"] = bad.detail
        elif self.detail:
            out["detail"] = self.detail
        if isinstance(self.witness, dict):
            out["witness"] = self.witness
        out["laws"] = {r.law: r.status for r in self.reports}
        return out


def dom(C, f):
    """The domain (restriction idempotent) of ``f``: copy ; (id * (f ; discard))."""
    for cap in ("copy", "discard"):
        if not C.has(cap):
            raise UnsupportedCapability(f"dom needs {cap} in {C.name}")
    return domain_of(C, f)


def _requirements(C, name):
    laws = PREDICATES[name]
    needs = set()
    for law in laws:
        needs |= get_law(law).needs
    if "leq" in needs and not C.has("leq"):
        raise NotEnriched(f"{name} needs a hom preorder on {C.name}")
    for cap in sorted(needs - {"leq", "monad"}):
        if not C.has(cap):
            raise UnsupportedCapability(f"{name} needs {cap} in {C.name}")


def predicate(C, name, budget=DEFAULT_BUDGET, objects=None):
    """Run the laws of predicate ``name``; stops at the first counterexample."""
    if name not in PREDICATES:
        raise KeyError(f"unknown predicate {name!r}")
    _requirements(C, name)
    reports = []
    for law in PREDICATES[name]:
        r = check_law(C, law, budget, objects=objects)
        reports.append(r)
        if r.status == COUNTEREXAMPLE:
            break
    status = combine(reports)
    result = PredicateReport(name, status, reports)
    if status == COUNTEREXAMPLE:
        result.witness = next(r.witness for r in reports if r.status == COUNTEREXAMPLE)
    if name == "weakly_markov" and status != COUNTEREXAMPLE:
        _group_check(C, budget, result, objects)
    return result


def hom_monoid_inverse(C, f, homs):
    """A *-inverse of f : X -> I among ``homs``, or None; f*g = copy ; (f * g)."""
    X = f.dom
    unit = C.discard(X)
    cp = C.copy(X)
    for g in homs:
        if C.compose(cp, C.tensor(f, g)) == unit:
            return g
    return None


def _group_check(C, budget, result, objects=None):
    words = list(objects) if objects is not None else words_up_to(C.sorts, budget.words)
    truncated = False
    for X in words:
        try:
            size = C.hom_size(X, ())
            if size is None or size > budget.hom:
                truncated = True
                continue
            homs = list(C.homs(X, ()))
        except CarrierTooLarge:
            truncated = True
            continue
        for f in homs:
            if hom_monoid_inverse(C, f, homs) is None:
                w = Witness({"X": X}, {"f": f}, 0, "invertible", f, C.discard(X))
                result.reports.append(LawReport("HOM_MONOID_GROUP", COUNTEREXAMPLE, w, model=C.name,
                                                detail=f"{C.to_json(f)} has no inverse in C({word_name(X)},I)"))
                result.status = COUNTEREXAMPLE
                result.witness = w
                return
    status = EXHAUSTED if truncated else PASS
    result.reports.append(LawReport("HOM_MONOID_GROUP", status, model=C.name))
    result.status = combine(result.reports)


@dataclass
class AdjointResult:
    adjoint: object
    candidates: list
    exhaustive: bool
    unique: bool = True

    @property
    def found(self):
        return self.adjoint is not None

    def to_json(self, C):
        return {"adjoint": None if self.adjoint is None else C.to_json(self.adjoint),
                "count": len(self.candidates), "unique_up_to_equivalence": self.unique,
                "exhaustive": self.exhaustive}


def find_right_adjoint(C, f, budget=DEFAULT_BUDGET):
    """First g with id <= f;g and g;f <= id in enumeration order, plus all others found."""
    if not C.has("leq"):
        raise NotEnriched(f"{C.name} has no hom preorder")
    if not C.has("homs"):
        raise UnsupportedCapability(f"{C.name} cannot enumerate homs")
    size = C.hom_size(f.cod, f.dom)
    exhaustive = size is not None and size <= max(budget.hom, 1 << 16)
    homs = C.homs(f.cod, f.dom)
    if not exhaustive:
        homs = itertools.islice(homs, budget.hom)
    idx, idy = C.identity(f.dom), C.identity(f.cod)
    found = [g for g in homs if C.leq(idx, C.compose(f, g)) and C.leq(C.compose(g, f), idy)]
    unique = all(C.leq(a, b) and C.leq(b, a) for a in found for b in found)
    return AdjointResult(found[0] if found else None, found, exhaustive, unique)


@dataclass
class TaxonomyReport:
    model: str
    predicates: dict
    violations: list
    derived: dict
    budget: Budget

    @property
    def implications_ok(self):
        return not self.violations

    def status(self, name):
        return self.predicates[name].status

    def verdicts(self):
        return {k: v.status for k, v in self.predicates.items()}

    def to_json(self, C=None):
        return {
            "model": self.model,
            "predicates": {k: v.to_json(C) for k, v in self.predicates.items()},
            "implications_ok": self.implications_ok,
            "violations": self.violations,
            "derived": self.derived,
            "budget": self.budget.to_json(),
        }


def check_implications(verdicts):
    """Implications whose premises all pass while the conclusion has a counterexample."""
    out = []
    for premises, conclusion in IMPLICATIONS:
        if conclusion not in verdicts or any(verdicts.get(p) != PASS for p in premises):
            continue
        if verdicts[conclusion] == COUNTEREXAMPLE:
            out.append({"premises": list(premises), "conclusion": conclusion})
    return out


def derived_counts(C, budget=DEFAULT_BUDGET, max_words=1):
    """Hom counts of the functional, total, total-functional and map arrows."""
    if not C.has("homs"):
        return {}
    out = {}
    words = words_up_to(C.sorts, min(max_words, budget.words))
    for X, Y in itertools.product(words, repeat=2):
        try:
            size = C.hom_size(X, Y)
        except CarrierTooLarge:
            continue
        if size is None or size > max(budget.hom, 4096):
            continue
        homs = list(C.homs(X, Y))
        row = {"all": len(homs)}
        fun = tot = None
        if C.has("copy"):
            fun = [is_functional(C, f) for f in homs]
            row["functional"] = sum(fun)
        if C.has("discard"):
            tot = [is_total(C, f) for f in homs]
            row["total"] = sum(tot)
        if fun is not None and tot is not None:
            row["total_functional"] = sum(a and b for a, b in zip(fun, tot))
        if C.has("leq") and C.hom_size(Y, X) is not None and C.hom_size(Y, X) <= 4096:
            back = list(C.homs(Y, X))
            idx, idy = C.identity(X), C.identity(Y)
            maps = [any(C.leq(idx, C.compose(f, g)) and C.leq(C.compose(g, f), idy) for g in back)
                    for f in homs]
            row["maps"] = sum(maps)
            if fun is not None and tot is not None:
                row["maps_functional_and_total"] = all(not m or (a and b) for m, a, b in zip(maps, fun, tot))
        out[f"{word_name(X)}->{word_name(Y)}"] = row
    return out


def classify(C, budget=DEFAULT_BUDGET, predicates=None, objects=None, derived=True):
    """Run the predicates (all applicable ones by default) and cross-check implications."""
    names = list(predicates) if predicates else list(PREDICATES)
    results = {}
    for name in names:
        try:
            results[name] = predicate(C, name, budget, objects)
        except (UnsupportedCapability, NotEnriched) as exc:
            results[name] = PredicateReport(name, UNSUPPORTED, detail=str(exc))
    verdicts = {k: v.status for k, v in results.items()}
    violations = check_implications(verdicts)
    facts = derived_counts(C, budget) if derived else {}
    for key, row in facts.items():
        if row.get("maps_functional_and_total") is False:
            violations.append({"premises": ["map"], "conclusion": "functional and total", "hom": key})
    return TaxonomyReport(C.name, results, violations, facts, budget)


__all__ = ["PREDICATES", "IMPLICATIONS", "PredicateReport", "TaxonomyReport", "AdjointResult", "classify",
           "predicate", "dom", "find_right_adjoint", "check_implications", "derived_counts",
           "hom_monoid_inverse"]
