"""Checking laws by exhaustive (or budgeted) enumeration of bindings."""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass

from ..errors import BudgetZero, CarrierTooLarge, UnsupportedCapability
from .expr import Env, eval_arrow, resolve_obj
from .laws import Clause, Law, get_law
from .objects import word_name, words_up_to

PASS = "pass"
COUNTEREXAMPLE = "counterexample"
EXHAUSTED = "budget-exhausted"
UNSUPPORTED = "unsupported-capability"


@dataclass(frozen=True)
class Budget:
    """Enumeration caps.

    ``words`` bounds the length of object words, ``hom`` the number of
    morphisms tried per hom-set, ``bindings`` the total binding tuples per
    law. ``seed`` fixes the sample drawn from oversized hom-sets.
    """

    words: int = 2
    hom: int = 512
    seed: int = 0
    bindings: int = 200_000

    def to_json(self):
        return asdict(self)


DEFAULT_BUDGET = Budget()


@dataclass
class Witness:
    objects: dict
    arrows: dict
    clause: int
    relation: str
    lhs: object
    rhs: object = None

    def describe(self):
        objs = ", ".join(f"{k}={word_name(v)}" for k, v in self.objects.items())
        arrs = ", ".join(f"{k}={v.data!r}" for k, v in self.arrows.items())
        return "; ".join(x for x in (objs, arrs) if x)


@dataclass
class LawReport:
    law: str
    status: str
    witness: Witness | None = None
    objects_checked: int = 0
    bindings_checked: int = 0
    detail: str = ""
    model: str = ""

    @property
    def ok(self):
        return self.status == PASS

    def to_json(self, C=None):
        out = {"law": self.law, "status": self.status, "objects_checked": self.objects_checked,
               "bindings_checked": self.bindings_checked}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = witness_json(self.witness, C)
        return out


def witness_json(w, C):
    def mor(m):
        if m is None:
            return None
        payload = C.to_json(m) if C is not None else repr(m.data)
        return {"dom": [s.name for s in m.dom], "cod": [s.name for s in m.cod], "payload": payload}

    return {
        "objects": {k: [s.name for s in v] for k, v in w.objects.items()},
        "arrows": {k: mor(v) for k, v in w.arrows.items()},
        "clause": w.clause,
        "relation": w.relation,
        "lhs": mor(w.lhs),
        "rhs": mor(w.rhs),
    }


def hom_candidates(C, dom, cod, budget, salt=""):
    """Morphisms to try for one arrow variable, and whether the list is complete."""
    size = C.hom_size(dom, cod)
    if size is not None and size <= budget.hom:
        return list(C.homs(dom, cod)), True
    if size is not None:
        rng = random.Random(f"{budget.seed}|{salt}|{word_name(dom)}|{word_name(cod)}")
        seen, out = set(), []
        tries = 0
        while len(out) < budget.hom and tries < budget.hom * 8:
            tries += 1
            m = C.random_hom(dom, cod, rng)
            if m.data not in seen:
                seen.add(m.data)
                out.append(m)
        return out, False
    items = list(itertools.islice(C.homs(dom, cod), budget.hom + 1))
    if len(items) <= budget.hom:
        return items, True
    return items[:budget.hom], False


def _holds(C, clause, env):
    lhs = eval_arrow(C, clause.lhs, env)
    if clause.rel == "valid":
        return C.is_valid(lhs), lhs, None
    rhs = eval_arrow(C, clause.rhs, env)
    if clause.rel == "=":
        return lhs == rhs, lhs, rhs
    if clause.rel == "<=":
        return C.leq(lhs, rhs), lhs, rhs
    raise ValueError(f"unknown relation {clause.rel!r}")


def require(C, law, monad=None):
    """Raise UnsupportedCapability if ``C`` (or the monad) lacks what ``law`` needs."""
    for need in sorted(law.needs):
        if need == "monad":
            if monad is None:
                raise UnsupportedCapability(f"{law.name} needs a monad")
        elif not C.has(need):
            raise UnsupportedCapability(f"{law.name} needs {need} in {C.name}")


def check_instance(C, law, objects, arrows, monad=None):
    """Evaluate one binding. Returns (verdict, clause index, lhs, rhs); verdict None means the guard failed."""
    if isinstance(law, str):
        law = get_law(law)
    env = Env(dict(objects), dict(arrows), monad)
    for clause in law.guard:
        ok, _, _ = _holds(C, clause, env)
        if not ok:
            return None, -1, None, None
    for i, clause in enumerate(law.clauses):
        ok, lhs, rhs = _holds(C, clause, env)
        if not ok:
            return False, i, lhs, rhs
    return True, -1, None, None


def check_law(C, law, budget=DEFAULT_BUDGET, monad=None, objects=None, base_arrows=None):
    """Check ``law`` over every binding within ``budget``.

    ``objects`` overrides the list of candidate words. ``base_arrows``
    pre-binds some arrow variables instead of enumerating them.
    """
    if isinstance(law, str):
        law = get_law(law)
    if budget.hom <= 0 or budget.bindings <= 0 or budget.words < 0:
        raise BudgetZero("budget caps must be positive")
    require(C, law, monad)
    base_arrows = dict(base_arrows or {})
    words = list(objects) if objects is not None else words_up_to(C.sorts, budget.words)
    truncated = False
    reasons = []
    obj_count = 0
    bindings = 0
    hom_cache = {}
    for obj_tuple in itertools.product(words, repeat=len(law.objects)):
        objs = dict(zip(law.objects, obj_tuple))
        env = Env(objs, {}, monad)
        try:
            lists = []
            for av in law.arrows:
                if av.name in base_arrows:
                    lists.append([base_arrows[av.name]])
                    continue
                dom, cod = resolve_obj(av.dom, env), resolve_obj(av.cod, env)
                key = (dom, cod)
                if key not in hom_cache:
                    hom_cache[key] = hom_candidates(C, dom, cod, budget, law.name)
                cands, complete = hom_cache[key]
                if not complete:
                    truncated = True
                    _note(reasons, f"hom set {word_name(dom)} -> {word_name(cod)} sampled")
                lists.append(cands)
        except CarrierTooLarge as e:
            truncated = True
            _note(reasons, str(e))
            continue
        obj_count += 1
        for arrow_tuple in itertools.product(*lists):
            if bindings >= budget.bindings:
                truncated = True
                _note(reasons, f"binding cap {budget.bindings} reached")
                break
            bindings += 1
            arrows = {av.name: m for av, m in zip(law.arrows, arrow_tuple)}
            try:
                verdict, idx, lhs, rhs = check_instance(C, law, objs, arrows, monad)
            except CarrierTooLarge as e:
                truncated = True
                _note(reasons, str(e))
                break
            if verdict is False:
                w = Witness(objs, arrows, idx, law.clauses[idx].rel, lhs, rhs)
                return LawReport(law.name, COUNTEREXAMPLE, w, obj_count, bindings, model=C.name)
        if bindings >= budget.bindings and truncated:
            break
    status = EXHAUSTED if truncated else PASS
    return LawReport(law.name, status, None, obj_count, bindings, detail="; ".join(reasons), model=C.name)


def _note(reasons, text):
    if text not in reasons:
        reasons.append(text)


def replay(C, law, witness, monad=None):
    """Re-evaluate a witness; returns True when the violation reproduces exactly."""
    if isinstance(law, str):
        law = get_law(law)
    verdict, idx, lhs, rhs = check_instance(C, law, witness.objects, witness.arrows, monad)
    return verdict is False and idx == witness.clause and lhs == witness.lhs and rhs == witness.rhs


def check_laws(C, names, budget=DEFAULT_BUDGET, monad=None, objects=None):
    """Run several laws; unsupported ones are reported instead of raising."""
    out = []
    for name in names:
        try:
            out.append(check_law(C, name, budget, monad, objects))
        except UnsupportedCapability as exc:
            out.append(LawReport(name, UNSUPPORTED, detail=str(exc), model=C.name))
    return out


def combine(reports):
    """Overall status of a bundle: a counterexample wins, then unsupported, then exhausted."""
    statuses = [r.status for r in reports]
    for s in (COUNTEREXAMPLE, UNSUPPORTED, EXHAUSTED):
        if s in statuses:
            return s
    return PASS


__all__ = ["Budget", "Clause", "Law", "LawReport", "Witness", "check_law", "check_laws", "check_instance",
           "replay", "combine", "hom_candidates", "PASS", "COUNTEREXAMPLE", "EXHAUSTED", "UNSUPPORTED"]
