"""Symmetric monoidal monads over a base model, and their law checks.

A monad is given by its action on words (``obj``), on arrows (``arr``),
the families ``eta``, ``mu`` and ``lax`` (the comparison T(X)⊗T(Y) -> T(X⊗Y))
and the unit ``unit`` : I -> T(I). All of them return morphisms of the base.
"""
from __future__ import annotations

from ..core.engine import COUNTEREXAMPLE, PASS, Budget, LawReport, check_laws, combine
from ..core.laws import ENRICHED_MONAD_LAWS, MONAD_CLASSES, MONAD_LAWS
from ..core.model import Morphism
from ..errors import MonoidLawsFail, NotEnriched

MONAD_BUDGET = Budget(words=1, hom=64)


class MonadModel:
    kind = "monad"
    ordered = False
    posetal = False

    def __init__(self, base, name=None):
        self.base = base
        self.name = name or self.kind

    def __repr__(self):
        return f"{type(self).__name__}({self.name} on {self.base.name})"

    def obj(self, word):
        raise NotImplementedError

    def arr(self, f):
        raise NotImplementedError

    def eta(self, word):
        raise NotImplementedError

    def mu(self, word):
        raise NotImplementedError

    def lax(self, w1, w2):
        raise NotImplementedError

    def unit(self):
        return self.eta(())

    # Kleisli operations on base morphisms X -> T(Y)

    def kleisli_compose(self, f, g, z):
        """f : X -> T(Y) and g : Y -> T(Z) give f ; T(g) ; mu_Z."""
        C = self.base
        return C.compose(C.compose(f, self.arr(g)), self.mu(z))

    def kleisli_tensor(self, f, g, y1, y2):
        C = self.base
        return C.compose(C.tensor(f, g), self.lax(y1, y2))

    def manifest(self):
        return {"kind": self.kind}


class IdentityMonad(MonadModel):
    kind = "identity"
    ordered = True

    def obj(self, word):
        return tuple(word)

    def arr(self, f):
        return f

    def eta(self, word):
        return self.base.identity(word)

    def mu(self, word):
        return self.base.identity(word)

    def lax(self, w1, w2):
        return self.base.identity(w1 + w2)

    def kleisli_compose(self, f, g, z):
        return self.base.compose(f, g)


class MonoidObject:
    """A monoid (mult : M⊗M -> M, unit : I -> M) in a base model; laws are checked on construction."""

    def __init__(self, C, carrier, mult, unit, name="M"):
        self.C = C
        self.carrier = tuple(carrier)
        self.mult = mult
        self.unit = unit
        self.name = name
        M = self.carrier
        for m, dom, cod in ((mult, M + M, M), (unit, (), M)):
            if m.dom != dom or m.cod != cod:
                raise MonoidLawsFail(f"monoid arrow has type {m.dom} -> {m.cod}, expected {dom} -> {cod}")
        idm = C.identity(M)
        lhs = C.compose(C.tensor(mult, idm), mult)
        rhs = C.compose(C.tensor(idm, mult), mult)
        if lhs != rhs:
            raise MonoidLawsFail("multiplication is not associative")
        if C.compose(C.tensor(unit, idm), mult) != idm or C.compose(C.tensor(idm, unit), mult) != idm:
            raise MonoidLawsFail("unit law fails")

    @property
    def commutative(self):
        C, M = self.C, self.carrier
        return C.compose(C.symmetry(M, M), self.mult) == self.mult

    def manifest(self):
        C = self.C
        return {"carrier": [s.name for s in self.carrier], "mult": C.to_json(self.mult),
                "unit": C.to_json(self.unit)}


def table_monoid(C, carrier, table, unit, name="M"):
    """A monoid on a function-table model from ``table[a][b]`` and a unit element."""
    M = tuple(carrier)
    n = C.size(M)
    mult = Morphism(M + M, M, tuple(table[a][b] for a in range(n) for b in range(n)))
    return MonoidObject(C, M, mult, Morphism((), M, (unit,)), name)


def check_monad(T, budget=MONAD_BUDGET, objects=None):
    """Reports for the monad, lax-structure and monoidality laws of ``T``."""
    names = list(MONAD_LAWS) + ["T_WELL_DEFINED"]
    if T.base.has("leq"):
        names.append("T_ENRICHED")
    return check_laws(T.base, names, budget, monad=T, objects=objects)


def check_monad_class(T, cls, budget=MONAD_BUDGET, objects=None):
    """One report for a monad class; colax classes need an enriched base."""
    if cls not in MONAD_CLASSES:
        raise KeyError(f"unknown monad class {cls!r}; expected one of {', '.join(MONAD_CLASSES)}")
    if cls.startswith("colax") and not T.base.has("leq"):
        raise NotEnriched(f"{cls} needs a hom preorder on {T.base.name}")
    reports = check_laws(T.base, MONAD_CLASSES[cls], budget, monad=T, objects=objects)
    status = combine(reports)
    for r in reports:
        if r.status == status and status != PASS:
            return LawReport(cls, status, r.witness, r.objects_checked, r.bindings_checked,
                             detail=f"{r.law} {r.detail}".strip(), model=r.model)
    return LawReport(cls, status, None, sum(r.objects_checked for r in reports),
                     sum(r.bindings_checked for r in reports), detail=" ".join(r.law for r in reports),
                     model=T.base.name)


def monad_laws_hold(reports):
    return all(r.status != COUNTEREXAMPLE for r in reports)


ENRICHED_LAWS = ENRICHED_MONAD_LAWS
