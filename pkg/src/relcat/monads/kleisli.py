"""The Kleisli category of a symmetric monoidal monad, as a model in its own right.

A Kleisli arrow X -> Y is stored with its Kleisli endpoints; its payload is
the payload of the underlying base arrow X -> T(Y).
"""
from __future__ import annotations

from ..core.model import STRUCTURAL, CategoryModel, Morphism
from ..errors import MonadLawsFail
from .base import MONAD_BUDGET, check_monad, monad_laws_hold
from .carrier import CarrierMonad


class KleisliModel(CategoryModel):
    kind = "kleisli"

    def __init__(self, T, name=None):
        B = T.base
        super().__init__(B.sorts, name or f"kleisli({T.name} on {B.name})", B.carrier_cap)
        self.monad = T
        self.base = B
        self.tensor_kind = B.tensor_kind
        caps = {c for c in B.capabilities if c in STRUCTURAL} | {"homs"}
        self._pointwise = not B.has("leq") and isinstance(T, CarrierMonad) and T.ordered
        if B.has("leq") or self._pointwise:
            caps.add("leq")
        self.capabilities = frozenset(caps)
        self.posetal = (B.posetal and T.posetal) if B.has("leq") else T.posetal

    def size(self, word):
        return self.base.size(word)

    def under(self, f):
        """The base arrow X -> T(Y) behind a Kleisli arrow."""
        return Morphism(f.dom, self.monad.obj(f.cod), f.data)

    def lift(self, f):
        """Post-compose a base arrow with eta; the canonical embedding of the base."""
        return Morphism(f.dom, f.cod, self.base.compose(f, self.monad.eta(f.cod)).data)

    def _identity(self, w):
        return self.monad.eta(w).data

    def _compose(self, f, g):
        return self.monad.kleisli_compose(self.under(f), self.under(g), g.cod).data

    def _tensor(self, f, g):
        return self.monad.kleisli_tensor(self.under(f), self.under(g), f.cod, g.cod).data

    def _symmetry(self, w1, w2):
        return self.lift(self.base.symmetry(w1, w2)).data

    def _copy(self, w):
        return self.lift(self.base.copy(w)).data

    def _discard(self, w):
        return self.lift(self.base.discard(w)).data

    def _cocopy(self, w):
        return self.lift(self.base.cocopy(w)).data

    def _codischarge(self, w):
        return self.lift(self.base.codischarge(w)).data

    def _homs(self, dom, cod):
        for m in self.base.homs(dom, self.monad.obj(cod)):
            yield m.data

    def hom_size(self, dom, cod):
        return self.base.hom_size(dom, self.monad.obj(cod))

    def _random_hom(self, dom, cod, rng):
        return self.base.random_hom(dom, self.monad.obj(cod), rng).data

    def _leq(self, f, g):
        if not self._pointwise:
            return self.base.leq(self.under(f), self.under(g))
        (TY,) = self.monad.obj(f.cod)
        return all(TY.leq(a, b) for a, b in zip(f.data, g.data))

    def is_valid(self, f):
        return self.base.is_valid(self.under(f))

    def _to_json(self, f):
        T = self.monad
        if isinstance(T, CarrierMonad):
            return [T.describe(f.cod, v) for v in f.data]
        return self.base.to_json(self.under(f))

    def _from_json(self, doc, dom, cod):
        T = self.monad
        if isinstance(T, CarrierMonad):
            (TY,) = T.obj(cod)
            data = tuple(TY.index(T.element_from_json(cod, el)) for el in doc)
            if len(data) != self.size(dom):
                from ..errors import TableShapeError
                raise TableShapeError(f"expected {self.size(dom)} elements")
            return data
        return self.base.from_json(doc, dom, T.obj(cod)).data

    def manifest(self):
        return {"kind": "kleisli", "base": self.base.manifest(), "monad": self.monad.manifest(),
                "provenance": f"{self.monad.name} on {self.base.name}"}


def kleisli(T, force=False, budget=MONAD_BUDGET):
    """The Kleisli model of ``T``; the monad laws are checked first unless ``force``."""
    if not force:
        reports = getattr(T, "_law_reports", None)
        if reports is None:
            reports = check_monad(T, budget)
            T._law_reports = reports
        if not monad_laws_hold(reports):
            bad = [r.law for r in reports if not r.ok and r.witness is not None]
            raise MonadLawsFail(f"monad laws fail: {', '.join(bad)}", reports)
    return KleisliModel(T)
