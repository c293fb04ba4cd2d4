"""The writer (action) monad X |-> X ⊗ M for a monoid M in any model."""
from __future__ import annotations

from .base import MonadModel, MonoidObject


class WriterMonad(MonadModel):
    kind = "writer"

    def __init__(self, C, monoid, name=None):
        if not isinstance(monoid, MonoidObject):
            raise TypeError("writer_monad needs a MonoidObject")
        super().__init__(C, name or f"writer({monoid.name})")
        self.monoid = monoid

    def obj(self, word):
        return tuple(word) + self.monoid.carrier

    def arr(self, f):
        C = self.base
        return C.tensor(f, C.identity(self.monoid.carrier))

    def eta(self, word):
        C = self.base
        return C.tensor(C.identity(tuple(word)), self.monoid.unit)

    def mu(self, word):
        C = self.base
        return C.tensor(C.identity(tuple(word)), self.monoid.mult)

    def lax(self, w1, w2):
        C = self.base
        M = self.monoid.carrier
        w1, w2 = tuple(w1), tuple(w2)
        swap = C.tensor(C.tensor(C.identity(w1), C.symmetry(M, w2)), C.identity(M))
        return C.compose(swap, C.tensor(C.identity(w1 + w2), self.monoid.mult))

    def unit(self):
        return self.monoid.unit

    def manifest(self):
        return {"kind": self.kind, "monoid": self.monoid.manifest()}


def writer_monad(C, monoid):
    return WriterMonad(C, monoid)
