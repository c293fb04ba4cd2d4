"""Morphisms and the capability contract every concrete category implements."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import (CarrierTooLarge, NotEnriched, NotParallel, TypeMismatch,
                      UnsupportedStructural)
from .objects import product_size, sum_size, word_name

DEFAULT_CARRIER_CAP = 1 << 17

STRUCTURAL = ("copy", "discard", "cocopy", "codischarge")


@dataclass(frozen=True)
class Morphism:
    """A hom element: endpoints plus a hashable payload in normal form."""

    dom: tuple
    cod: tuple
    data: Any

    def __repr__(self):
        return f"<{word_name(self.dom)} -> {word_name(self.cod)}: {self.data!r}>"


class CategoryModel:
    """Base class for a strict symmetric monoidal category on finite carriers.

    Subclasses implement the ``_``-prefixed hooks; the public methods add type
    and capability checks. ``capabilities`` lists the optional structure the
    model exposes: copy, discard, cocopy, codischarge, homs, leq.
    """

    kind = "abstract"
    tensor_kind = "product"
    capabilities = frozenset()
    posetal = False

    def __init__(self, sorts=(), name=None, carrier_cap=DEFAULT_CARRIER_CAP):
        self.sorts = tuple(sorts)
        self.name = name or self.kind
        self.carrier_cap = carrier_cap

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"

    def has(self, cap):
        return cap in self.capabilities

    def sort(self, name):
        for s in self.sorts:
            if s.name == name:
                return s
        raise KeyError(f"{self.name} has no sort {name!r}")

    def word(self, names):
        """Resolve a list of sort names (or a space separated string) to a word."""
        if isinstance(names, str):
            names = names.split()
        return tuple(self.sort(n) for n in names)

    # carriers

    def size(self, word):
        n = sum_size(word) if self.tensor_kind == "sum" else product_size(word)
        if n > self.carrier_cap:
            raise CarrierTooLarge(f"carrier of {word_name(word)} has {n} elements (cap {self.carrier_cap})")
        return n

    # structure

    def _cached(self, key, build):
        cache = self.__dict__.setdefault("_structure_cache", {})
        if key not in cache:
            cache[key] = build()
        return cache[key]

    def identity(self, w):
        return self._cached(("id", w), lambda: Morphism(w, w, self._identity(w)))

    def compose(self, f, g):
        """Diagrammatic composite: first ``f``, then ``g``."""
        if f.cod != g.dom:
            raise TypeMismatch(f"cannot compose {word_name(f.cod)} with {word_name(g.dom)}")
        return Morphism(f.dom, g.cod, self._compose(f, g))

    def tensor(self, f, g):
        return Morphism(f.dom + g.dom, f.cod + g.cod, self._tensor(f, g))

    def symmetry(self, w1, w2):
        return self._cached(("sym", w1, w2), lambda: Morphism(w1 + w2, w2 + w1, self._symmetry(w1, w2)))

    def copy(self, w):
        self._need("copy")
        return self._cached(("copy", w), lambda: Morphism(w, w + w, self._copy(w)))

    def discard(self, w):
        self._need("discard")
        return self._cached(("discard", w), lambda: Morphism(w, (), self._discard(w)))

    def cocopy(self, w):
        self._need("cocopy")
        return self._cached(("cocopy", w), lambda: Morphism(w + w, w, self._cocopy(w)))

    def codischarge(self, w):
        self._need("codischarge")
        return self._cached(("codischarge", w), lambda: Morphism((), w, self._codischarge(w)))

    def _need(self, cap):
        if cap not in self.capabilities:
            raise UnsupportedStructural(f"{self.name} has no {cap} structure")

    # homs

    def homs(self, dom, cod):
        """Iterate the hom-set in a deterministic order."""
        self._need("homs")
        for data in self._homs(dom, cod):
            yield Morphism(dom, cod, data)

    def hom_size(self, dom, cod):
        """Number of morphisms, or None when infinite or unknown."""
        return None

    def random_hom(self, dom, cod, rng):
        return Morphism(dom, cod, self._random_hom(dom, cod, rng))

    def leq(self, f, g):
        if "leq" not in self.capabilities:
            raise NotEnriched(f"{self.name} has no hom preorder")
        if f.dom != g.dom or f.cod != g.cod:
            raise NotParallel(f"{f} and {g} are not parallel")
        return self._leq(f, g)

    def is_valid(self, f):
        """Whether a payload really is a morphism (e.g. monotone)."""
        return True

    # serialization

    def to_json(self, f):
        return self._to_json(f)

    def from_json(self, doc, dom, cod):
        return Morphism(dom, cod, self._from_json(doc, dom, cod))

    def manifest(self):
        return {"kind": self.kind, "sorts": {s.name: s.size for s in self.sorts}}

    def make(self, dom, cod, data):
        """Build a morphism from a JSON-style payload."""
        return self.from_json(data, dom, cod)


def hom_leq(C, f, g):
    """The model's hom preorder verdict for parallel ``f`` and ``g``."""
    return C.leq(f, g)
