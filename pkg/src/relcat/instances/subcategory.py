"""Wide subcategories picked out by a predicate on arrows."""
from __future__ import annotations

import itertools

from ..core.model import STRUCTURAL, CategoryModel
from ..core.objects import words_up_to
from ..errors import FilterNotClosed, UnsupportedCapability

FILTERS = ("functional", "total", "total-functional", "maps")


def is_functional(C, f):
    lhs = C.compose(f, C.copy(f.cod))
    rhs = C.compose(C.copy(f.dom), C.tensor(f, f))
    return lhs == rhs


def is_total(C, f):
    return C.compose(f, C.discard(f.cod)) == C.discard(f.dom)


def right_adjoints(C, f):
    """Every g with id <= f;g and g;f <= id, in enumeration order."""
    idx, idy = C.identity(f.dom), C.identity(f.cod)
    for g in C.homs(f.cod, f.dom):
        if C.leq(idx, C.compose(f, g)) and C.leq(C.compose(g, f), idy):
            yield g


def is_map(C, f):
    return next(right_adjoints(C, f), None) is not None


_TESTS = {
    "functional": (("copy",), (is_functional,)),
    "total": (("discard",), (is_total,)),
    "total-functional": (("copy", "discard"), (is_functional, is_total)),
    "maps": (("homs", "leq"), (is_map,)),
}


class Subcategory(CategoryModel):
    """The arrows of ``base`` that pass ``filter``; everything else is inherited."""

    kind = "subcategory"

    def __init__(self, base, filter, verify_words=1, verify_hom=48):
        if filter not in _TESTS:
            raise ValueError(f"unknown filter {filter!r}; expected one of {', '.join(FILTERS)}")
        needs, tests = _TESTS[filter]
        for cap in needs + ("homs",):
            if not base.has(cap):
                raise UnsupportedCapability(f"filter {filter} needs {cap} in {base.name}")
        super().__init__(base.sorts, f"{filter}({base.name})", base.carrier_cap)
        self.base = base
        self.filter = filter
        self._tests = tests
        self.tensor_kind = base.tensor_kind
        self.posetal = base.posetal
        caps = {c for c in base.capabilities if c not in STRUCTURAL}
        words = words_up_to(base.sorts, 1)
        for cap in STRUCTURAL:
            if base.has(cap) and all(self.accepts(getattr(base, cap)(w)) for w in words):
                caps.add(cap)
        self.capabilities = frozenset(caps)
        self._verify(verify_words, verify_hom)

    def accepts(self, f):
        return all(t(self.base, f) for t in self._tests)

    def size(self, word):
        return self.base.size(word)

    def _verify(self, max_words, per_hom):
        """Check closure under composition and tensor on a bounded slice of arrows."""
        words = words_up_to(self.sorts, max_words)
        homs = {}
        for d, c in itertools.product(words, repeat=2):
            homs[d, c] = list(itertools.islice(self.homs(d, c), per_hom))
        for (x, y), fs in homs.items():
            for z in words:
                for f in fs:
                    for g in homs[y, z]:
                        h = self.base.compose(f, g)
                        if not self.accepts(h):
                            raise FilterNotClosed(f"{self.filter}: composite escapes", witness=(f, g))
        for (x, y), fs in homs.items():
            for (z, w), gs in homs.items():
                for f, g in itertools.product(fs[:8], gs[:8]):
                    h = self.base.tensor(f, g)
                    if not self.accepts(h):
                        raise FilterNotClosed(f"{self.filter}: tensor escapes", witness=(f, g))
        for w in words:
            for v in words:
                if not self.accepts(self.base.symmetry(w, v)):
                    raise FilterNotClosed(f"{self.filter}: symmetry escapes", witness=(w, v))

    # delegated structure

    def identity(self, w):
        return self.base.identity(w)

    def compose(self, f, g):
        return self.base.compose(f, g)

    def tensor(self, f, g):
        return self.base.tensor(f, g)

    def symmetry(self, w1, w2):
        return self.base.symmetry(w1, w2)

    def copy(self, w):
        self._need("copy")
        return self.base.copy(w)

    def discard(self, w):
        self._need("discard")
        return self.base.discard(w)

    def cocopy(self, w):
        self._need("cocopy")
        return self.base.cocopy(w)

    def codischarge(self, w):
        self._need("codischarge")
        return self.base.codischarge(w)

    def homs(self, dom, cod):
        for f in self.base.homs(dom, cod):
            if self.accepts(f):
                yield f

    def _hom_list(self, dom, cod):
        return self._cached(("homs", dom, cod), lambda: list(self.homs(dom, cod)))

    def hom_size(self, dom, cod):
        n = self.base.hom_size(dom, cod)
        if n is None or n > 1 << 16:
            return None
        return len(self._hom_list(dom, cod))

    def random_hom(self, dom, cod, rng):
        return rng.choice(self._hom_list(dom, cod))

    def leq(self, f, g):
        return self.base.leq(f, g)

    def is_valid(self, f):
        return self.base.is_valid(f) and self.accepts(f)

    def to_json(self, f):
        return self.base.to_json(f)

    def from_json(self, doc, dom, cod):
        return self.base.from_json(doc, dom, cod)

    def manifest(self):
        return {"kind": "subcategory", "filter": self.filter, "base": self.base.manifest()}


def subcategory(C, filter, **kw):
    return Subcategory(C, filter, **kw)
