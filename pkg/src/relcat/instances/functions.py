"""Total functions, partial functions and monotone maps between finite carriers."""
from __future__ import annotations

import itertools

from ..core.model import CategoryModel, Morphism
from ..core.objects import product_leq
from ..errors import TableShapeError
from . import carriers as K


class FinSet(CategoryModel):
    """Finite sets and functions, with the cartesian product as tensor.

    A morphism X -> Y is a tuple giving the image index of each element of X.
    """

    kind = "finset"
    capabilities = frozenset({"copy", "discard", "homs"})

    def _identity(self, w):
        return K.prod_identity(self.size(w))

    def _compose(self, f, g):
        gd = g.data
        return tuple(gd[v] for v in f.data)

    def _tensor(self, f, g):
        nw = self.size(g.cod)
        return tuple(a * nw + b for a in f.data for b in g.data)

    def _symmetry(self, w1, w2):
        return K.prod_sym(self.size(w1), self.size(w2))

    def _copy(self, w):
        return K.prod_copy(self.size(w))

    def _discard(self, w):
        return K.prod_discard(self.size(w))

    def _homs(self, dom, cod):
        return itertools.product(range(self.size(cod)), repeat=self.size(dom))

    def hom_size(self, dom, cod):
        return self.size(cod) ** self.size(dom)

    def _random_hom(self, dom, cod, rng):
        ny = self.size(cod)
        return tuple(rng.randrange(ny) for _ in range(self.size(dom)))

    def _to_json(self, f):
        return list(f.data)

    def _from_json(self, doc, dom, cod):
        nx, ny = self.size(dom), self.size(cod)
        if len(doc) != nx or any(not isinstance(v, int) or not 0 <= v < ny for v in doc):
            raise TableShapeError(f"expected {nx} images in range({ny}), got {doc!r}")
        return tuple(doc)

    def function(self, dom, cod, fn):
        """Morphism from a Python callable on indices."""
        return Morphism(dom, cod, tuple(fn(i) for i in range(self.size(dom))))


class FinPar(CategoryModel):
    """Finite sets and partial functions; ``None`` marks an undefined point.

    The hom preorder is definedness: f <= g when g extends f.
    """

    kind = "finpar"
    capabilities = frozenset({"copy", "discard", "homs", "leq"})
    posetal = True

    def _identity(self, w):
        return K.prod_identity(self.size(w))

    def _compose(self, f, g):
        gd = g.data
        return tuple(None if v is None else gd[v] for v in f.data)

    def _tensor(self, f, g):
        nw = self.size(g.cod)
        return tuple(None if a is None or b is None else a * nw + b for a in f.data for b in g.data)

    def _symmetry(self, w1, w2):
        return K.prod_sym(self.size(w1), self.size(w2))

    def _copy(self, w):
        return K.prod_copy(self.size(w))

    def _discard(self, w):
        return K.prod_discard(self.size(w))

    def _homs(self, dom, cod):
        values = [None] + list(range(self.size(cod)))
        return itertools.product(values, repeat=self.size(dom))

    def hom_size(self, dom, cod):
        return (self.size(cod) + 1) ** self.size(dom)

    def _random_hom(self, dom, cod, rng):
        values = [None] + list(range(self.size(cod)))
        return tuple(rng.choice(values) for _ in range(self.size(dom)))

    def _leq(self, f, g):
        return all(a is None or a == b for a, b in zip(f.data, g.data))

    def _to_json(self, f):
        return list(f.data)

    def _from_json(self, doc, dom, cod):
        nx, ny = self.size(dom), self.size(cod)
        if len(doc) != nx or any(v is not None and (not isinstance(v, int) or not 0 <= v < ny) for v in doc):
            raise TableShapeError(f"expected {nx} images in range({ny}) or null, got {doc!r}")
        return tuple(doc)


class FinPreOrd(FinSet):
    """Finite preorders and monotone maps, ordered pointwise.

    Sorts carry their own order; words get the componentwise order.
    """

    kind = "finpreord"
    capabilities = frozenset({"copy", "discard", "homs", "leq"})
    enumerate_limit = 1 << 16

    def leq_elements(self, word, i, j):
        return product_leq(word, i, j)

    def is_valid(self, f):
        dom, cod = f.dom, f.cod
        n = self.size(dom)
        d = f.data
        for i in range(n):
            for j in range(n):
                if i != j and product_leq(dom, i, j) and not product_leq(cod, d[i], d[j]):
                    return False
        return True

    def _homs(self, dom, cod):
        nx = self.size(dom)
        below = [[j for j in range(i) if product_leq(dom, j, i) or product_leq(dom, i, j)] for i in range(nx)]
        ny = self.size(cod)

        # depth-first extension keeps the enumeration lexicographic
        def extend(prefix):
            i = len(prefix)
            if i == nx:
                yield tuple(prefix)
                return
            for v in range(ny):
                ok = True
                for j in below[i]:
                    if product_leq(dom, j, i) and not product_leq(cod, prefix[j], v):
                        ok = False
                        break
                    if product_leq(dom, i, j) and not product_leq(cod, v, prefix[j]):
                        ok = False
                        break
                if ok:
                    prefix.append(v)
                    yield from extend(prefix)
                    prefix.pop()

        return extend([])

    def _hom_list(self, dom, cod):
        return self._cached(("homs", dom, cod), lambda: list(self._homs(dom, cod)))

    def hom_size(self, dom, cod):
        if self.size(cod) ** self.size(dom) > self.enumerate_limit:
            return None
        return len(self._hom_list(dom, cod))

    def _random_hom(self, dom, cod, rng):
        # only reached when hom_size is known, so the list is small enough
        return rng.choice(self._hom_list(dom, cod))

    def _from_json(self, doc, dom, cod):
        data = FinSet._from_json(self, doc, dom, cod)
        if not self.is_valid(Morphism(dom, cod, data)):
            raise TableShapeError(f"{doc!r} is not monotone")
        return data

    def _leq(self, f, g):
        cod = f.cod
        return all(product_leq(cod, a, b) for a, b in zip(f.data, g.data))

    def manifest(self):
        sorts = {}
        for s in self.sorts:
            sorts[s.name] = {"size": s.size, "order": [list(p) for p in s.order_pairs()]}
        return {"kind": self.kind, "sorts": sorts}


class FinPoset(FinPreOrd):
    kind = "finposet"
    posetal = True
