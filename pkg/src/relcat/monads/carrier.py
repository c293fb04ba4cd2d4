"""Monads on function-table models whose T(X) is an explicit finite set.

T applied to a word is a single new sort whose elements are the monad's
values over the word's carrier (weight vectors, subsets, ...). Subclasses
describe the element level: the Dirac element, pushforward along a table,
bind, and the pairing used by the lax structure.
"""
from __future__ import annotations

from ..core.model import Morphism
from ..core.objects import Sort, word_name
from ..errors import CarrierTooLarge, TypeMismatch
from ..instances.functions import FinSet
from .base import MonadModel


class CarrierMonad(MonadModel):
    prefix = "T"

    def __init__(self, base, name=None):
        if not isinstance(base, FinSet):
            raise TypeMismatch(f"{type(self).__name__} needs a model of functions, not {base.name}")
        super().__init__(base, name)
        self._sorts = {}

    # element level, implemented by subclasses

    def count_bound(self, word):
        """Upper bound on |T(word)|, checked before enumerating."""
        raise NotImplementedError

    def elements(self, word):
        raise NotImplementedError

    def dirac(self, word, x):
        raise NotImplementedError

    def push(self, wx, wy, table, a):
        raise NotImplementedError

    def bind(self, wx, wy, a, k):
        """The element mu(T(k)(a)) over ``wy`` for k : index of wx -> element over wy."""
        raise NotImplementedError

    def pair(self, w1, w2, a, b):
        raise NotImplementedError

    def element_leq(self, word, a, b):
        return a == b

    def element_json(self, word, a):
        return list(a)

    def element_from_json(self, word, doc):
        return tuple(doc)

    # sorts

    def tsort(self, word):
        word = tuple(word)
        if word not in self._sorts:
            bound = self.count_bound(word)
            if bound > self.base.carrier_cap:
                raise CarrierTooLarge(f"{self.prefix}({word_name(word)}) may have {bound} elements")
            els = tuple(self.elements(word))
            leq = self._cached_leq(word, els) if self.ordered else None
            self._sorts[word] = Sort(f"{self.prefix}({word_name(word)})", els, leq)
        return self._sorts[word]

    def _cached_leq(self, word, els):
        table = {}

        def leq(i, j):
            if (i, j) not in table:
                table[i, j] = self.element_leq(word, els[i], els[j])
            return table[i, j]
        return leq

    def obj(self, word):
        return (self.tsort(word),)

    # structure maps

    def arr(self, f):
        TX, TY = self.tsort(f.dom), self.tsort(f.cod)
        table = f.data
        return Morphism((TX,), (TY,), tuple(TY.index(self.push(f.dom, f.cod, table, a)) for a in TX.elements))

    def eta(self, word):
        word = tuple(word)
        TW = self.tsort(word)
        n = self.base.size(word)
        return Morphism(word, (TW,), tuple(TW.index(self.dirac(word, x)) for x in range(n)))

    def mu(self, word):
        word = tuple(word)
        TW = self.tsort(word)
        TTW = self.tsort((TW,))
        els = TW.elements
        return Morphism((TTW,), (TW,), tuple(TW.index(self.bind((TW,), word, A, els.__getitem__))
                                             for A in TTW.elements))

    def lax(self, w1, w2):
        w1, w2 = tuple(w1), tuple(w2)
        T1, T2, T12 = self.tsort(w1), self.tsort(w2), self.tsort(w1 + w2)
        return Morphism((T1, T2), (T12,), tuple(T12.index(self.pair(w1, w2, a, b))
                                                for a in T1.elements for b in T2.elements))

    # Kleisli operations at element level

    def kleisli_compose(self, f, g, z):
        (TY,), (TZ,) = f.cod, g.cod
        y = g.dom
        gels = [TZ.elements[v] for v in g.data]
        return Morphism(f.dom, g.cod, tuple(TZ.index(self.bind(y, z, TY.elements[v], gels.__getitem__))
                                            for v in f.data))

    def kleisli_tensor(self, f, g, y1, y2):
        (T1,), (T2,) = f.cod, g.cod
        T12 = self.tsort(y1 + y2)
        return Morphism(f.dom + g.dom, (T12,), tuple(
            T12.index(self.pair(y1, y2, T1.elements[a], T2.elements[b])) for a in f.data for b in g.data))

    def describe(self, word, i):
        """JSON form of the element with index ``i`` in T(word)."""
        return self.element_json(word, self.tsort(word).elements[i])


def check_closed(monad, words, predicate_name, max_binds=20000):
    """Search for an element produced by the structure maps that T(word) lacks.

    Returns ``(operation, element)`` for the first escape, or None. ``words``
    are small test words; every function between them and every element is
    tried for push, pair and bind.
    """
    import itertools

    def member(word, el):
        try:
            monad.tsort(word).index(el)
            return True
        except KeyError:
            return False

    for wx in words:
        nx = monad.base.size(wx)
        xs = monad.tsort(wx).elements
        for x in range(nx):
            if not member(wx, monad.dirac(wx, x)):
                return "eta", monad.dirac(wx, x)
        for wy in words:
            ny = monad.base.size(wy)
            ys = monad.tsort(wy).elements
            for table in itertools.product(range(ny), repeat=nx):
                for a in xs:
                    el = monad.push(wx, wy, table, a)
                    if not member(wy, el):
                        return "T(f)", el
            for a in xs:
                for b in ys:
                    el = monad.pair(wx, wy, a, b)
                    if not member(wx + wy, el):
                        return "c", el
            count = 0
            for ks in itertools.product(ys, repeat=nx):
                for a in xs:
                    count += 1
                    if count > max_binds:
                        break
                    el = monad.bind(wx, wy, a, ks.__getitem__)
                    if not member(wy, el):
                        return "mu", el
    return None
