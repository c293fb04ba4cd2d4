"""Atomic sorts and tensor words.

An object is a tuple of :class:`Sort` values; the empty tuple is the unit.
Tensoring objects concatenates the tuples, so associativity and unit laws
hold on the nose.
"""
from __future__ import annotations

from math import prod

from ..errors import TypeMismatch


class Sort:
    """A named finite carrier, optionally preordered.

    ``leq`` is either None (discrete order) or a callable on element indices.
    Two sorts are equal when their names and sizes agree.
    """

    __slots__ = ("name", "elements", "_leq", "_index")

    def __init__(self, name, elements, leq=None):
        self.name = str(name)
        self.elements = tuple(elements)
        self._leq = leq
        self._index = None

    @classmethod
    def discrete(cls, name, size):
        return cls(name, range(size))

    @classmethod
    def preordered(cls, name, size, pairs=()):
        """A sort on ``range(size)`` ordered by the closure of ``pairs``."""
        rel = [[a == b for b in range(size)] for a in range(size)]
        for a, b in pairs:
            rel[a][b] = True
        for k in range(size):
            for a in range(size):
                if rel[a][k]:
                    for b in range(size):
                        if rel[k][b]:
                            rel[a][b] = True
        frozen = tuple(tuple(r) for r in rel)
        return cls(name, range(size), leq=lambda i, j: frozen[i][j])

    @property
    def size(self):
        return len(self.elements)

    @property
    def ordered(self):
        return self._leq is not None

    def leq(self, i, j):
        if self._leq is None:
            return i == j
        return self._leq(i, j)

    def index(self, element):
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return self._index[element]

    def order_pairs(self):
        n = self.size
        return [(i, j) for i in range(n) for j in range(n) if i != j and self.leq(i, j)]

    def __eq__(self, other):
        return isinstance(other, Sort) and self.name == other.name and self.size == other.size

    def __hash__(self):
        return hash((self.name, self.size))

    def __repr__(self):
        return self.name


UNIT = ()


def flatten_object(raw):
    """Flatten a nested tensor expression into a word.

    Accepts a :class:`Sort`, ``None``/``"I"``/``()`` for the unit, nested
    lists or tuples, and ``("⊗", a, b)`` triples.
    """
    if raw is None or raw == "I":
        return ()
    if isinstance(raw, Sort):
        return (raw,)
    if isinstance(raw, (tuple, list)):
        items = list(raw)
        if len(items) == 3 and items[0] in ("⊗", "*", "tensor"):
            items = items[1:]
        out = []
        for item in items:
            out.extend(flatten_object(item))
        return tuple(out)
    raise TypeMismatch(f"cannot read {raw!r} as an object")


def word_name(word):
    return "⊗".join(s.name for s in word) if word else "I"


def product_size(word):
    return prod(s.size for s in word)


def sum_size(word):
    return sum(s.size for s in word)


def unrank(word, i):
    """Split a flat product index into per-sort indices."""
    out = []
    for s in reversed(word):
        i, r = divmod(i, s.size)
        out.append(r)
    return tuple(reversed(out))


def rank(word, parts):
    i = 0
    for s, r in zip(word, parts):
        i = i * s.size + r
    return i


def product_elements(word):
    """Elements of the product carrier as tuples of sort elements, in rank order."""
    import itertools
    return list(itertools.product(*(s.elements for s in word)))


def product_leq(word, i, j):
    """Componentwise preorder on flat product indices."""
    if all(not s.ordered for s in word):
        return i == j
    return all(s.leq(a, b) for s, a, b in zip(word, unrank(word, i), unrank(word, j)))


def words_up_to(sorts, max_len):
    """All words of length 0..max_len, shorter first, then lexicographic by sort order."""
    import itertools
    out = []
    for n in range(max_len + 1):
        out.extend(itertools.product(sorts, repeat=n))
    return out
