"""Relations, spans and weighted relations between finite carriers.

Relations and spans share one representation: a collection of index pairs
(x, y). Relations keep them in a frozenset; spans keep a sorted tuple, so a
pair may repeat and the tuple is the canonical form of the span up to apex
relabelling.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from ..core.model import CategoryModel, Morphism
from ..errors import NotParallel, SemiringMismatch, TableShapeError, TypeMismatch
from . import carriers as K


class PairModel(CategoryModel):
    """Shared machinery for models whose morphisms are collections of pairs."""

    multiset = False

    def norm(self, pairs):
        return tuple(sorted(pairs)) if self.multiset else frozenset(pairs)

    # carrier-specific structure as lists of pairs

    def _pairs_sym(self, w1, w2):
        n1, n2 = self.size(w1), self.size(w2)
        if self.tensor_kind == "sum":
            return K.graph(K.sum_sym(n1, n2))
        return K.graph(K.prod_sym(n1, n2))

    def _pairs_copy(self, w):
        n = self.size(w)
        if self.tensor_kind == "sum":
            return K.sum_copy_pairs(n)
        return K.graph(K.prod_copy(n))

    def _pairs_discard(self, w):
        n = self.size(w)
        if self.tensor_kind == "sum":
            return []
        return K.graph(K.prod_discard(n))

    def _identity(self, w):
        return self.norm((i, i) for i in range(self.size(w)))

    def _compose(self, f, g):
        succ = defaultdict(list)
        for y, z in g.data:
            succ[y].append(z)
        return self.norm((x, z) for x, y in f.data for z in succ[y])

    def _tensor(self, f, g):
        if self.tensor_kind == "sum":
            nx, ny = self.size(f.dom), self.size(f.cod)
            return self.norm(list(f.data) + [(nx + z, ny + w) for z, w in g.data])
        nz, nw = self.size(g.dom), self.size(g.cod)
        return self.norm((x * nz + z, y * nw + w) for x, y in f.data for z, w in g.data)

    def _symmetry(self, w1, w2):
        return self.norm(self._pairs_sym(w1, w2))

    def _copy(self, w):
        return self.norm(self._pairs_copy(w))

    def _discard(self, w):
        return self.norm(self._pairs_discard(w))

    def _cocopy(self, w):
        return self.norm(K.converse(self._pairs_copy(w)))

    def _codischarge(self, w):
        return self.norm(K.converse(self._pairs_discard(w)))

    def _all_pairs(self, dom, cod):
        return [(i, j) for i in range(self.size(dom)) for j in range(self.size(cod))]


class RelationModel(PairModel):
    """Relations: subsets of dom x cod, ordered by inclusion."""

    capabilities = frozenset({"copy", "discard", "cocopy", "codischarge", "homs", "leq"})
    posetal = True

    def _homs(self, dom, cod):
        pairs = self._all_pairs(dom, cod)
        k = len(pairs)
        for mask in range(1 << k):
            yield frozenset(pairs[t] for t in range(k) if mask >> t & 1)

    def hom_size(self, dom, cod):
        return 2 ** (self.size(dom) * self.size(cod))

    def _random_hom(self, dom, cod, rng):
        return frozenset(p for p in self._all_pairs(dom, cod) if rng.random() < 0.5)

    def _leq(self, f, g):
        return f.data <= g.data

    def _to_json(self, f):
        return [list(p) for p in sorted(f.data)]

    def _from_json(self, doc, dom, cod):
        nx, ny = self.size(dom), self.size(cod)
        pairs = set()
        for p in doc:
            x, y = p
            if not (isinstance(x, int) and isinstance(y, int) and 0 <= x < nx and 0 <= y < ny):
                raise TableShapeError(f"pair {p!r} outside {nx}x{ny}")
            pairs.add((x, y))
        return frozenset(pairs)

    def relation(self, dom, cod, pairs):
        return Morphism(dom, cod, frozenset(pairs))


class FinRel(RelationModel):
    """Finite sets and relations with existential composition and the product tensor."""

    kind = "finrel"


class RelPlus(RelationModel):
    """Relations with the disjoint union as tensor.

    The structural arrows are images of the ones of :class:`SpanPlus`.
    """

    kind = "rel_plus"
    tensor_kind = "sum"

    def __init__(self, sorts=(), name=None, **kw):
        super().__init__(sorts, name, **kw)
        self._spans = SpanPlus(sorts, carrier_cap=self.carrier_cap)

    def _transport(self, m):
        return rel_from_span(m).data

    def _symmetry(self, w1, w2):
        return self._transport(self._spans.symmetry(w1, w2))

    def _copy(self, w):
        return self._transport(self._spans.copy(w))

    def _discard(self, w):
        return self._transport(self._spans.discard(w))

    def _cocopy(self, w):
        return self._transport(self._spans.cocopy(w))

    def _codischarge(self, w):
        return self._transport(self._spans.codischarge(w))


class FinRelForall(RelationModel):
    """Relations composed with a universal quantifier and disjunction.

    Every structural arrow is the complement of the corresponding relation in
    :class:`FinRel`; no hom preorder is exposed.
    """

    kind = "finrel_forall"
    capabilities = frozenset({"copy", "discard", "cocopy", "codischarge", "homs"})
    posetal = False

    def _complement(self, pairs, nx, ny):
        pairs = set(pairs)
        return frozenset((x, y) for x in range(nx) for y in range(ny) if (x, y) not in pairs)

    def _identity(self, w):
        n = self.size(w)
        return frozenset((x, y) for x in range(n) for y in range(n) if x != y)

    def _compose(self, f, g):
        return compose_forall(f, g, self.size(f.cod), self.size(g.cod)).data

    def _tensor(self, f, g):
        nx, ny = self.size(f.dom), self.size(f.cod)
        nz, nw = self.size(g.dom), self.size(g.cod)
        a, c = f.data, g.data
        return frozenset((x * nz + z, y * nw + w)
                         for x in range(nx) for z in range(nz) for y in range(ny) for w in range(nw)
                         if (x, y) in a or (z, w) in c)

    def _flip(self, pairs, dom, cod):
        return self._complement(pairs, self.size(dom), self.size(cod))

    def _symmetry(self, w1, w2):
        return self._flip(self._pairs_sym(w1, w2), w1 + w2, w2 + w1)

    def _copy(self, w):
        return self._flip(self._pairs_copy(w), w, w + w)

    def _discard(self, w):
        return self._flip(self._pairs_discard(w), w, ())

    def _cocopy(self, w):
        return self._flip(K.converse(self._pairs_copy(w)), w + w, w)

    def _codischarge(self, w):
        return self._flip(K.converse(self._pairs_discard(w)), (), w)


def compose_forall(a, b, ny=None, nz=None):
    """{(x, z) | for all y: (x, y) in a or (y, z) in b}.

    Carrier sizes default to the largest indices seen, so pass them when
    either relation may be sparse.
    """
    if a.cod != b.dom:
        raise TypeMismatch("codomain of the first relation is not the domain of the second")
    from ..core.objects import product_size
    nx = product_size(a.dom)
    ny = product_size(a.cod) if ny is None else ny
    nz = product_size(b.cod) if nz is None else nz
    A, B = a.data, b.data
    return Morphism(a.dom, b.cod, frozenset(
        (x, z) for x in range(nx) for z in range(nz) if all((x, y) in A or (y, z) in B for y in range(ny))))


def complement(C, f):
    """Elementwise complement of a relation inside the full dom x cod."""
    nx, ny = C.size(f.dom), C.size(f.cod)
    return Morphism(f.dom, f.cod, frozenset(
        (x, y) for x in range(nx) for y in range(ny) if (x, y) not in f.data))


# spans


class SpanModel(PairModel):
    """Spans of finite sets up to apex isomorphism.

    Hom-sets are infinite; enumeration lists spans with apex at most
    ``apex_cap`` and is never reported as complete.
    """

    multiset = True
    capabilities = frozenset({"copy", "discard", "cocopy", "codischarge", "homs", "leq"})

    def __init__(self, sorts=(), name=None, apex_cap=2, **kw):
        super().__init__(sorts, name, **kw)
        self.apex_cap = apex_cap

    def _homs(self, dom, cod):
        pairs = self._all_pairs(dom, cod)
        for k in range(self.apex_cap + 1):
            yield from itertools.combinations_with_replacement(pairs, k)

    def hom_size(self, dom, cod):
        return None

    def _random_hom(self, dom, cod, rng):
        pairs = self._all_pairs(dom, cod)
        if not pairs:
            return ()
        k = rng.randint(0, self.apex_cap)
        return tuple(sorted(rng.choice(pairs) for _ in range(k)))

    def _leq(self, f, g):
        return span_leq(f, g)

    def _to_json(self, f):
        return {"apex_size": len(f.data), "left": [p[0] for p in f.data], "right": [p[1] for p in f.data]}

    def _from_json(self, doc, dom, cod):
        nx, ny = self.size(dom), self.size(cod)
        left, right = doc["left"], doc["right"]
        if len(left) != doc.get("apex_size", len(left)) or len(left) != len(right):
            raise TableShapeError("span legs must have apex_size entries")
        for x, y in zip(left, right):
            if not (0 <= x < nx and 0 <= y < ny):
                raise TableShapeError(f"leg values {(x, y)} outside {nx}x{ny}")
        return canonical_span(zip(left, right))

    def manifest(self):
        out = super().manifest()
        out["apex_cap"] = self.apex_cap
        return out

    def span(self, dom, cod, left, right):
        return Morphism(dom, cod, canonical_span(zip(left, right)))


class SpanX(SpanModel):
    kind = "span_x"


class SpanPlus(SpanModel):
    kind = "span_plus"
    tensor_kind = "sum"


@dataclass(frozen=True)
class Span:
    """Explicit span: apex {0..n-1} with two legs."""

    left: tuple
    right: tuple

    @property
    def apex_size(self):
        return len(self.left)

    @classmethod
    def of(cls, m):
        return cls(tuple(p[0] for p in m.data), tuple(p[1] for p in m.data))


def canonical_span(pairs):
    """Least relabelling of the apex: the leg pairs in sorted order."""
    return tuple(sorted((int(x), int(y)) for x, y in pairs))


def span_compose(s, t):
    """Pullback composite of spans given as morphisms."""
    if s.cod != t.dom:
        raise TypeMismatch("spans do not meet")
    succ = defaultdict(list)
    for y, z in t.data:
        succ[y].append(z)
    return Morphism(s.dom, t.cod, canonical_span((x, z) for x, y in s.data for z in succ[y]))


def span_mediator(s, t):
    """A map apex(s) -> apex(t) commuting with both legs, or None.

    Backtracking search over the apex of ``s``.
    """
    if s.dom != t.dom or s.cod != t.cod:
        raise NotParallel("spans are not parallel")
    cands = [[b for b, q in enumerate(t.data) if q == p] for p in s.data]
    chosen = []

    def search(i):
        if i == len(cands):
            return True
        for b in cands[i]:
            chosen.append(b)
            if search(i + 1):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if search(0) else None


def span_leq(s, t):
    return span_mediator(s, t) is not None


def rel_from_span(s):
    """Image of a span: the jointly monic part of its legs."""
    return Morphism(s.dom, s.cod, frozenset(s.data))


# weighted relations


@dataclass(frozen=True)
class WeightMatrix:
    semiring: object
    rows: tuple

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0


def wrel_compose(a, b):
    """Matrix product over the shared semiring."""
    if a.semiring != b.semiring:
        raise SemiringMismatch("weight matrices live over different semirings")
    S = a.semiring
    n, m = a.shape
    if len(b.rows) != m:
        raise TypeMismatch(f"cannot multiply {n}x{m} by {len(b.rows)} rows")
    k = len(b.rows[0]) if b.rows else 0
    return WeightMatrix(S, tuple(
        tuple(S.sum(S.mul[a.rows[x][y]][b.rows[y][z]] for y in range(m)) for z in range(k))
        for x in range(n)))


class WRel(CategoryModel):
    """Weighted relations: matrices over a finite commutative semiring.

    Hom-sets are ordered pointwise by the semiring preorder.
    """

    kind = "wrel"
    capabilities = frozenset({"copy", "discard", "cocopy", "codischarge", "homs", "leq"})

    def __init__(self, semiring, sorts=(), name=None, **kw):
        super().__init__(sorts, name or f"wrel({semiring.name or 'S'})", **kw)
        self.semiring = semiring
        self.posetal = all(not (semiring.leq(a, b) and semiring.leq(b, a)) or a == b
                           for a in range(semiring.size) for b in range(semiring.size))

    def _from_table(self, table, ny, transpose=False):
        S = self.semiring
        rows = [[S.zero] * ny for _ in table]
        for x, y in enumerate(table):
            rows[x][y] = S.one
        rows = tuple(tuple(r) for r in rows)
        return tuple(zip(*rows)) if transpose else rows

    def _identity(self, w):
        n = self.size(w)
        return self._from_table(range(n), n)

    def _compose(self, f, g):
        S = self.semiring
        a, b = f.data, g.data
        m = len(b)
        nz = self.size(g.cod)
        mul, add, zero = S.mul, S.add, S.zero
        out = []
        for row in a:
            new = []
            for z in range(nz):
                acc = zero
                for y in range(m):
                    acc = add[acc][mul[row[y]][b[y][z]]]
                new.append(acc)
            out.append(tuple(new))
        return tuple(out)

    def _tensor(self, f, g):
        mul = self.semiring.mul
        return tuple(tuple(mul[ra[y]][rb[w]] for y in range(len(ra)) for w in range(len(rb)))
                     for ra in f.data for rb in g.data) if f.data and g.data else \
            tuple(() for _ in range(len(f.data) * len(g.data)))

    def _symmetry(self, w1, w2):
        return self._from_table(K.prod_sym(self.size(w1), self.size(w2)), self.size(w1 + w2))

    def _copy(self, w):
        n = self.size(w)
        return self._from_table(K.prod_copy(n), n * n)

    def _discard(self, w):
        return self._from_table(K.prod_discard(self.size(w)), 1)

    def _cocopy(self, w):
        n = self.size(w)
        return self._transpose(self._copy(w), n * n)

    def _codischarge(self, w):
        return self._transpose(self._discard(w), 1)

    def _transpose(self, rows, ncols):
        """The transpose of a matrix with ``ncols`` columns."""
        return tuple(tuple(r[c] for r in rows) for c in range(ncols))

    def _homs(self, dom, cod):
        nx, ny = self.size(dom), self.size(cod)
        for flat in itertools.product(range(self.semiring.size), repeat=nx * ny):
            yield tuple(tuple(flat[x * ny:(x + 1) * ny]) for x in range(nx))

    def hom_size(self, dom, cod):
        return self.semiring.size ** (self.size(dom) * self.size(cod))

    def _random_hom(self, dom, cod, rng):
        k = self.semiring.size
        return tuple(tuple(rng.randrange(k) for _ in range(self.size(cod))) for _ in range(self.size(dom)))

    def _leq(self, f, g):
        leq = self.semiring.leq
        return all(leq(a, b) for ra, rb in zip(f.data, g.data) for a, b in zip(ra, rb))

    def _to_json(self, f):
        lab = self.semiring.labels
        return [[lab[v] for v in row] for row in f.data]

    def _from_json(self, doc, dom, cod):
        nx, ny = self.size(dom), self.size(cod)
        if len(doc) != nx or any(len(r) != ny for r in doc):
            raise TableShapeError(f"expected a {nx}x{ny} matrix")
        return tuple(tuple(self.semiring.index(v) for v in row) for row in doc)

    def matrix(self, f):
        return WeightMatrix(self.semiring, f.data)

    def manifest(self):
        out = super().manifest()
        out["semiring"] = self.semiring.name or self.semiring.to_json()
        return out
