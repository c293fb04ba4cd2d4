"""Weight-vector monads over a finite semiring, on finite sets and on preorders.

T(X) holds the functions X -> S (all of them have finite support here) that
satisfy the variant's predicate:

* ``full``: every weight vector;
* ``e``: support at most one, idempotent entries;
* ``u``: entries sum to one;
* ``e_sub``: support at most one, sub-idempotent entries (h(x) <= h(x)h(x));
* ``u_sub``: entries sum to at most one.
"""
from __future__ import annotations

import itertools

from ..core.objects import Sort, product_leq
from ..errors import OrderIncompatible, VariantNotClosed
from ..instances.functions import FinPreOrd, FinSet
from ..semiring import (load_semiring, vec_idempotent, vec_normalised, vec_sub_idempotent,
                        vec_sub_normalised, vec_support_at_most_one)
from .carrier import CarrierMonad, check_closed

VARIANTS = {
    "full": lambda S, v: True,
    "e": lambda S, v: vec_support_at_most_one(S, v) and vec_idempotent(S, v),
    "u": vec_normalised,
    "e_sub": lambda S, v: vec_support_at_most_one(S, v) and vec_sub_idempotent(S, v),
    "u_sub": vec_sub_normalised,
}

# on preorders the support bound of e_sub may be dropped
UPWEIGHT_VARIANTS = dict(VARIANTS, e_sub=vec_sub_idempotent)


class WeightMonad(CarrierMonad):
    """Shared element operations for weight vectors."""

    prefix = "M"
    ordered = True

    def __init__(self, base, semiring, variant="full", predicate=None, name=None, verify=True):
        self.semiring = load_semiring(semiring)
        self.variant = variant
        table = self.variant_table()
        if predicate is None:
            if variant not in table:
                raise KeyError(f"unknown variant {variant!r}; expected one of {', '.join(table)}")
            predicate = table[variant]
        self.predicate = predicate
        super().__init__(base, name or f"{self.kind}({self.semiring.name or 'S'},{variant})")
        self.posetal = all(a == b or not (self.semiring.leq(a, b) and self.semiring.leq(b, a))
                           for a in range(self.semiring.size) for b in range(self.semiring.size))
        if verify:
            self.verify_closed()

    def variant_table(self):
        return VARIANTS

    def verify_closed(self):
        sizes = [Sort.discrete(f"_{n}", n) for n in (0, 1, 2)]
        words = [(s,) for s in sizes]
        bad = check_closed(self, words, self.variant)
        self._sorts.clear()
        self.__dict__.get("_up", {}).clear()
        if bad is not None:
            op, el = bad
            labels = [self.semiring.labels[v] for v in el]
            raise VariantNotClosed(f"{op} leaves variant {self.variant}: {labels}", witness=(op, labels))

    def count_bound(self, word):
        return self.semiring.size ** self.base.size(word)

    def elements(self, word):
        S, pred = self.semiring, self.predicate
        return [v for v in itertools.product(range(S.size), repeat=self.base.size(word)) if pred(S, v)]

    def dirac(self, word, x):
        S = self.semiring
        return tuple(S.one if i == x else S.zero for i in range(self.base.size(word)))

    def push(self, wx, wy, table, a):
        S = self.semiring
        out = [S.zero] * self.base.size(wy)
        add = S.add
        for x, w in enumerate(a):
            y = table[x]
            out[y] = add[out[y]][w]
        return tuple(out)

    def bind(self, wx, wy, a, k):
        S = self.semiring
        add, mul, zero = S.add, S.mul, S.zero
        out = [zero] * self.base.size(wy)
        for x, w in enumerate(a):
            if w == zero:
                continue
            row = mul[w]
            for y, v in enumerate(k(x)):
                out[y] = add[out[y]][row[v]]
        return tuple(out)

    def pair(self, w1, w2, a, b):
        mul = self.semiring.mul
        return tuple(mul[p][q] for p in a for q in b)

    def element_json(self, word, a):
        return [self.semiring.labels[v] for v in a]

    def element_from_json(self, word, doc):
        return tuple(self.semiring.index(v) for v in doc)

    def manifest(self):
        return {"kind": self.kind, "semiring": self.semiring.name or self.semiring.to_json(),
                "variant": self.variant}


class SemiringMonad(WeightMonad):
    """Weight vectors on finite sets, ordered pointwise."""

    kind = "semiring"

    def element_leq(self, word, a, b):
        leq = self.semiring.leq
        return all(leq(p, q) for p, q in zip(a, b))


class UpweightMonad(WeightMonad):
    """Weight vectors on preorders, with h <= k when every up-closed set weighs less under h."""

    kind = "upweight"

    def __init__(self, base, semiring, variant="full", predicate=None, name=None, verify=True):
        S = load_semiring(semiring)
        if not isinstance(base, FinPreOrd):
            raise OrderIncompatible(f"upweight needs a model of preorders, not {base.name}")
        bad = [S.labels[a] for a in range(S.size) if not S.leq(S.zero, a)]
        if bad:
            raise OrderIncompatible(f"0 is not below {', '.join(bad)} in {S.name or 'the semiring'}")
        self._up = {}
        super().__init__(base, S, variant, predicate, name, verify)

    def variant_table(self):
        return UPWEIGHT_VARIANTS

    def up_sets(self, word):
        """Up-closed subsets of the carrier, as index lists; they are the unions of principal ones."""
        if word not in self._up:
            n = self.base.size(word)
            principal = [sum(1 << j for j in range(n) if product_leq(word, i, j)) for i in range(n)]
            masks = {0}
            for p in principal:
                masks |= {m | p for m in masks}
            self._up[word] = [[i for i in range(n) if m >> i & 1] for m in sorted(masks)]
        return self._up[word]

    def element_leq(self, word, a, b):
        S = self.semiring
        return all(S.leq(S.sum(a[i] for i in U), S.sum(b[i] for i in U)) for U in self.up_sets(word))


def semiring_monad(S, variant="full", base=None, predicate=None, sorts=None):
    """The weight monad of ``S`` on a model of finite sets (a fresh one when ``base`` is None)."""
    if base is None:
        base = FinSet(sorts or [Sort.discrete("X", 2)])
    return SemiringMonad(base, S, variant, predicate)


def upweight(S, base, variant="full", predicate=None):
    return UpweightMonad(base, S, variant, predicate)
