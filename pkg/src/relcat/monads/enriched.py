"""Subset monads on preorders and posets, and the catalog of order-enriched monads."""
from __future__ import annotations

from ..core.objects import product_leq
from ..errors import TypeMismatch
from ..instances.functions import FinPoset, FinPreOrd
from .carrier import CarrierMonad
from .semiring import UpweightMonad

SUBSET_VARIANTS = {
    "full": lambda s: True,
    "nonempty": lambda s: len(s) >= 1,
    "at_most_one": lambda s: len(s) <= 1,
}


class SubsetMonad(CarrierMonad):
    """Finite subsets, with union as multiplication and products as the lax structure."""

    prefix = "P"
    kind = "powerset"
    ordered = True

    def __init__(self, base, variant="full", name=None):
        if variant not in SUBSET_VARIANTS:
            raise KeyError(f"unknown variant {variant!r}; expected one of {', '.join(SUBSET_VARIANTS)}")
        self.variant = variant
        self.keep = SUBSET_VARIANTS[variant]
        super().__init__(base, name or (self.kind if variant == "full" else f"{self.kind}({variant})"))

    def count_bound(self, word):
        return 2 ** self.base.size(word)

    def elements(self, word):
        n = self.base.size(word)
        out = []
        for mask in range(1 << n):
            s = frozenset(i for i in range(n) if mask >> i & 1)
            if self.keep(s) and self.admissible(word, s):
                out.append(s)
        return out

    def admissible(self, word, s):
        return True

    def close(self, word, s):
        return frozenset(s)

    def dirac(self, word, x):
        return self.close(word, (x,))

    def push(self, wx, wy, table, a):
        return self.close(wy, (table[x] for x in a))

    def bind(self, wx, wy, a, k):
        out = set()
        for x in a:
            out |= k(x)
        return self.close(wy, out)

    def pair(self, w1, w2, a, b):
        n2 = self.base.size(w2)
        return frozenset(x * n2 + y for x in a for y in b)

    def element_leq(self, word, a, b):
        return a <= b

    def element_json(self, word, a):
        return sorted(a)

    def element_from_json(self, word, doc):
        return frozenset(doc)

    def manifest(self):
        return {"kind": self.kind, "variant": self.variant}


class HoarePowerset(SubsetMonad):
    """All subsets of a preorder, with U <= V when each point of U lies below a point of V."""

    kind = "hoare_powerset"

    def __init__(self, base, variant="full", name=None):
        if not isinstance(base, FinPreOrd):
            raise TypeMismatch(f"hoare_powerset needs a model of preorders, not {base.name}")
        super().__init__(base, variant, name)

    def element_leq(self, word, a, b):
        return all(any(product_leq(word, x, y) for y in b) for x in a)


class DownsetMonad(SubsetMonad):
    """Down-closed subsets of a poset, ordered by inclusion."""

    kind = "downset"
    posetal = True

    def __init__(self, base, variant="full", name=None):
        if not isinstance(base, FinPoset):
            raise TypeMismatch(f"downset needs a model of posets, not {base.name}")
        super().__init__(base, variant, name)

    def admissible(self, word, s):
        return self.close(word, s) == s

    def close(self, word, s):
        s = set(s)
        n = self.base.size(word)
        return frozenset(i for i in range(n) if any(product_leq(word, i, j) for j in s))


def powerset(base, variant="full"):
    """Subsets on a model of finite sets, ordered by inclusion."""
    m = SubsetMonad(base, variant)
    m.posetal = True
    return m


def enriched_monads(preorder=None, poset=None, semiring="boolean", variant="full"):
    """The order-enriched monads, keyed by name, over the given bases."""
    from ..core.objects import Sort
    if preorder is None:
        preorder = FinPreOrd([Sort.preordered("X", 2, [(0, 1)])])
    if poset is None:
        poset = FinPoset([Sort.preordered("X", 2, [(0, 1)])])
    return {
        "hoare_powerset": HoarePowerset(preorder, variant if variant in SUBSET_VARIANTS else "full"),
        "downset": DownsetMonad(poset),
        "upweight": UpweightMonad(preorder, semiring, variant if variant not in SUBSET_VARIANTS else "full"),
    }
