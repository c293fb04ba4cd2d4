"""Finite commutative semirings given by operation tables."""
from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .errors import LawViolation, TableShapeError


class Semiring:
    """A validated finite commutative semiring.

    Elements are stored as opaque string labels; internally every operation
    works on indices into ``labels``. Build instances with :func:`make_semiring`.
    """

    def __init__(self, labels, add, mul, zero, one, order=None, name=None):
        self.labels = tuple(labels)
        self.add = tuple(tuple(r) for r in add)
        self.mul = tuple(tuple(r) for r in mul)
        self.zero = zero
        self.one = one
        self.name = name
        self.explicit_order = order is not None
        n = len(self.labels)
        pairs = canonical_pairs(self) if order is None else frozenset(order)
        self.order = pairs
        self._leq = [[(a, b) in pairs for b in range(n)] for a in range(n)]
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def size(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise TableShapeError(f"{label!r} is not an element of {self.name or 'semiring'}") from None

    def plus(self, a, b):
        return self.add[a][b]

    def times(self, a, b):
        return self.mul[a][b]

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add[acc][v]
        return acc

    def leq(self, a, b):
        return self._leq[a][b]

    def is_idempotent(self, a):
        return self.mul[a][a] == a

    def to_json(self):
        lab = self.labels
        doc = {
            "elements": list(lab),
            "add": [[lab[v] for v in row] for row in self.add],
            "mul": [[lab[v] for v in row] for row in self.mul],
            "zero": lab[self.zero],
            "one": lab[self.one],
        }
        if self.explicit_order:
            doc["order"] = [[lab[a], lab[b]] for a, b in sorted(self.order)]
        return doc

    def same_tables(self, other):
        return (self.labels, self.add, self.mul, self.zero, self.one, self.order) == (
            other.labels, other.add, other.mul, other.zero, other.one, other.order)

    def __eq__(self, other):
        return isinstance(other, Semiring) and self.same_tables(other)

    def __hash__(self):
        return hash((self.labels, self.add, self.mul))

    def __repr__(self):
        return f"Semiring({self.name or list(self.labels)})"


def canonical_pairs(S):
    """Index pairs (a, b) such that a + c = b for some c."""
    n = len(S.labels)
    return frozenset((a, S.add[a][c]) for a in range(n) for c in range(n))


def canonical_preorder(S):
    """The canonical preorder of ``S`` as a set of label pairs."""
    lab = S.labels
    return frozenset((lab[a], lab[b]) for a, b in canonical_pairs(S))


def _table(raw, index, n, what):
    if not isinstance(raw, (list, tuple)) or len(raw) != n:
        raise TableShapeError(f"{what} table must have {n} rows")
    out = []
    for i, row in enumerate(raw):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise TableShapeError(f"{what} table row {i} must have {n} entries")
        try:
            out.append([index[str(v)] for v in row])
        except KeyError as exc:
            raise TableShapeError(f"{what} table row {i} mentions unknown element {exc.args[0]!r}") from None
    return out


def _first_violation(labels, add, mul, zero, one):
    """Scan the semiring axioms in a fixed order and report the first failure.

    Order: additive monoid, annihilation, multiplicative monoid,
    distributivity. Within each law, witnesses come in lexicographic order.
    """
    n = len(labels)
    E = range(n)
    lab = labels

    def w(**kw):
        return {k: lab[v] for k, v in kw.items()}

    for a, b in itertools.product(E, E):
        if add[a][b] != add[b][a]:
            return "add-commutativity", w(a=a, b=b)
    for a in E:
        if add[zero][a] != a:
            return "add-unit", w(a=a)
    for a, b, c in itertools.product(E, E, E):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return "add-associativity", w(a=a, b=b, c=c)
    for a in E:
        if mul[zero][a] != zero or mul[a][zero] != zero:
            return "annihilation", w(a=a)
    for a, b in itertools.product(E, E):
        if mul[a][b] != mul[b][a]:
            return "mul-commutativity", w(a=a, b=b)
    for a in E:
        if mul[one][a] != a:
            return "mul-unit", w(a=a)
    for a, b, c in itertools.product(E, E, E):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return "mul-associativity", w(a=a, b=b, c=c)
    for a, b, c in itertools.product(E, E, E):
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return "distributivity", w(a=a, b=b, c=c)
    return None


def _order_violation(labels, add, mul, pairs):
    n = len(labels)
    E = range(n)
    lab = labels
    for a in E:
        if (a, a) not in pairs:
            return "order-reflexivity", {"a": lab[a]}
    for a, b, c in itertools.product(E, E, E):
        if (a, b) in pairs and (b, c) in pairs and (a, c) not in pairs:
            return "order-transitivity", {"a": lab[a], "b": lab[b], "c": lab[c]}
    for (a, b), (c, d) in itertools.product(sorted(pairs), sorted(pairs)):
        if (add[a][c], add[b][d]) not in pairs:
            return "order-add-compatibility", {"a": lab[a], "b": lab[b], "c": lab[c], "d": lab[d]}
        if (mul[a][c], mul[b][d]) not in pairs:
            return "order-mul-compatibility", {"a": lab[a], "b": lab[b], "c": lab[c], "d": lab[d]}
    return None


def make_semiring(spec=None, name=None, **kw):
    """Validate raw tables and return a :class:`Semiring`.

    ``spec`` is a mapping with keys ``elements``, ``add``, ``mul``, ``zero``,
    ``one`` and optionally ``order`` (a list of label pairs). Keyword
    arguments may be used instead of, or to override, ``spec``.
    """
    doc = dict(spec or {})
    doc.update(kw)
    for key in ("elements", "add", "mul", "zero", "one"):
        if key not in doc:
            raise TableShapeError(f"missing key {key!r}")
    labels = [str(e) for e in doc["elements"]]
    if not labels:
        raise TableShapeError("a semiring needs at least one element")
    if len(set(labels)) != len(labels):
        raise TableShapeError("element labels must be distinct")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    add = _table(doc["add"], index, n, "add")
    mul = _table(doc["mul"], index, n, "mul")
    for key in ("zero", "one"):
        if str(doc[key]) not in index:
            raise TableShapeError(f"{key} {doc[key]!r} is not an element")
    zero, one = index[str(doc["zero"])], index[str(doc["one"])]
    bad = _first_violation(labels, add, mul, zero, one)
    if bad:
        raise LawViolation(*bad)
    order = None
    if doc.get("order") is not None:
        try:
            order = frozenset((index[str(a)], index[str(b)]) for a, b in doc["order"])
        except (KeyError, ValueError, TypeError):
            raise TableShapeError("order must be a list of element pairs") from None
        # the order is given by generating pairs; close it off
        order = _reflexive_transitive(order, n)
        bad = _order_violation(labels, add, mul, order)
        if bad:
            raise LawViolation(*bad)
    return Semiring(labels, add, mul, zero, one, order=order, name=name or doc.get("name"))


def _reflexive_transitive(pairs, n):
    rel = set(pairs) | {(a, a) for a in range(n)}
    for k in range(n):
        for a in range(n):
            if (a, k) in rel:
                for b in range(n):
                    if (k, b) in rel:
                        rel.add((a, b))
    return frozenset(rel)


def boolean():
    return make_semiring(
        elements=["0", "1"],
        add=[["0", "1"], ["1", "1"]],
        mul=[["0", "0"], ["0", "1"]],
        zero="0", one="1", name="boolean")


def gf2():
    return make_semiring(
        elements=["0", "1"],
        add=[["0", "1"], ["1", "0"]],
        mul=[["0", "0"], ["0", "1"]],
        zero="0", one="1", name="gf2")


def nat_truncated(k):
    """Naturals 0..k with sums and products cut off at k."""
    if k < 1:
        raise ValueError("truncation point must be at least 1")
    els = [str(i) for i in range(k + 1)]
    return make_semiring(
        elements=els,
        add=[[str(min(a + b, k)) for b in range(k + 1)] for a in range(k + 1)],
        mul=[[str(min(a * b, k)) for b in range(k + 1)] for a in range(k + 1)],
        zero="0", one="1", name=f"nat-trunc-{k}")


def _grid_labels(n):
    return [str(Fraction(i, n - 1)) for i in range(n)]


def maxmin_grid(n):
    """The n-point grid in [0, 1] with max and min."""
    if n < 2:
        raise ValueError("grid needs at least two points")
    lab = _grid_labels(n)
    return make_semiring(
        elements=lab,
        add=[[lab[max(a, b)] for b in range(n)] for a in range(n)],
        mul=[[lab[min(a, b)] for b in range(n)] for a in range(n)],
        zero=lab[0], one=lab[-1], name=f"maxmin-grid-{n}")


def maxprod_grid(n):
    """The n-point grid in [0, 1] with max and the product rounded down.

    Rounding can break associativity, in which case validation raises
    :class:`LawViolation` rather than returning a repaired table.
    """
    if n < 2:
        raise ValueError("grid needs at least two points")
    m = n - 1
    lab = _grid_labels(n)
    return make_semiring(
        elements=lab,
        add=[[lab[max(a, b)] for b in range(n)] for a in range(n)],
        mul=[[lab[(a * b) // m] for b in range(n)] for a in range(n)],
        zero=lab[0], one=lab[-1], name=f"maxprod-grid-{n}")


_PATTERNS = [
    (re.compile(r"boolean"), lambda: boolean()),
    (re.compile(r"gf2"), lambda: gf2()),
    (re.compile(r"nat-trunc-(\d+)"), lambda k: nat_truncated(int(k))),
    (re.compile(r"maxmin-grid-(\d+)"), lambda n: maxmin_grid(int(n))),
    (re.compile(r"maxprod-grid-(\d+)"), lambda n: maxprod_grid(int(n))),
]


class SemiringCatalog:
    """Named builtin semirings; parametrised families are built on lookup."""

    families = ("boolean", "gf2", "nat-trunc-<k>", "maxmin-grid-<n>", "maxprod-grid-<n>")

    def __init__(self):
        self._cache = {}

    def lookup(self, name):
        if name not in self._cache:
            for pat, build in _PATTERNS:
                m = pat.fullmatch(name)
                if m:
                    self._cache[name] = build(*m.groups())
                    break
            else:
                raise KeyError(f"unknown semiring {name!r}; known families: {', '.join(self.families)}")
        return self._cache[name]

    __getitem__ = lookup

    def __contains__(self, name):
        try:
            self.lookup(name)
        except (KeyError, LawViolation):
            return False
        return True

    def defaults(self):
        """A representative valid member of each family."""
        return [self.lookup(n) for n in ("boolean", "gf2", "nat-trunc-3", "maxmin-grid-3", "maxprod-grid-3")]


_CATALOG = SemiringCatalog()


def builtin_semirings():
    return _CATALOG


def load_semiring(doc):
    """Accept a catalog name or a JSON table document."""
    if isinstance(doc, Semiring):
        return doc
    if isinstance(doc, str):
        return _CATALOG.lookup(doc)
    return make_semiring(doc)


# weight-vector predicates used by the monad variants

def vec_support_at_most_one(S, vec):
    return sum(1 for v in vec if v != S.zero) <= 1


def vec_idempotent(S, vec):
    return all(S.mul[v][v] == v for v in vec)


def vec_normalised(S, vec):
    return S.sum(vec) == S.one


def vec_sub_idempotent(S, vec):
    return all(S.leq(v, S.mul[v][v]) for v in vec)


def vec_sub_normalised(S, vec):
    return S.leq(S.sum(vec), S.one)


ELEMENT_PREDICATES = {
    "idempotent": vec_idempotent,
    "normalised-row": vec_normalised,
    "sub-idempotent": vec_sub_idempotent,
    "sub-normalised": vec_sub_normalised,
    "support-at-most-one": vec_support_at_most_one,
}
