"""Brute-force reference computations used to derive expected values.

Nothing here imports relcat: every function works on plain Python data so the
library is checked against an independent implementation.  Element encodings
follow the library's conventions: an element of a product word is the flat
index ``x * |Y| + y``, and an element of a sum word is its block offset.
"""
from __future__ import annotations

import itertools


# relations ------------------------------------------------------------------

def all_relations(n, m):
    pairs = [(x, y) for x in range(n) for y in range(m)]
    for mask in range(1 << len(pairs)):
        yield frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)


def rel_compose(a, b):
    return frozenset((x, z) for x, y in a for y2, z in b if y == y2)


def rel_product(a, b, n2, m2):
    """``a ⊗ b`` where ``b : n2 -> m2``."""
    return frozenset((x1 * n2 + x2, y1 * m2 + y2) for (x1, y1) in a for (x2, y2) in b)


def rel_identity(n):
    return frozenset((x, x) for x in range(n))


def rel_copy(n):
    return frozenset((x, x * n + x) for x in range(n))


def rel_discard(n):
    return frozenset((x, 0) for x in range(n))


def converse(a):
    return frozenset((y, x) for x, y in a)


def is_function_graph(a, n, m):
    return all(sum(1 for (x2, _) in a if x2 == x) == 1 for x in range(n))


def is_partial_function_graph(a, n):
    return all(sum(1 for (x2, _) in a if x2 == x) <= 1 for x in range(n))


def is_total_relation(a, n):
    return all(any(x2 == x for (x2, _) in a) for x in range(n))


def all_functions(n, m):
    return list(itertools.product(range(m), repeat=n))


def all_partial_functions(n, m):
    return list(itertools.product([None] + list(range(m)), repeat=n))


def graph(f):
    return frozenset((x, y) for x, y in enumerate(f) if y is not None)


# semirings ------------------------------------------------------------------

def semiring_first_violation(n, add, mul, zero, one):
    """The first failing semiring law as ``(law, triple)`` or None, by full scan."""
    r = range(n)
    for a, b, c in itertools.product(r, r, r):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return "add_assoc", (a, b, c)
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return "mul_assoc", (a, b, c)
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return "distrib", (a, b, c)
    for a, b in itertools.product(r, r):
        if add[a][b] != add[b][a]:
            return "add_comm", (a, b)
        if mul[a][b] != mul[b][a]:
            return "mul_comm", (a, b)
    for a in r:
        if add[a][zero] != a:
            return "add_unit", (a,)
        if mul[a][one] != a:
            return "mul_unit", (a,)
        if mul[a][zero] != zero:
            return "annihilation", (a,)
    return None


def canonical_preorder(n, add):
    return frozenset((a, b) for a in range(n) for b in range(n) if any(add[a][c] == b for c in range(n)))


def matrix_product(add, mul, zero, a, b):
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for z in range(m):
            acc = zero
            for y, w in enumerate(row):
                acc = add[acc][mul[w][b[y][z]]]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


# spans ----------------------------------------------------------------------

def span_pullback(s, t):
    """Apex elements of ``t ∘ s`` as (left, right) pairs, with multiplicity."""
    return sorted((ls, rt) for (ls, rs) in s for (lt, rt) in t if rs == lt)


def spans_isomorphic(s, t):
    """Brute-force search for an apex bijection commuting with both legs."""
    s, t = list(s), list(t)
    if len(s) != len(t):
        return False
    return any(all(s[i] == t[p[i]] for i in range(len(s))) for p in itertools.permutations(range(len(t))))


def span_mediator_exists(s, t):
    """Whether some function apex(s) -> apex(t) commutes with both legs."""
    s, t = list(s), list(t)
    return all(any(a == b for b in t) for a in s)


def span_image(s):
    return frozenset(s)


# monads ---------------------------------------------------------------------

def subsets(n):
    return [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]


def downsets(n, leq):
    return [u for u in subsets(n) if all(a in u for b in u for a in range(n) if leq(a, b))]


def hoare_leq(u, v, leq):
    return all(any(leq(a, b) for b in v) for a in u)


# term graphs ----------------------------------------------------------------

def graphs_isomorphic(g1, g2):
    """Brute-force isomorphism of term graphs given as (nodes, outputs)."""
    nodes1, out1 = g1
    nodes2, out2 = g2
    if len(nodes1) != len(nodes2):
        return False
    n = len(nodes1)
    for perm in itertools.permutations(range(n)):
        def wire(w):
            return w if w[0] == "in" else ("node", perm[w[1]], w[2])
        mapped = [None] * n
        for j, (label, ins, k) in enumerate(nodes1):
            mapped[perm[j]] = (label, tuple(wire(w) for w in ins), k)
        if mapped == list(nodes2) and [wire(w) for w in out1] == list(out2):
            return True
    return False
