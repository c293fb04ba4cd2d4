"""Random terms, and random rewrites by the gs-monoidal axioms.

:func:`random_term` stacks layers ``id * op * id`` on a starting word.
:func:`rewrite` applies one randomly chosen axiom instance somewhere in a
term; the result denotes the same free arrow.  :func:`mutate` makes a change
that is *not* an axiom instance (naturality of copy or discard, swapping a
generator), which usually changes the denoted arrow.
"""
from __future__ import annotations

import random

from ..core.expr import Copy, Discard, Gen, Id, Par, Seq, Sym
from .syntax import DiagramTerm, make_signature, typecheck

DEFAULT_SIGNATURE = make_signature(
    ["A", "B"],
    {"f": (["A"], ["B"]), "g": (["B"], ["A"]), "h": (["A", "B"], ["A"]),
     "k": (["A"], ["A", "B"]), "c": ([], ["A"]), "e": (["B"], [])})


def _pad(before, op, after):
    e = op
    if before:
        e = Par(Id(tuple(before)), e)
    if after:
        e = Par(e, Id(tuple(after)))
    return e


def random_term(sig=DEFAULT_SIGNATURE, rng=None, dom=None, layers=4, max_width=4):
    """A well-typed random term with ``layers`` layers."""
    rng = rng or random.Random(0)
    word = tuple(dom) if dom is not None else tuple(rng.choice(sig.sorts) for _ in range(rng.randint(0, 2)))
    start = word
    expr = Id(word)
    for _ in range(layers):
        choices = []
        for name, (gd, gc) in sig.generators.items():
            for i in range(len(word) - len(gd) + 1):
                if word[i:i + len(gd)] == gd and len(word) - len(gd) + len(gc) <= max_width:
                    choices.append((i, len(gd), Gen(name), gc))
        for i in range(len(word)):
            choices.append((i, 1, Discard(word[i:i + 1]), ()))
            if len(word) < max_width:
                choices.append((i, 1, Copy(word[i:i + 1]), word[i:i + 1] * 2))
            if i + 1 < len(word):
                choices.append((i, 2, Sym(word[i:i + 1], word[i + 1:i + 2]), (word[i + 1], word[i])))
        if not choices:
            break
        i, n, op, out = rng.choice(choices)
        expr = Seq(expr, _pad(word[:i], op, word[i + n:]))
        word = word[:i] + out + word[i + n:]
    return DiagramTerm(expr, start, word, sig)


def _subterms(e, path=()):
    yield path, e
    if isinstance(e, Seq):
        yield from _subterms(e.first, path + (0,))
        yield from _subterms(e.second, path + (1,))
    elif isinstance(e, Par):
        yield from _subterms(e.left, path + (0,))
        yield from _subterms(e.right, path + (1,))


def _replace(e, path, new):
    if not path:
        return new
    head, rest = path[0], path[1:]
    if isinstance(e, Seq):
        return Seq(_replace(e.first, rest, new), e.second) if head == 0 else Seq(e.first, _replace(e.second, rest, new))
    return Par(_replace(e.left, rest, new), e.right) if head == 0 else Par(e.left, _replace(e.right, rest, new))


def _axiom_instances(sig, e):
    """Terms equal to ``e`` by one gs-monoidal axiom applied at the root."""
    dom, cod = typecheck(sig, e)
    out = [Seq(Id(dom), e), Seq(e, Id(cod)),
           Seq(Copy(dom), Par(e, Discard(dom))),
           Seq(Seq(Copy(dom), Par(Id(dom), Discard(dom))), e)]
    if isinstance(e, Copy) and len(e.obj) >= 2:
        a, b = e.obj[:1], e.obj[1:]
        out.append(Seq(Par(Copy(a), Copy(b)), Par(Par(Id(a), Sym(a, b)), Id(b))))
    if isinstance(e, Copy):
        w = e.obj
        out.append(Seq(e, Sym(w, w)))
        out.append(Seq(Seq(e, Par(e, Id(w))), Par(Par(Id(w), Discard(w)), Id(w))))
    if isinstance(e, Discard) and len(e.obj) >= 2:
        out.append(Par(Discard(e.obj[:1]), Discard(e.obj[1:])))
    if isinstance(e, (Copy, Discard, Id)) and not e.obj:
        out.append(Id(()))
    if isinstance(e, Sym):
        out.append(Seq(Seq(e, Sym(e.right, e.left)), e))
        if len(e.left) >= 2:
            a, b = e.left[:1], e.left[1:]
            out.append(Seq(Par(Id(a), Sym(b, e.right)), Par(Sym(a, e.right), Id(b))))
    if isinstance(e, Par):
        (d1, c1), (d2, c2) = typecheck(sig, e.left), typecheck(sig, e.right)
        out.append(Seq(Par(e.left, Id(d2)), Par(Id(c1), e.right)))
        out.append(Seq(Par(Id(d1), e.right), Par(e.left, Id(c2))))
        out.append(Seq(Seq(Sym(d1, d2), Par(e.right, e.left)), Sym(c2, c1)))
        if isinstance(e.left, Par):
            out.append(Par(e.left.left, Par(e.left.right, e.right)))
    if isinstance(e, Seq):
        if isinstance(e.first, Seq):
            out.append(Seq(e.first.first, Seq(e.first.second, e.second)))
        if isinstance(e.second, Seq):
            out.append(Seq(Seq(e.first, e.second.first), e.second.second))
        if isinstance(e.first, Id):
            out.append(e.second)
        if isinstance(e.second, Id):
            out.append(e.first)
        if isinstance(e.first, Copy) and isinstance(e.second, Par):
            w = e.first.obj
            l, r = e.second.left, e.second.right
            if l == Copy(w) and r == Id(w):
                out.append(Seq(e.first, Par(Id(w), Copy(w))))
            if l == Id(w) and r == Copy(w):
                out.append(Seq(e.first, Par(Copy(w), Id(w))))
        if isinstance(e.first, Par) and isinstance(e.second, Par):
            if typecheck(sig, e.first.left)[1] == typecheck(sig, e.second.left)[0]:
                out.append(Par(Seq(e.first.left, e.second.left), Seq(e.first.right, e.second.right)))
    return out


def rewrite(term, rng=None, steps=1):
    """Apply ``steps`` random axiom instances; the result denotes the same free arrow."""
    rng = rng or random.Random(0)
    sig, expr = term.signature, term.expr
    for _ in range(steps):
        sites = list(_subterms(expr))
        path, sub = rng.choice(sites)
        options = _axiom_instances(sig, sub)
        expr = _replace(expr, path, rng.choice(options))
    dom, cod = typecheck(sig, expr)
    assert (dom, cod) == (term.dom, term.cod)
    return DiagramTerm(expr, dom, cod, sig)


def mutate(term, rng=None):
    """A same-typed term obtained by a change outside the axioms, or None."""
    rng = rng or random.Random(0)
    sig, expr = term.signature, term.expr
    options = []
    for path, sub in _subterms(expr):
        if isinstance(sub, Gen):
            gd, gc = sig.gen(sub.name)
            for other, (od, oc) in sig.generators.items():
                if other != sub.name and (od, oc) == (gd, gc):
                    options.append((path, Gen(other)))
            options.append((path, Seq(Seq(Copy(gd), Par(sub, sub)), Par(Id(gc), Discard(gc)))))
            if not gc:
                options.append((path, Discard(gd)))
    if not options:
        return None
    path, new = rng.choice(options)
    expr = _replace(expr, path, new)
    dom, cod = typecheck(sig, expr)
    return DiagramTerm(expr, dom, cod, sig)
