"""Interpreting terms in a concrete model."""
from __future__ import annotations

from dataclasses import fields

from ..core.expr import Env, Expr, Gen, eval_arrow
from ..core.model import Morphism
from ..core.objects import word_name
from ..errors import AssignmentMismatch


def _word(C, w):
    if w in ("I", "", [], ()):
        return ()
    try:
        return C.word(w)
    except KeyError as exc:
        raise AssignmentMismatch(str(exc.args[0])) from None


def _used(expr, sorts, gens):
    """Collect the sort names and generator names an expression mentions."""
    if isinstance(expr, Gen):
        gens.add(expr.name)
        return
    for f in fields(expr):
        v = getattr(expr, f.name)
        if isinstance(v, Expr):
            _used(v, sorts, gens)
        elif isinstance(v, tuple):
            sorts.update(x for x in v if isinstance(x, str))


def evaluate(term, assignment, C):
    """Evaluate ``term`` in model ``C``.

    ``assignment`` maps ``"sorts"`` to ``{sort: word}`` (a word is a list of
    the model's sort names) and ``"generators"`` to ``{name: arrow}``, where an
    arrow is a :class:`Morphism` or a payload in the model's JSON format.
    Only the sorts and generators the term mentions need an entry.
    """
    sig = term.signature
    sorts = assignment.get("sorts", {})
    gens = assignment.get("generators", {})
    used_sorts, used_gens = set(term.dom) | set(term.cod), set()
    _used(term.expr, used_sorts, used_gens)
    for name in used_gens:
        dom, cod = sig.gen(name)
        used_sorts.update(dom + cod)
    objects = {}
    for s in sig.sorts:
        if s not in used_sorts:
            continue
        if s not in sorts:
            raise AssignmentMismatch(f"sort {s!r} has no assigned object")
        objects[s] = _word(C, sorts[s])
    arrows = {}
    for name, (dom, cod) in sig.generators.items():
        if name not in used_gens:
            continue
        if name not in gens:
            raise AssignmentMismatch(f"generator {name!r} has no assigned arrow")
        want_dom = tuple(x for s in dom for x in objects[s])
        want_cod = tuple(x for s in cod for x in objects[s])
        f = gens[name]
        if isinstance(f, Morphism):
            if (f.dom, f.cod) != (want_dom, want_cod):
                raise AssignmentMismatch(
                    f"generator {name!r} needs {word_name(want_dom)} -> {word_name(want_cod)}, "
                    f"got {word_name(f.dom)} -> {word_name(f.cod)}")
        else:
            try:
                f = C.from_json(f, want_dom, want_cod)
            except Exception as exc:
                raise AssignmentMismatch(f"generator {name!r}: {exc}") from exc
        arrows[name] = f
    return eval_arrow(C, term.expr, Env(objects=objects, arrows=arrows))
