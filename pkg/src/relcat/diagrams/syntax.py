"""Signatures and the flat text syntax of gs-monoidal terms.

Grammar::

    term  := par (';' par)*
    par   := atom ('*' atom)*
    atom  := '(' term ')' | generator | id_W | copy_W | discard_W | sym_{W,W}

A word ``W`` is ``I``, a run of sort names (split by longest match, so
``AB`` is ``A B`` when both are sorts), or ``{A B}`` with explicit spaces.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..core.expr import Copy, Discard, Gen, Id, Par, Seq, Sym
from ..errors import ArityMismatch, TermSyntaxError, UnknownName

STRUCTURAL = ("id", "copy", "discard", "sym")


@dataclass(frozen=True)
class Signature:
    sorts: tuple
    generators: dict

    def gen(self, name):
        try:
            return self.generators[name]
        except KeyError:
            raise UnknownName(f"unknown generator {name!r}") from None

    def check_word(self, word):
        for s in word:
            if s not in self.sorts:
                raise UnknownName(f"unknown sort {s!r}")
        return tuple(word)

    def to_text(self):
        lines = [f"sort {s}" for s in self.sorts]
        for name, (dom, cod) in self.generators.items():
            lines.append(f"gen {name} : {' '.join(dom) or 'I'} -> {' '.join(cod) or 'I'}")
        return "\n".join(lines) + "\n"


def make_signature(sorts, generators):
    """``generators`` maps a name to ``(dom, cod)`` lists of sort names."""
    sig = Signature(tuple(sorts), {})
    if len(set(sig.sorts)) != len(sig.sorts):
        raise TermSyntaxError("duplicate sort name", 0)
    gens = {}
    for name, (dom, cod) in generators.items():
        if _clashes(name, sig.sorts):
            raise TermSyntaxError(f"generator name {name!r} clashes with a sort or structural arrow", 0)
        gens[name] = (sig.check_word(dom), sig.check_word(cod))
    return Signature(sig.sorts, gens)


def _clashes(name, sorts):
    return name in sorts or ("_" in name and name.split("_")[0] in STRUCTURAL)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def parse_signature(text):
    """Read lines ``sort A`` and ``gen f : A B -> C``; ``#`` starts a comment."""
    sorts, gens = [], {}
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        pos = offset
        offset += len(line)
        if not body:
            continue
        head, _, rest = body.partition(" ")
        rest = rest.strip()
        if head == "sort":
            for name in rest.split():
                if not _NAME.fullmatch(name):
                    raise TermSyntaxError(f"bad sort name {name!r}", pos)
                if name in sorts:
                    raise TermSyntaxError(f"duplicate sort {name!r}", pos)
                sorts.append(name)
        elif head == "gen":
            name, colon, typ = rest.partition(":")
            name = name.strip()
            if not colon or "->" not in typ or not _NAME.fullmatch(name):
                raise TermSyntaxError("expected 'gen NAME : DOM -> COD'", pos)
            if name in gens:
                raise TermSyntaxError(f"duplicate generator {name!r}", pos)
            if _clashes(name, sorts):
                raise TermSyntaxError(f"generator name {name!r} clashes with a sort or structural arrow", pos)
            dom, cod = (side.split() for side in typ.split("->", 1))
            for s in dom + cod:
                if s != "I" and s not in sorts:
                    raise UnknownName(f"unknown sort {s!r}", pos)
            gens[name] = ([s for s in dom if s != "I"], [s for s in cod if s != "I"])
        else:
            raise TermSyntaxError(f"expected 'sort' or 'gen', got {head!r}", pos)
    return make_signature(sorts, gens)


@dataclass(frozen=True)
class DiagramTerm:
    """A typechecked term: the expression plus its domain and codomain words."""

    expr: object
    dom: tuple
    cod: tuple
    signature: Signature

    def __str__(self):
        return render(self.expr)


def split_word(sig, text, pos=0):
    """Split a run of sort names by longest match."""
    text = text.strip()
    if text in ("", "I"):
        return ()
    if " " in text or "," in text:
        out = []
        for part in text.replace(",", " ").split():
            out.extend(split_word(sig, part, pos))
        return tuple(out)
    out = []
    i = 0
    names = sorted(sig.sorts, key=len, reverse=True)
    while i < len(text):
        for n in names:
            if text.startswith(n, i):
                out.append(n)
                i += len(n)
                break
        else:
            raise UnknownName(f"cannot read {text[i:]!r} as sort names", pos + i)
    return tuple(out)


class _Parser:
    def __init__(self, sig, text):
        self.sig = sig
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise TermSyntaxError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def term(self):
        node = self.par()
        while self.peek() == ";":
            self.pos += 1
            node = Seq(node, self.par())
        return node

    def par(self):
        node = self.atom()
        while self.peek() in ("*", "⊗"):
            self.pos += 1
            node = Par(node, self.atom())
        return node

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.term()
            self.take(")")
            return node
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.error("expected a generator, a structural arrow or '('" if ch else "unexpected end of term")
        start = self.pos
        name = m.group(0)
        if name in self.sig.generators:
            self.pos = m.end()
            return Gen(name)
        head, sep, tail = name.partition("_")
        if head in STRUCTURAL and sep:
            self.pos = start + len(head) + 1
            if self.peek() == "{" and not tail:
                self.pos += 1
                close = self.text.find("}", self.pos)
                if close < 0:
                    self.error("unclosed '{'")
                body = self.text[self.pos:close]
                self.pos = close + 1
            else:
                body = tail
                self.pos = m.end()
            return self.structural(head, body, start)
        if head in STRUCTURAL and name == head:
            self.error(f"{head} needs an object, as in {head}_A")
        raise UnknownName(f"unknown generator {name!r}", start)

    def structural(self, head, body, start):
        if head == "sym":
            if "," in body:
                left, right = body.split(",", 1)
                a, b = split_word(self.sig, left, start), split_word(self.sig, right, start)
            else:
                word = split_word(self.sig, body, start)
                if len(word) != 2:
                    raise TermSyntaxError("write sym_{A,B} when a side has several sorts", start)
                a, b = word[:1], word[1:]
            return Sym(a, b)
        word = split_word(self.sig, body, start)
        return {"id": Id, "copy": Copy, "discard": Discard}[head](word)


def typecheck(sig, expr):
    """(dom, cod) of ``expr``; raises ArityMismatch on an ill-typed composite."""
    if isinstance(expr, Gen):
        return sig.gen(expr.name)
    if isinstance(expr, Id):
        w = sig.check_word(expr.obj)
        return w, w
    if isinstance(expr, Sym):
        a, b = sig.check_word(expr.left), sig.check_word(expr.right)
        return a + b, b + a
    if isinstance(expr, Copy):
        w = sig.check_word(expr.obj)
        return w, w + w
    if isinstance(expr, Discard):
        return sig.check_word(expr.obj), ()
    if isinstance(expr, Seq):
        d1, c1 = typecheck(sig, expr.first)
        d2, c2 = typecheck(sig, expr.second)
        if c1 != d2:
            raise ArityMismatch(f"cannot compose {render(expr.first)} : {_w(d1)} -> {_w(c1)} with "
                                f"{render(expr.second)} : {_w(d2)} -> {_w(c2)}",
                                subterm=render(expr), expected=c1, actual=d2)
        return d1, c2
    if isinstance(expr, Par):
        d1, c1 = typecheck(sig, expr.left)
        d2, c2 = typecheck(sig, expr.right)
        return d1 + d2, c1 + c2
    raise ArityMismatch(f"{expr!r} is not allowed in a gs term", subterm=repr(expr))


def _w(word):
    return " ".join(word) or "I"


def parse_term(sig, text):
    if isinstance(sig, str):
        sig = parse_signature(sig)
    p = _Parser(sig, text)
    expr = p.term()
    if p.peek():
        p.error(f"unexpected {p.peek()!r}")
    dom, cod = typecheck(sig, expr)
    return DiagramTerm(expr, dom, cod, sig)


def term_from_expr(sig, expr):
    dom, cod = typecheck(sig, expr)
    return DiagramTerm(expr, dom, cod, sig)


def parse(signature_text, term_text):
    """Parse a signature and a term in one go."""
    sig = signature_text if isinstance(signature_text, Signature) else parse_signature(signature_text)
    return parse_term(sig, term_text)


def _word_text(word):
    if not word:
        return "I"
    return "{" + " ".join(word) + "}" if len(word) > 1 else word[0]


def render(expr):
    """Text of an expression that parses back to the same expression."""
    if isinstance(expr, Gen):
        return expr.name
    if isinstance(expr, Id):
        return f"id_{_word_text(expr.obj)}"
    if isinstance(expr, Copy):
        return f"copy_{_word_text(expr.obj)}"
    if isinstance(expr, Discard):
        return f"discard_{_word_text(expr.obj)}"
    if isinstance(expr, Sym):
        return "sym_{" + (" ".join(expr.left) or "I") + "," + (" ".join(expr.right) or "I") + "}"
    if isinstance(expr, Seq):
        return f"{render(expr.first)} ; {render(expr.second)}"
    if isinstance(expr, Par):
        parts = []
        for sub in (expr.left, expr.right):
            t = render(sub)
            parts.append(f"({t})" if isinstance(sub, Seq) else t)
        return " * ".join(parts)
    return repr(expr)
