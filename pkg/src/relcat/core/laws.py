"""The catalog of equations and inequalities checked by the engine.

Each :class:`Law` quantifies over object variables (bound to words) and
arrow variables (bound to hom elements); its clauses compare two arrow
expressions with ``=`` or ``<=``, or ask that one expression is a valid
morphism. A guard, when present, restricts the bindings that count.
"""
from __future__ import annotations

from dataclasses import dataclass

from .expr import (Dom, Eta, Expr, Gen, Lax, MonadUnit, Mu, TArr, TObj, cocopy,
                   codischarge, copy, discard, ident, obj_term, structural_needs, sym)


@dataclass(frozen=True)
class ArrowVar:
    name: str
    dom: tuple
    cod: tuple


@dataclass(frozen=True)
class Clause:
    lhs: Expr
    rel: str
    rhs: Expr | None = None

    def __str__(self):
        if self.rel == "valid":
            return f"{self.lhs} is a morphism"
        return f"{self.lhs} {self.rel} {self.rhs}"


@dataclass(frozen=True)
class Law:
    name: str
    objects: tuple
    arrows: tuple
    clauses: tuple
    guard: tuple = ()
    summary: str = ""

    @property
    def needs(self):
        caps = set()
        for c in self.clauses + self.guard:
            caps |= structural_needs(c.lhs)
            if c.rhs is not None:
                caps |= structural_needs(c.rhs)
            if c.rel == "<=":
                caps.add("leq")
        if self.arrows:
            caps.add("homs")
        return frozenset(caps)

    @property
    def relation(self):
        return "<=" if any(c.rel == "<=" for c in self.clauses) else "="


def _arrow(spec):
    name, dom, cod = spec
    return ArrowVar(name, obj_term(dom), obj_term(cod))


LAWS: dict = {}


def law(name, objects=(), arrows=(), clauses=(), guard=(), summary=""):
    entry = Law(name, tuple(objects), tuple(_arrow(a) for a in arrows),
                tuple(Clause(*c) for c in clauses), tuple(Clause(*c) for c in guard), summary)
    LAWS[name] = entry
    return entry


def get_law(name):
    try:
        return LAWS[name]
    except KeyError:
        raise KeyError(f"unknown law {name!r}") from None


X, Y, Z, W = "X", "Y", "Z", "W"
XX = (X, X)
XY = (X, Y)
f, g, h = Gen("f"), Gen("g"), Gen("h")
I = ()

# copy structure

law("SHARE_COASSOC", [X], [], [(copy(X) >> (copy(X) @ ident(X)), "=", copy(X) >> (ident(X) @ copy(X)))],
    summary="copy is coassociative")
law("SHARE_COCOMM", [X], [], [(copy(X) >> sym(X, X), "=", copy(X))],
    summary="copy is cocommutative")
law("SHARE_MULT_TENSOR", [X, Y], [],
    [(copy(XY), "=", (copy(X) @ copy(Y)) >> (ident(X) @ sym(X, Y) @ ident(Y)))],
    summary="copy on a tensor is the interleaved tensor of copies")
law("SHARE_MULT_UNIT", [], [], [(copy(I), "=", ident(I))], summary="copy on the unit is the identity")

# discard structure

law("GARBAGE_MULT_TENSOR", [X, Y], [], [(discard(XY), "=", discard(X) @ discard(Y))],
    summary="discard on a tensor is the tensor of discards")
law("GARBAGE_MULT_UNIT", [], [], [(discard(I), "=", ident(I))], summary="discard on the unit is the identity")
law("GS_COUNIT", [X], [],
    [(copy(X) >> (ident(X) @ discard(X)), "=", ident(X)),
     (copy(X) >> (discard(X) @ ident(X)), "=", ident(X))],
    summary="discard is a counit for copy")

# functional / total arrows and naturality

_fy = [("f", X, Y)]
law("FUNCTIONAL", [X, Y], _fy, [(f >> copy(Y), "=", copy(X) >> (f @ f))], summary="f commutes with copy")
law("TOTAL", [X, Y], _fy, [(f >> discard(Y), "=", discard(X))], summary="f commutes with discard")
law("NAT_COPY", [X, Y], _fy, [(f >> copy(Y), "=", copy(X) >> (f @ f))], summary="copy is natural")
law("NAT_DISCARD", [X, Y], _fy, [(f >> discard(Y), "=", discard(X))], summary="discard is natural")
law("MARKOV_TERMINAL", [X], [("f", X, I)], [(f, "=", discard(X))],
    summary="discard is the only arrow into the unit")

# the dual structure

law("COGS_ASSOC", [X], [], [((cocopy(X) @ ident(X)) >> cocopy(X), "=", (ident(X) @ cocopy(X)) >> cocopy(X))],
    summary="cocopy is associative")
law("COGS_COMM", [X], [], [(sym(X, X) >> cocopy(X), "=", cocopy(X))], summary="cocopy is commutative")
law("COGS_MULT_TENSOR", [X, Y], [],
    [(cocopy(XY), "=", (ident(X) @ sym(Y, X) @ ident(Y)) >> (cocopy(X) @ cocopy(Y)))],
    summary="cocopy on a tensor is the interleaved tensor of cocopies")
law("COGS_MULT_UNIT", [], [], [(cocopy(I), "=", ident(I))], summary="cocopy on the unit is the identity")
law("COGARBAGE_MULT_TENSOR", [X, Y], [], [(codischarge(XY), "=", codischarge(X) @ codischarge(Y))],
    summary="codischarge on a tensor is the tensor of codischarges")
law("COGARBAGE_MULT_UNIT", [], [], [(codischarge(I), "=", ident(I))],
    summary="codischarge on the unit is the identity")
law("COGS_UNIT", [X], [],
    [((ident(X) @ codischarge(X)) >> cocopy(X), "=", ident(X)),
     ((codischarge(X) @ ident(X)) >> cocopy(X), "=", ident(X))],
    summary="codischarge is a unit for cocopy")
law("COFUNCTIONAL", [X, Y], _fy, [(cocopy(X) >> f, "=", (f @ f) >> cocopy(Y))], summary="f commutes with cocopy")
law("COTOTAL", [X, Y], _fy, [(codischarge(X) >> f, "=", codischarge(Y))], summary="f commutes with codischarge")
law("NAT_COCOPY", [X, Y], _fy, [(cocopy(X) >> f, "=", (f @ f) >> cocopy(Y))], summary="cocopy is natural")
law("NAT_CODISCHARGE", [X, Y], _fy, [(codischarge(X) >> f, "=", codischarge(Y))],
    summary="codischarge is natural")

# interaction of the two structures

law("BIALG_1", [X], [],
    [(cocopy(X) >> copy(X), "=",
      (copy(X) @ copy(X)) >> (ident(X) @ sym(X, X) @ ident(X)) >> (cocopy(X) @ cocopy(X)))],
    summary="cocopy then copy equals copies, swap, cocopies")
law("BIALG_2", [X], [], [(cocopy(X) >> discard(X), "=", discard(X) @ discard(X))],
    summary="discard after cocopy discards both inputs")
law("BIALG_3", [X], [], [(codischarge(X) >> copy(X), "=", codischarge(X) @ codischarge(X))],
    summary="copy after codischarge is two codischarges")
law("BIALG_4", [X], [], [(codischarge(X) >> discard(X), "=", ident(I))],
    summary="codischarge then discard is the unit identity")
law("FROBENIUS", [X], [],
    [((copy(X) @ ident(X)) >> (ident(X) @ cocopy(X)), "=", cocopy(X) >> copy(X)),
     ((ident(X) @ copy(X)) >> (cocopy(X) @ ident(X)), "=", cocopy(X) >> copy(X))],
    summary="Frobenius law")
law("SPECIAL", [X], [], [(copy(X) >> cocopy(X), "=", ident(X))], summary="copy then cocopy is the identity")
law("CONNECTED", [X], [], [(discard(X) >> codischarge(X), "=", ident(X))],
    summary="discard then codischarge is the identity")
law("HOPF", [X], [], [(copy(X) >> cocopy(X), "=", discard(X) >> codischarge(X))],
    summary="the identity is an antipode")

# positivity and restriction

_fg = [("f", X, Y), ("g", Y, W)]
law("POSITIVITY", [X, Y, W], _fg,
    [(f >> copy(Y) >> (ident(Y) @ g), "=", copy(X) >> (f @ (f >> g)))],
    guard=[((f >> g) >> copy(W), "=", copy(X) >> ((f >> g) @ (f >> g)))],
    summary="if f;g is functional then f;copy;(id*g) = copy;(f*(f;g))")
law("R1", [X, Y], _fy, [(Dom(f) >> f, "=", f)], summary="dom(f);f = f")
_fg_same = [("f", X, Y), ("g", X, W)]
law("R2", [X, Y, W], _fg_same, [(Dom(f) >> Dom(g), "=", Dom(g) >> Dom(f))],
    summary="domains commute")
law("R3", [X, Y, W], _fg_same, [(Dom(Dom(f) >> g), "=", Dom(f) >> Dom(g))],
    summary="dom(dom(f);g) = dom(f);dom(g)")
law("R4", [X, Y, W], _fg, [(f >> Dom(g), "=", Dom(f >> g) >> f)], summary="f;dom(g) = dom(f;g);f")
law("RESTR_TERMINAL", [X, Y], _fy,
    [(Dom(discard(X)), "=", ident(X)),
     (discard(I), "=", ident(I)),
     (f >> discard(Y), "=", Dom(f) >> discard(X))],
    summary="discard is total and f;discard = dom(f);discard")
_p = lambda a, b: ident(a) @ discard(b)  # noqa: E731
_q = lambda a, b: discard(a) @ ident(b)  # noqa: E731
law("RP1", [X], [], [(copy(X) >> _p(X, X), "=", ident(X))], summary="first projection after copy")
law("RP2", [X], [], [(copy(X) >> _q(X, X), "=", ident(X))], summary="second projection after copy")
law("RP3", [X, Y], [], [(copy(XY) >> (_p(X, Y) @ _q(X, Y)), "=", ident(XY))],
    summary="pairing the projections is the identity")
_fg_par = [("f", X, Z), ("g", Y, W)]
law("RP4", [X, Y, Z, W], _fg_par,
    [((f @ g) >> _p(Z, W), "=", (Dom(f) @ Dom(g)) >> _p(X, Y) >> f)],
    summary="first projection of f*g")
law("RP5", [X, Y, Z, W], _fg_par,
    [((f @ g) >> _q(Z, W), "=", (Dom(f) @ Dom(g)) >> _q(X, Y) >> g)],
    summary="second projection of f*g")
law("RP6", [X, Y], _fy, [(Dom(f) >> copy(X) >> (f @ f), "=", f >> copy(Y))],
    summary="copy is natural on the domain of f")
law("RESTR_TENSOR", [X, Y, Z, W], _fg_par, [(Dom(f @ g), "=", Dom(f) @ Dom(g))],
    summary="dom is monoidal")

# preorder enrichment

_fff = [("f", X, Y), ("g", X, Y), ("h", X, Y)]
law("LEQ_REFL", [X, Y], _fy, [(f, "<=", f)], summary="reflexive")
law("LEQ_TRANS", [X, Y], _fff, [(f, "<=", h)], guard=[(f, "<=", g), (g, "<=", h)], summary="transitive")
law("LEQ_ANTISYM", [X, Y], [("f", X, Y), ("g", X, Y)], [(f, "=", g)], guard=[(f, "<=", g), (g, "<=", f)],
    summary="antisymmetric")
law("LEQ_COMPOSE_LEFT", [X, Y, Z], [("f", X, Y), ("g", X, Y), ("h", Y, Z)], [(f >> h, "<=", g >> h)],
    guard=[(f, "<=", g)], summary="composition is monotone on the left")
law("LEQ_COMPOSE_RIGHT", [X, Y, Z], [("h", X, Y), ("f", Y, Z), ("g", Y, Z)], [(h >> f, "<=", h >> g)],
    guard=[(f, "<=", g)], summary="composition is monotone on the right")
law("LEQ_TENSOR_LEFT", [X, Y, Z], [("f", X, Y), ("g", X, Y), ("h", Z, Z)], [(f @ h, "<=", g @ h)],
    guard=[(f, "<=", g)], summary="tensor is monotone on the left")
law("LEQ_TENSOR_RIGHT", [X, Y, Z], [("h", Z, Z), ("f", X, Y), ("g", X, Y)], [(h @ f, "<=", h @ g)],
    guard=[(f, "<=", g)], summary="tensor is monotone on the right")

law("OPLAX_COPY", [X, Y], _fy, [(f >> copy(Y), "<=", copy(X) >> (f @ f))], summary="f is oplax copyable")
law("OPLAX_DISCARD", [X, Y], _fy, [(f >> discard(Y), "<=", discard(X))], summary="f is oplax discardable")
law("OPLAX_COCOPY", [X, Y], _fy, [(cocopy(X) >> f, "<=", (f @ f) >> cocopy(Y))],
    summary="f is oplax cocopyable")
law("OPLAX_CODISCHARGE", [X, Y], _fy, [(codischarge(X) >> f, "<=", codischarge(Y))],
    summary="f is oplax codischargeable")
law("OPLAX_RESTRICTION_COND", [X, Y, W], _fg,
    [(copy(X) >> (f @ (f >> g >> discard(W))), "<=", f >> copy(Y) >> (ident(Y) @ (g >> discard(W))))],
    summary="dom(f;g);f <= f;dom(g)")
law("LAX_SPECIAL", [X], [], [(ident(X), "<=", copy(X) >> cocopy(X))], summary="id <= copy;cocopy")
law("LAX_CONNECTED", [X], [], [(ident(X), "<=", discard(X) >> codischarge(X))],
    summary="id <= discard;codischarge")
_adj = [("f", X, Y), ("r", Y, X)]
law("ADJ_UNIT", [X, Y], _adj, [(ident(X), "<=", f >> Gen("r"))], summary="id <= f;r")
law("ADJ_COUNIT", [X, Y], _adj, [(Gen("r") >> f, "<=", ident(Y))], summary="r;f <= id")
law("CB_RIGHT_ADJ_COPY", [X], [],
    [(ident(X), "<=", copy(X) >> cocopy(X)), (cocopy(X) >> copy(X), "<=", ident(XX))],
    summary="cocopy is right adjoint to copy")
law("CB_RIGHT_ADJ_DISCARD", [X], [],
    [(ident(X), "<=", discard(X) >> codischarge(X)), (codischarge(X) >> discard(X), "<=", ident(I))],
    summary="codischarge is right adjoint to discard")
law("CB_LAX_INEQS", [X], [],
    [(cocopy(X) >> copy(X), "<=",
      (copy(X) @ copy(X)) >> (ident(X) @ sym(X, X) @ ident(X)) >> (cocopy(X) @ cocopy(X))),
     (cocopy(X) >> discard(X), "<=", discard(X) @ discard(X)),
     (codischarge(X) >> copy(X), "<=", codischarge(X) @ codischarge(X)),
     (codischarge(X) >> discard(X), "<=", ident(I))],
    summary="lax bimonoid inequalities")
law("CB_EXTRA_INEQ", [X], [], [(cocopy(X) >> copy(X), "<=", ident(XX))], summary="cocopy;copy <= id")

# monads: functor, unit, multiplication, lax structure

TX, TY = TObj((X,)), TObj((Y,))
TTX = TObj((TX,))
law("T_FUNCTOR_ID", [X], [], [(TArr(ident(X)), "=", ident(TX))], summary="T preserves identities")
law("T_FUNCTOR_COMP", [X, Y, Z], [("f", X, Y), ("g", Y, Z)], [(TArr(f >> g), "=", TArr(f) >> TArr(g))],
    summary="T preserves composition")
law("ETA_NAT", [X, Y], _fy, [(f >> Eta((Y,)), "=", Eta((X,)) >> TArr(f))], summary="eta is natural")
law("MU_NAT", [X, Y], _fy, [(TArr(TArr(f)) >> Mu((Y,)), "=", Mu((X,)) >> TArr(f))], summary="mu is natural")
law("MONAD_UNIT_LEFT", [X], [], [(Eta((TX,)) >> Mu((X,)), "=", ident(TX))], summary="eta_T;mu = id")
law("MONAD_UNIT_RIGHT", [X], [], [(TArr(Eta((X,))) >> Mu((X,)), "=", ident(TX))], summary="T(eta);mu = id")
law("MONAD_ASSOC", [X], [], [(TArr(Mu((X,))) >> Mu((X,)), "=", Mu((TX,)) >> Mu((X,)))],
    summary="mu is associative")
law("LAX_NAT", [X, Y, Z, W], [("f", X, Z), ("g", Y, W)],
    [((TArr(f) @ TArr(g)) >> Lax((Z,), (W,)), "=", Lax((X,), (Y,)) >> TArr(f @ g))],
    summary="c is natural")
law("LAX_ASSOC", [X, Y, Z], [],
    [((Lax((X,), (Y,)) @ ident(TObj((Z,)))) >> Lax((X, Y), (Z,)), "=",
      (ident(TX) @ Lax((Y,), (Z,))) >> Lax((X,), (Y, Z)))],
    summary="c is associative")
law("LAX_UNIT_LEFT", [X], [], [((MonadUnit() @ ident(TX)) >> Lax((), (X,)), "=", ident(TX))],
    summary="u is a left unit for c")
law("LAX_UNIT_RIGHT", [X], [], [((ident(TX) @ MonadUnit()) >> Lax((X,), ()), "=", ident(TX))],
    summary="u is a right unit for c")
law("LAX_SYM", [X, Y], [], [(sym(TX, TY) >> Lax((Y,), (X,)), "=", Lax((X,), (Y,)) >> TArr(sym(X, Y)))],
    summary="c commutes with the symmetry")
law("UNIT_IS_ETA", [], [], [(MonadUnit(), "=", Eta(()))], summary="u = eta_I")
law("SMM_ETA", [X, Y], [], [((Eta((X,)) @ Eta((Y,))) >> Lax((X,), (Y,)), "=", Eta(XY))],
    summary="eta is monoidal")
law("SMM_MU", [X, Y], [],
    [((Mu((X,)) @ Mu((Y,))) >> Lax((X,), (Y,)), "=",
      Lax((TX,), (TY,)) >> TArr(Lax((X,), (Y,))) >> Mu(XY))],
    summary="mu is monoidal")
law("T_WELL_DEFINED", [X, Y], _fy,
    [(Eta((X,)), "valid"), (Mu((X,)), "valid"), (Lax((X,), (Y,)), "valid"), (TArr(f), "valid")],
    summary="structure maps are morphisms of the base")
law("T_ENRICHED", [X, Y], [("f", X, Y), ("g", X, Y)], [(TArr(f), "<=", TArr(g))], guard=[(f, "<=", g)],
    summary="T is monotone on homs")

# monad classes

law("AFFINE", [X], [], [(TArr(discard(X)), "=", discard(TX) >> MonadUnit())], summary="T(discard) = discard;u")
law("RELEVANT", [X], [], [(TArr(copy(X)), "=", copy(TX) >> Lax((X,), (X,)))], summary="T(copy) = copy;c")
law("COLAX_AFFINE", [X], [], [(TArr(discard(X)), "<=", discard(TX) >> MonadUnit())],
    summary="T(discard) <= discard;u")
law("COLAX_RELEVANT", [X], [], [(TArr(copy(X)), "<=", copy(TX) >> Lax((X,), (X,)))],
    summary="T(copy) <= copy;c")
law("COAFFINE", [X], [], [(MonadUnit() >> TArr(codischarge(X)), "=", codischarge(TX))],
    summary="u;T(codischarge) = codischarge")
law("CORELEVANT", [X], [], [(Lax((X,), (X,)) >> TArr(cocopy(X)), "=", cocopy(TX))],
    summary="c;T(cocopy) = cocopy")

MONAD_LAWS = ("T_FUNCTOR_ID", "T_FUNCTOR_COMP", "ETA_NAT", "MU_NAT", "MONAD_UNIT_LEFT", "MONAD_UNIT_RIGHT",
              "MONAD_ASSOC", "LAX_NAT", "LAX_ASSOC", "LAX_UNIT_LEFT", "LAX_UNIT_RIGHT", "LAX_SYM",
              "UNIT_IS_ETA", "SMM_ETA", "SMM_MU")
ENRICHED_MONAD_LAWS = ("T_WELL_DEFINED", "T_ENRICHED")
MONAD_CLASSES = {
    "affine": ("AFFINE",),
    "relevant": ("RELEVANT",),
    "gs": ("AFFINE", "RELEVANT"),
    "colax-affine": ("COLAX_AFFINE",),
    "colax-relevant": ("COLAX_RELEVANT",),
    "colax-gs": ("COLAX_AFFINE", "COLAX_RELEVANT"),
    "coaffine": ("COAFFINE",),
    "corelevant": ("CORELEVANT",),
}
