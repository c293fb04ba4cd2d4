"""Arrow expressions: syntax trees of structural composites and their evaluation.

Object positions hold *object terms*: tuples whose items are sorts, names
looked up in the evaluation environment, or :class:`TObj` applications of a
monad. ``a >> b`` is sequential composition (first ``a``) and ``a @ b`` is
the tensor.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import TypeMismatch, UnsupportedStructural
from .model import Morphism
from .objects import Sort, word_name


@dataclass(frozen=True)
class TObj:
    """The monad applied to an object term."""

    inner: tuple

    def __str__(self):
        return f"T({obj_str(self.inner)})"


def obj_term(x):
    """Normalise a user-supplied object term to a tuple."""
    if isinstance(x, (str, Sort, TObj)):
        return (x,)
    return tuple(x)


def obj_str(term):
    if not term:
        return "I"
    return "".join(str(t) if not isinstance(t, Sort) else t.name for t in term)


class Expr:
    def __rshift__(self, other):
        return Seq(self, other)

    def __matmul__(self, other):
        return Par(self, other)


@dataclass(frozen=True)
class Gen(Expr):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Leaf(Expr):
    morphism: Morphism = field(compare=True)
    label: str = "m"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Id(Expr):
    obj: tuple

    def __str__(self):
        return f"id_{obj_str(self.obj)}"


@dataclass(frozen=True)
class Sym(Expr):
    left: tuple
    right: tuple

    def __str__(self):
        return f"sym_{{{obj_str(self.left)},{obj_str(self.right)}}}"


@dataclass(frozen=True)
class Copy(Expr):
    obj: tuple

    def __str__(self):
        return f"copy_{obj_str(self.obj)}"


@dataclass(frozen=True)
class Discard(Expr):
    obj: tuple

    def __str__(self):
        return f"discard_{obj_str(self.obj)}"


@dataclass(frozen=True)
class Cocopy(Expr):
    obj: tuple

    def __str__(self):
        return f"cocopy_{obj_str(self.obj)}"


@dataclass(frozen=True)
class Codischarge(Expr):
    obj: tuple

    def __str__(self):
        return f"codischarge_{obj_str(self.obj)}"


@dataclass(frozen=True)
class Seq(Expr):
    first: Expr
    second: Expr

    def __str__(self):
        return f"({self.first} ; {self.second})"


@dataclass(frozen=True)
class Par(Expr):
    left: Expr
    right: Expr

    def __str__(self):
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Dom(Expr):
    """copy ; (id * (e ; discard)): the domain endo-arrow of ``e``."""

    inner: Expr

    def __str__(self):
        return f"dom({self.inner})"


@dataclass(frozen=True)
class TArr(Expr):
    inner: Expr

    def __str__(self):
        return f"T({self.inner})"


@dataclass(frozen=True)
class Eta(Expr):
    obj: tuple

    def __str__(self):
        return f"eta_{obj_str(self.obj)}"


@dataclass(frozen=True)
class Mu(Expr):
    obj: tuple

    def __str__(self):
        return f"mu_{obj_str(self.obj)}"


@dataclass(frozen=True)
class Lax(Expr):
    left: tuple
    right: tuple

    def __str__(self):
        return f"c_{{{obj_str(self.left)},{obj_str(self.right)}}}"


@dataclass(frozen=True)
class MonadUnit(Expr):
    def __str__(self):
        return "u"


# short constructors used by the law catalog

def ident(x):
    return Id(obj_term(x))


def sym(x, y):
    return Sym(obj_term(x), obj_term(y))


def copy(x):
    return Copy(obj_term(x))


def discard(x):
    return Discard(obj_term(x))


def cocopy(x):
    return Cocopy(obj_term(x))


def codischarge(x):
    return Codischarge(obj_term(x))


@dataclass
class Env:
    objects: dict = field(default_factory=dict)
    arrows: dict = field(default_factory=dict)
    monad: object = None


def resolve_obj(term, env):
    out = ()
    for item in term:
        if isinstance(item, Sort):
            out += (item,)
        elif isinstance(item, TObj):
            if env.monad is None:
                raise UnsupportedStructural("monad object used without a monad")
            out += env.monad.obj(resolve_obj(item.inner, env))
        else:
            try:
                out += tuple(env.objects[item])
            except KeyError:
                raise TypeMismatch(f"unbound object variable {item!r}") from None
    return out


def eval_arrow(C, e, env=None):
    """Evaluate ``e`` in model ``C``; names resolve through ``env``."""
    env = env or Env()
    return _eval(C, e, env)


def _eval(C, e, env):
    if isinstance(e, Seq):
        f = _eval(C, e.first, env)
        g = _eval(C, e.second, env)
        if f.cod != g.dom:
            raise TypeMismatch(
                f"codomain {word_name(f.cod)} does not match domain {word_name(g.dom)}", subterm=str(e))
        return C.compose(f, g)
    if isinstance(e, Par):
        return C.tensor(_eval(C, e.left, env), _eval(C, e.right, env))
    if isinstance(e, Gen):
        try:
            return env.arrows[e.name]
        except KeyError:
            raise TypeMismatch(f"unbound arrow {e.name!r}", subterm=str(e)) from None
    if isinstance(e, Leaf):
        return e.morphism
    if isinstance(e, Id):
        return C.identity(resolve_obj(e.obj, env))
    if isinstance(e, Sym):
        return C.symmetry(resolve_obj(e.left, env), resolve_obj(e.right, env))
    if isinstance(e, Copy):
        return C.copy(resolve_obj(e.obj, env))
    if isinstance(e, Discard):
        return C.discard(resolve_obj(e.obj, env))
    if isinstance(e, Cocopy):
        return C.cocopy(resolve_obj(e.obj, env))
    if isinstance(e, Codischarge):
        return C.codischarge(resolve_obj(e.obj, env))
    if isinstance(e, Dom):
        return domain_of(C, _eval(C, e.inner, env))
    T = env.monad
    if isinstance(e, (TArr, Eta, Mu, Lax, MonadUnit)) and T is None:
        raise UnsupportedStructural(f"{e} needs a monad")
    if isinstance(e, TArr):
        return T.arr(_eval(C, e.inner, env))
    if isinstance(e, Eta):
        return T.eta(resolve_obj(e.obj, env))
    if isinstance(e, Mu):
        return T.mu(resolve_obj(e.obj, env))
    if isinstance(e, Lax):
        return T.lax(resolve_obj(e.left, env), resolve_obj(e.right, env))
    if isinstance(e, MonadUnit):
        return T.unit()
    raise TypeMismatch(f"not an arrow expression: {e!r}")


def domain_of(C, f):
    """copy_X ; (id_X * (f ; discard_Y)) for f : X -> Y."""
    X, Y = f.dom, f.cod
    return C.compose(C.copy(X), C.tensor(C.identity(X), C.compose(f, C.discard(Y))))


def arrow_names(e):
    """Generator names occurring in ``e``."""
    out = []
    stack = [e]
    while stack:
        x = stack.pop()
        if isinstance(x, Gen):
            out.append(x.name)
        for attr in ("first", "second", "left", "right", "inner"):
            sub = getattr(x, attr, None)
            if isinstance(sub, Expr):
                stack.append(sub)
    return out


def structural_needs(e):
    """Capabilities an expression requires of the model."""
    needs = set()
    stack = [e]
    kinds = {Copy: "copy", Discard: "discard", Cocopy: "cocopy", Codischarge: "codischarge",
             TArr: "monad", Eta: "monad", Mu: "monad", Lax: "monad", MonadUnit: "monad"}
    while stack:
        x = stack.pop()
        for cls, cap in kinds.items():
            if isinstance(x, cls):
                needs.add(cap)
        if isinstance(x, Dom):
            needs.update(("copy", "discard"))
        for attr in ("first", "second", "left", "right", "inner"):
            sub = getattr(x, attr, None)
            if isinstance(sub, Expr):
                stack.append(sub)
    return needs
