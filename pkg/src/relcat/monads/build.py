"""Monads from manifest documents."""
from __future__ import annotations

from ..errors import UnknownKind
from .base import IdentityMonad, MonoidObject, table_monoid
from .enriched import DownsetMonad, HoarePowerset, SubsetMonad
from .semiring import SemiringMonad, UpweightMonad
from .writer import WriterMonad

MONAD_KINDS = ("identity", "semiring", "powerset", "writer", "hoare_powerset", "downset", "upweight")


def build_monoid(C, doc):
    """A monoid from ``{"carrier": [...], "mult": ..., "unit": ...}``.

    ``mult``/``unit`` are payloads in the model's JSON format, the names
    ``"cocopy"``/``"codischarge"``, or (for function models) ``"table"`` with a
    nested list and ``"unit"`` an element index.
    """
    M = C.word(doc["carrier"])
    name = doc.get("name", "M")
    if "table" in doc:
        return table_monoid(C, M, doc["table"], doc["unit"], name)
    mult, unit = doc["mult"], doc["unit"]
    mult = C.cocopy(M) if mult == "cocopy" else C.from_json(mult, M + M, M)
    unit = C.codischarge(M) if unit == "codischarge" else C.from_json(unit, (), M)
    return MonoidObject(C, M, mult, unit, name)


def build_monad(doc, base):
    """A monad on ``base``; ``doc`` is a manifest or ``"kind[:semiring[:variant]]"``."""
    if isinstance(doc, str):
        parts = doc.split(":")
        doc = {"kind": parts[0]}
        if parts[0] in ("semiring", "upweight") and len(parts) > 1:
            doc["semiring"] = parts[1]
            if len(parts) > 2:
                doc["variant"] = parts[2]
        elif len(parts) > 1:
            doc["variant"] = parts[1]
    kind = doc.get("kind")
    variant = doc.get("variant", "full")
    if kind == "identity":
        return IdentityMonad(base)
    if kind == "semiring":
        return SemiringMonad(base, doc.get("semiring", "boolean"), variant)
    if kind == "upweight":
        return UpweightMonad(base, doc.get("semiring", "boolean"), variant)
    if kind == "powerset":
        m = SubsetMonad(base, variant)
        m.posetal = True
        return m
    if kind == "hoare_powerset":
        return HoarePowerset(base, variant)
    if kind == "downset":
        return DownsetMonad(base, variant)
    if kind == "writer":
        return WriterMonad(base, build_monoid(base, doc["monoid"]))
    raise UnknownKind(f"unknown monad kind {kind!r}; expected one of {', '.join(MONAD_KINDS)}")
