"""Build models from JSON-style manifests."""
from __future__ import annotations

import re

from ..core.model import DEFAULT_CARRIER_CAP
from ..core.objects import Sort
from ..errors import CarrierTooLarge, TableShapeError, UnknownKind
from ..semiring import load_semiring
from .functions import FinPar, FinPoset, FinPreOrd, FinSet
from .relations import FinRel, FinRelForall, RelPlus, SpanPlus, SpanX, WRel
from .subcategory import Subcategory

SIMPLE_KINDS = {
    "finset": FinSet,
    "finpar": FinPar,
    "finrel": FinRel,
    "finrel_forall": FinRelForall,
    "rel_plus": RelPlus,
    "span_x": SpanX,
    "span_plus": SpanPlus,
    "finpreord": FinPreOrd,
    "finposet": FinPoset,
}
KINDS = tuple(SIMPLE_KINDS) + ("wrel", "kleisli", "subcategory")

_WREL = re.compile(r"wrel\((.+)\)")


def parse_sorts(raw, ordered=False, cap=DEFAULT_CARRIER_CAP):
    """Sorts from ``{"X": 2}``, ``{"X": ["a", "b"]}`` or ``{"X": {"size": 2, "order": [[0, 1]]}}``."""
    if raw is None:
        raw = {"X": 2}
    if isinstance(raw, list):
        raw = {name: 2 for name in raw}
    sorts = []
    for name, spec in raw.items():
        order = ()
        elements = None
        if isinstance(spec, int):
            size = spec
        elif isinstance(spec, list):
            elements, size = spec, len(spec)
        elif isinstance(spec, dict):
            elements = spec.get("elements")
            size = spec.get("size", len(elements) if elements else None)
            order = spec.get("order", ())
            if size is None:
                raise TableShapeError(f"sort {name} needs a size or elements")
        else:
            raise TableShapeError(f"cannot read sort {name!r}: {spec!r}")
        if size < 0:
            raise TableShapeError(f"sort {name} has negative size")
        if size > cap:
            raise CarrierTooLarge(f"sort {name} has {size} elements (cap {cap})")
        if elements is not None:
            index = {e: i for i, e in enumerate(elements)}
            order = [(index.get(a, a), index.get(b, b)) for a, b in order]
        for a, b in order:
            if not (0 <= a < size and 0 <= b < size):
                raise TableShapeError(f"order pair {(a, b)} outside sort {name}")
        if order or ordered:
            s = Sort.preordered(name, size, order)
            if elements is not None:
                s = Sort(name, elements, s._leq)
        else:
            s = Sort(name, elements if elements is not None else range(size))
        sorts.append(s)
    return sorts


def build_instance(kind, params=None):
    """A model from a kind name and parameters (sorts, semiring, caps, ...)."""
    params = dict(params or {})
    cap = params.get("carrier_cap", DEFAULT_CARRIER_CAP)
    m = _WREL.fullmatch(kind)
    if m:
        kind, params["semiring"] = "wrel", m.group(1)
    if kind in SIMPLE_KINDS:
        cls = SIMPLE_KINDS[kind]
        sorts = parse_sorts(params.get("sorts"), ordered=kind in ("finpreord", "finposet"), cap=cap)
        kw = {"carrier_cap": cap}
        if kind.startswith("span_"):
            kw["apex_cap"] = params.get("apex_cap", 2)
        C = cls(sorts, params.get("name"), **kw)
        if kind == "finposet":
            _require_antisymmetric(sorts)
        return C
    if kind == "wrel":
        S = load_semiring(params.get("semiring", "boolean"))
        return WRel(S, parse_sorts(params.get("sorts"), cap=cap), params.get("name"), carrier_cap=cap)
    if kind == "subcategory":
        return Subcategory(build_model(params["base"]), params["filter"])
    if kind == "kleisli":
        from ..monads.build import build_monad
        from ..monads.kleisli import kleisli
        base = build_model(params["base"])
        T = build_monad(params["monad"], base)
        return kleisli(T, force=params.get("force", False))
    raise UnknownKind(f"unknown model kind {kind!r}; expected one of {', '.join(KINDS)}")


def build_model(doc):
    """A model from a manifest document ``{"kind": ..., ...}``."""
    if isinstance(doc, str):
        return build_instance(doc, {})
    doc = dict(doc)
    kind = doc.pop("kind", None)
    if kind is None:
        raise UnknownKind("manifest has no kind")
    return build_instance(kind, doc)


def _require_antisymmetric(sorts):
    for s in sorts:
        for a, b in s.order_pairs():
            if s.leq(b, a):
                raise TableShapeError(f"sort {s.name} is not antisymmetric: {a} and {b}")
