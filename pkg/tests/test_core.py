import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relcat.core import (COUNTEREXAMPLE, EXHAUSTED, PASS, UNSUPPORTED, Budget, Copy, Discard, Env, Gen, Id, Leaf,
                         Morphism, Par, Seq, Sort, Sym, check_law, check_laws, eval_arrow, flatten_object, hom_leq,
                         replay, word_name, words_up_to)
from relcat.core.expr import Cocopy
from relcat.errors import BudgetZero, NotEnriched, NotParallel, TypeMismatch, UnsupportedCapability, \
    UnsupportedStructural
from relcat.instances import FinPar, FinRel, FinSet, SpanX, build_model

from . import oracles

A, B, C_ = Sort.discrete("A", 2), Sort.discrete("B", 3), Sort.discrete("C", 1)


def finrel(size=2, *more):
    return FinRel([Sort.discrete("X", size)] + [Sort.discrete(f"Y{i}", n) for i, n in enumerate(more)])


# objects ---------------------------------------------------------------------

def test_flatten_cancels_units():
    assert flatten_object((A, (B, None))) == (A, B)


def test_flatten_is_associative():
    assert flatten_object(((A, B), C_)) == flatten_object((A, (B, C_))) == (A, B, C_)


def test_flatten_unit_tensor_unit():
    assert flatten_object(("⊗", "I", "I")) == ()


@given(st.recursive(st.sampled_from([A, B, C_, None]), lambda inner: st.tuples(inner, inner), max_leaves=8))
def test_flatten_is_idempotent(raw):
    once = flatten_object(raw)
    assert flatten_object(once) == once


def test_sort_equality_uses_name_and_size():
    assert Sort.discrete("X", 2) == Sort.discrete("X", 2)
    assert Sort.discrete("X", 2) != Sort.discrete("X", 3)
    assert word_name(()) == "I"


def test_words_up_to_lists_words_in_order():
    X = Sort.discrete("X", 2)
    assert words_up_to([X], 2) == [(), (X,), (X, X)]


# evaluation ------------------------------------------------------------------

def test_counit_evaluates_to_identity_in_finrel():
    C = finrel(2)
    X = C.word("X")
    e = Seq(Copy(X), Par(Id(X), Discard(X)))
    assert eval_arrow(C, e) == C.identity(X)


def test_symmetry_is_an_involution_in_finset():
    X, Y = Sort.discrete("X", 2), Sort.discrete("Y", 3)
    C = FinSet([X, Y])
    e = Seq(Sym((X,), (Y,)), Sym((Y,), (X,)))
    assert eval_arrow(C, e) == C.identity((X, Y))


def test_copy_then_f_tensor_f_in_finrel():
    X, Y = Sort.discrete("X", 1), Sort.discrete("Y", 2)
    C = FinRel([X, Y])
    f = C.relation((X,), (Y,), [(0, 0), (0, 1)])
    out = eval_arrow(C, Seq(Copy((X,)), Par(Gen("f"), Gen("f"))), Env(arrows={"f": f}))
    assert out.data == frozenset({(0, 0), (0, 1), (0, 2), (0, 3)})


def test_type_mismatch_names_the_subterm():
    C = finrel(2, 3)
    X, Y = C.word("X"), C.word("Y0")
    with pytest.raises(TypeMismatch) as info:
        eval_arrow(C, Seq(Id(X), Id(Y)))
    assert "id_X" in str(info.value.subterm) or "id" in str(info.value)


def test_cocopy_in_a_gs_only_model_is_unsupported():
    C = FinSet([Sort.discrete("X", 2)])
    with pytest.raises(UnsupportedStructural):
        eval_arrow(C, Cocopy(C.word("X")))


# an independent relational interpreter used as the oracle for FinRel

def _oracle_eval(e, sizes):
    def n(word):
        out = 1
        for s in word:
            out *= sizes[s.name]
        return out

    if isinstance(e, Leaf):
        return e.morphism.data, n(e.morphism.dom), n(e.morphism.cod)
    if isinstance(e, Id):
        k = n(e.obj)
        return oracles.rel_identity(k), k, k
    if isinstance(e, Copy):
        k = n(e.obj)
        return oracles.rel_copy(k), k, k * k
    if isinstance(e, Discard):
        k = n(e.obj)
        return oracles.rel_discard(k), k, 1
    if isinstance(e, Sym):
        a, b = n(e.left), n(e.right)
        return frozenset((x * b + y, y * a + x) for x in range(a) for y in range(b)), a * b, a * b
    if isinstance(e, Seq):
        r1, d, _ = _oracle_eval(e.first, sizes)
        r2, _, c = _oracle_eval(e.second, sizes)
        return oracles.rel_compose(r1, r2), d, c
    if isinstance(e, Par):
        r1, d1, c1 = _oracle_eval(e.left, sizes)
        r2, d2, c2 = _oracle_eval(e.right, sizes)
        return oracles.rel_product(r1, r2, d2, c2), d1 * d2, c1 * c2
    raise AssertionError(e)


def _random_expr(C, rng, dom, depth):
    """A random well-typed expression out of ``dom``; returns (expr, cod)."""
    sorts = C.sorts
    if depth == 0 or rng.random() < 0.25:
        choice = rng.randrange(5)
        if choice == 0:
            return Id(dom), dom
        if choice == 1 and len(dom) <= 1:
            return Copy(dom), dom + dom
        if choice == 2:
            return Discard(dom), ()
        if choice == 3 and len(dom) == 2:
            return Sym(dom[:1], dom[1:]), dom[1:] + dom[:1]
        cod = tuple(rng.choice(sorts) for _ in range(rng.randint(0, 1)))
        return Leaf(C.random_hom(dom, cod, rng)), cod
    if rng.random() < 0.5 or not dom:
        e1, mid = _random_expr(C, rng, dom, depth - 1)
        e2, cod = _random_expr(C, rng, mid, depth - 1)
        return Seq(e1, e2), cod
    k = rng.randint(0, len(dom))
    e1, c1 = _random_expr(C, rng, dom[:k], depth - 1)
    e2, c2 = _random_expr(C, rng, dom[k:], depth - 1)
    return Par(e1, e2), c1 + c2


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_finrel_evaluation_matches_a_relational_oracle(seed):
    C = finrel(2, 1)
    rng = random.Random(seed)
    dom = tuple(rng.choice(C.sorts) for _ in range(rng.randint(0, 2)))
    e, cod = _random_expr(C, rng, dom, 3)
    got = eval_arrow(C, e)
    expected, _, _ = _oracle_eval(e, {s.name: s.size for s in C.sorts})
    assert (got.dom, got.cod) == (dom, cod)
    assert got.data == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["finset", "finpar", "finrel", "span_x", "wrel"]))
def test_evaluation_is_compositional(seed, kind):
    C = build_model({"kind": kind, "sorts": {"X": 2}})
    rng = random.Random(seed)
    X = C.word("X")
    e1, mid = _random_expr(C, rng, X, 2)
    e2, _ = _random_expr(C, rng, mid, 2)
    assert eval_arrow(C, Seq(e1, e2)) == C.compose(eval_arrow(C, e1), eval_arrow(C, e2))
    assert eval_arrow(C, Par(e1, e2)) == C.tensor(eval_arrow(C, e1), eval_arrow(C, e2))


@pytest.mark.parametrize("kind", ["finset", "finpar", "finrel", "rel_plus", "finrel_forall"])
def test_interchange_on_enumerated_homs(kind):
    C = build_model({"kind": kind, "sorts": {"X": 2}})
    X = C.word("X")
    homs = list(C.homs(X, X))
    rng = random.Random(7)
    for _ in range(150):
        f, g, h, k = (rng.choice(homs) for _ in range(4))
        lhs = C.tensor(C.compose(f, g), C.compose(h, k))
        rhs = C.compose(C.tensor(f, h), C.tensor(g, k))
        assert lhs == rhs


# law engine ------------------------------------------------------------------

def test_gs_counit_passes_in_finrel_up_to_words_of_length_two():
    r = check_law(finrel(2), "GS_COUNIT", Budget(words=2))
    assert r.status == PASS
    assert r.objects_checked == 3


def test_nat_copy_fails_in_finrel_with_a_two_valued_witness():
    C = finrel(2)
    r = check_law(C, "NAT_COPY", Budget(words=1))
    assert r.status == COUNTEREXAMPLE
    (f,) = r.witness.arrows.values()
    assert f.data == frozenset({(0, 0), (0, 1)})
    assert replay(C, "NAT_COPY", r.witness)


def test_r4_passes_in_finpar_and_fails_in_finrel():
    X = Sort.discrete("X", 2)
    assert check_law(FinPar([X]), "R4", Budget(words=1)).status == PASS
    C = FinRel([X])
    r = check_law(C, "R4", Budget(words=1))
    assert r.status == COUNTEREXAMPLE
    assert replay(C, "R4", r.witness)


def test_witnesses_replay_bit_exactly():
    C = finrel(2)
    for law in ("NAT_COPY", "NAT_DISCARD", "CONNECTED", "R1", "R4", "HOPF"):
        r = check_law(C, law, Budget(words=1))
        if r.status == COUNTEREXAMPLE:
            assert replay(C, law, r.witness), law


def test_zero_budget_is_rejected():
    with pytest.raises(BudgetZero):
        check_law(finrel(2), "GS_COUNIT", Budget(hom=0))


def test_missing_capability_is_reported():
    C = FinSet([Sort.discrete("X", 2)])
    with pytest.raises(UnsupportedCapability):
        check_law(C, "COGS_UNIT", Budget(words=1))
    (r,) = check_laws(C, ["COGS_UNIT"], Budget(words=1))
    assert r.status == UNSUPPORTED


def test_inequality_law_needs_an_order():
    C = FinSet([Sort.discrete("X", 2)])
    with pytest.raises(UnsupportedCapability):
        check_law(C, "OPLAX_COPY", Budget(words=1))


def test_sampled_hom_sets_report_budget_exhausted():
    r = check_law(finrel(2), "NAT_DISCARD", Budget(words=1, hom=3))
    assert r.status in (EXHAUSTED, COUNTEREXAMPLE)
    r = check_law(finrel(2), "GS_COUNIT", Budget(words=2, bindings=1))
    assert r.status == EXHAUSTED


def test_unknown_law():
    with pytest.raises(KeyError):
        check_law(finrel(2), "NO_SUCH_LAW")


def test_report_json_contains_the_witness():
    C = finrel(2)
    r = check_law(C, "NAT_COPY", Budget(words=1))
    doc = r.to_json(C)
    assert doc["status"] == COUNTEREXAMPLE
    assert doc["witness"]["arrows"]["f"]["payload"] == [[0, 0], [0, 1]]


# enrichment ------------------------------------------------------------------

def test_subset_order_in_finrel():
    X, Y = Sort.discrete("X", 1), Sort.discrete("Y", 2)
    C = FinRel([X, Y])
    small = C.relation((X,), (Y,), [(0, 0)])
    big = C.relation((X,), (Y,), [(0, 0), (0, 1)])
    assert hom_leq(C, small, big) and not hom_leq(C, big, small)


def test_hom_leq_errors():
    X = Sort.discrete("X", 2)
    with pytest.raises(NotEnriched):
        FinSet([X]).leq(FinSet([X]).identity((X,)), FinSet([X]).identity((X,)))
    C = FinRel([X])
    with pytest.raises(NotParallel):
        C.leq(C.identity((X,)), C.copy((X,)))


def test_span_identity_below_codischarge_after_discard():
    C = SpanX([Sort.discrete("X", 2)])
    X = C.word("X")
    assert C.leq(C.identity(X), C.compose(C.discard(X), C.codischarge(X)))


@pytest.mark.parametrize("kind", ["finrel", "finpar", "finpreord", "wrel"])
def test_hom_order_is_a_monotone_preorder(kind):
    doc = {"kind": kind, "sorts": {"X": {"size": 2, "order": [[0, 1]]}} if kind == "finpreord" else {"X": 2}}
    C = build_model(doc)
    X = C.word("X")
    homs = list(C.homs(X, X))
    for f in homs:
        assert C.leq(f, f)
    for f, g in itertools.product(homs, repeat=2):
        if not C.leq(f, g):
            continue
        for h in homs:
            if C.leq(g, h):
                assert C.leq(f, h)
            assert C.leq(C.compose(f, h), C.compose(g, h))
            assert C.leq(C.compose(h, f), C.compose(h, g))
            assert C.leq(C.tensor(f, h), C.tensor(g, h))
            assert C.leq(C.tensor(h, f), C.tensor(h, g))


def test_morphism_equality_is_payload_equality():
    X = Sort.discrete("X", 2)
    assert Morphism((X,), (X,), (0, 1)) == Morphism((X,), (X,), (0, 1))
    assert Morphism((X,), (X,), (0, 1)) != Morphism((X,), (X,), (1, 0))
