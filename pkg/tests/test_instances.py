import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relcat.core import Budget, Morphism, Sort, check_law
from relcat.core.engine import PASS
from relcat.errors import CarrierTooLarge, NotParallel, SemiringMismatch, TableShapeError, TypeMismatch, \
    UnknownKind
from relcat.instances import (FinPar, FinRel, FinRelForall, FinSet, RelPlus, Span, SpanPlus, SpanX, WeightMatrix,
                              WRel, build_instance, build_model, canonical_span, complement, compose_forall,
                              is_total, rel_from_span, span_compose, span_leq, span_mediator, subcategory,
                              wrel_compose)
from relcat.semiring import builtin_semirings

from . import oracles


def X2():
    return Sort.discrete("X", 2)


# structural arrows -------------------------------------------------------------

def test_finrel_copy_and_discard():
    C = FinRel([X2()])
    X = C.word("X")
    assert C.copy(X).data == frozenset({(0, 0), (1, 3)})
    assert C.discard(X).data == frozenset({(0, 0), (1, 0)})


def test_finrel_forall_identity_is_inequality():
    C = FinRelForall([X2()])
    assert C.identity(C.word("X")).data == frozenset({(0, 1), (1, 0)})


def test_rel_plus_structure_on_a_point():
    C = RelPlus([Sort.discrete("X", 1)])
    X = C.word("X")
    assert C.discard(X).data == frozenset()
    assert C.size(()) == 0
    assert C.copy(X).data == frozenset({(0, 0), (0, 1)})


def test_sum_carriers_and_product_carriers_of_the_unit():
    assert FinRel([X2()]).size(()) == 1
    assert SpanPlus([X2()]).size(()) == 0


def test_unknown_kind_and_carrier_cap():
    with pytest.raises(UnknownKind):
        build_instance("groups")
    with pytest.raises(CarrierTooLarge):
        build_instance("finrel", {"sorts": {"X": 5}, "carrier_cap": 4})
    C = build_instance("finrel", {"sorts": {"X": 3}, "carrier_cap": 8})
    with pytest.raises(CarrierTooLarge):
        C.size(C.word("X X"))


def test_finposet_rejects_a_cycle():
    with pytest.raises(TableShapeError):
        build_model({"kind": "finposet", "sorts": {"X": {"size": 2, "order": [[0, 1], [1, 0]]}}})


@pytest.mark.parametrize("kind", ["finset", "finpar", "finrel", "finrel_forall", "rel_plus", "span_x", "span_plus",
                                  "finpreord", "wrel"])
def test_json_round_trip_of_every_hom(kind):
    C = build_model({"kind": kind, "sorts": {"X": 2}})
    X = C.word("X")
    for f in itertools.islice(C.homs(X, X), 40):
        assert C.from_json(C.to_json(f), X, X) == f


def test_malformed_payload():
    C = FinSet([X2()])
    X = C.word("X")
    with pytest.raises(TableShapeError):
        C.from_json([0, 5], X, X)


# hom-set oracles ---------------------------------------------------------------

@pytest.mark.parametrize("n,m", [(0, 2), (1, 2), (2, 2), (2, 1), (2, 0)])
def test_hom_sets_match_brute_force(n, m):
    X, Y = Sort.discrete("X", n), Sort.discrete("Y", m)
    rel = FinRel([X, Y])
    assert {f.data for f in rel.homs((X,), (Y,))} == set(oracles.all_relations(n, m))
    fs = FinSet([X, Y])
    assert {f.data for f in fs.homs((X,), (Y,))} == set(oracles.all_functions(n, m))
    fp = FinPar([X, Y])
    assert {f.data for f in fp.homs((X,), (Y,))} == set(oracles.all_partial_functions(n, m))


def test_finpar_composition_agrees_with_relational_composition_of_graphs():
    X = X2()
    P, R = FinPar([X]), FinRel([X])
    homs = list(P.homs((X,), (X,)))
    for f, g in itertools.product(homs, repeat=2):
        assert oracles.graph(P.compose(f, g).data) == R.compose(
            Morphism(f.dom, f.cod, oracles.graph(f.data)), Morphism(g.dom, g.cod, oracles.graph(g.data))).data


# FinRel^forall -------------------------------------------------------------------

def test_compose_forall_empty_then_full():
    X, Y, Z = (Sort.discrete(n, 1) for n in "XYZ")
    a = Morphism((X,), (Y,), frozenset())
    b = Morphism((Y,), (Z,), frozenset({(0, 0)}))
    assert compose_forall(a, b).data == frozenset({(0, 0)})


def test_compose_forall_type_mismatch():
    X, Y = Sort.discrete("X", 1), Sort.discrete("Y", 1)
    with pytest.raises(TypeMismatch):
        compose_forall(Morphism((X,), (X,), frozenset()), Morphism((Y,), (Y,), frozenset()))


def test_forall_identity_is_a_unit():
    C = FinRelForall([X2()])
    X = C.word("X")
    i = C.identity(X)
    assert C.compose(i, i) == i
    for f in C.homs(X, X):
        assert C.compose(i, f) == f == C.compose(f, i)


def test_complement_turns_existential_into_universal_composition():
    R, F = FinRel([X2()]), FinRelForall([X2()])
    X = R.word("X")
    homs = list(R.homs(X, X))
    for a, b in itertools.product(homs, repeat=2):
        lhs = complement(R, R.compose(a, b))
        rhs = F.compose(complement(R, a), complement(R, b))
        assert lhs.data == rhs.data


def test_complement_is_a_strict_monoidal_isomorphism():
    R, F = FinRel([X2()]), FinRelForall([X2()])
    words = [(), R.word("X")]
    for w in words:
        for arrow in ("identity", "copy", "discard", "cocopy", "codischarge"):
            assert complement(R, getattr(R, arrow)(w)).data == getattr(F, arrow)(w).data
    X = R.word("X")
    homs = list(R.homs(X, X))
    for a, b in itertools.product(homs, repeat=2):
        assert complement(R, R.tensor(a, b)).data == F.tensor(complement(R, a), complement(R, b)).data


def test_forall_discardable_arrows_never_fill_a_row():
    F = FinRelForall([X2()])
    for dom, cod in itertools.product([(), F.word("X")], repeat=2):
        ny = F.size(cod)
        for a in F.homs(dom, cod):
            rows_not_full = all(len({y for (x2, y) in a.data if x2 == x}) != ny for x in range(F.size(dom)))
            assert is_total(F, a) == rows_not_full


# spans ---------------------------------------------------------------------------

def test_identity_span_is_a_unit():
    C = SpanX([X2()])
    X = C.word("X")
    for t in C.homs(X, X):
        assert span_compose(C.identity(X), t) == t


def test_empty_apex_absorbs():
    C = SpanX([X2()])
    X = C.word("X")
    empty = Morphism(X, X, ())
    for t in C.homs(X, X):
        assert span_compose(empty, t).data == ()


def test_discard_then_codischarge_has_the_square_as_apex():
    C = SpanX([X2()])
    X = C.word("X")
    s = C.compose(C.discard(X), C.codischarge(X))
    assert Span.of(s).apex_size == 4


def spans(n, m, max_apex):
    legs = [(x, y) for x in range(n) for y in range(m)]
    for k in range(max_apex + 1):
        for combo in itertools.combinations_with_replacement(legs, k):
            yield tuple(combo)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), max_size=3),
       st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), max_size=3))
def test_span_composition_is_the_pullback(s, t):
    X = X2()
    a = Morphism((X,), (X,), canonical_span(s))
    b = Morphism((X,), (X,), canonical_span(t))
    assert list(span_compose(a, b).data) == oracles.span_pullback(s, t)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 2)), max_size=4), st.randoms(use_true_random=False))
def test_canonical_form_is_complete_and_sound(pairs, rnd):
    shuffled = list(pairs)
    rnd.shuffle(shuffled)
    assert canonical_span(pairs) == canonical_span(shuffled)
    assert oracles.spans_isomorphic(pairs, shuffled)
    other = list(pairs)
    if other:
        other[0] = (other[0][0], (other[0][1] + 1) % 3)
        same = canonical_span(pairs) == canonical_span(other)
        assert same == oracles.spans_isomorphic(pairs, other)


def test_span_order_examples():
    C = SpanX([X2()])
    X = C.word("X")
    i = C.identity(X)
    assert span_leq(i, i)
    assert span_leq(i, C.compose(C.discard(X), C.codischarge(X)))
    square = Morphism(X, X, canonical_span([(a, b) for a in range(2) for b in range(2)]))
    assert not span_leq(square, i)
    assert span_mediator(i, i) == (0, 1)


def test_span_order_matches_the_mediator_oracle():
    X = X2()
    all_spans = list(spans(2, 2, 2))
    for s, t in itertools.product(all_spans, repeat=2):
        a, b = Morphism((X,), (X,), s), Morphism((X,), (X,), t)
        assert span_leq(a, b) == oracles.span_mediator_exists(s, t)


def test_span_order_needs_parallel_spans():
    X, Y = X2(), Sort.discrete("Y", 1)
    with pytest.raises(NotParallel):
        span_leq(Morphism((X,), (X,), ()), Morphism((X,), (Y,), ()))


def test_rel_from_span_examples():
    X = X2()
    assert rel_from_span(Morphism((X,), (X,), ())).data == frozenset()
    assert rel_from_span(Morphism((X,), (X,), ((0, 1), (0, 1)))).data == frozenset({(0, 1)})
    C = SpanX([X])
    assert rel_from_span(C.identity((X,))).data == FinRel([X]).identity((X,)).data


def test_rel_from_span_is_functorial_on_small_spans():
    X = X2()
    R = FinRel([X])
    all_spans = list(spans(2, 2, 3))
    for s, t in itertools.product(all_spans, repeat=2):
        a, b = Morphism((X,), (X,), s), Morphism((X,), (X,), t)
        assert rel_from_span(span_compose(a, b)) == R.compose(rel_from_span(a), rel_from_span(b))


def test_rel_plus_is_the_image_of_span_plus():
    X = X2()
    S, R = SpanPlus([X]), RelPlus([X])
    for w in [(), (X,), (X, X)]:
        for arrow in ("copy", "discard", "cocopy", "codischarge"):
            assert rel_from_span(getattr(S, arrow)(w)).data == getattr(R, arrow)(w).data


# weighted relations --------------------------------------------------------------

def test_boolean_matrices_compose_like_relations():
    B = builtin_semirings().lookup("boolean")
    X = X2()
    W, R = WRel(B, [X]), FinRel([X])
    rels = list(R.homs((X,), (X,)))
    for a, b in itertools.product(rels, repeat=2):
        ma = WeightMatrix(B, tuple(tuple(int((x, y) in a.data) for y in range(2)) for x in range(2)))
        mb = WeightMatrix(B, tuple(tuple(int((x, y) in b.data) for y in range(2)) for x in range(2)))
        prod = wrel_compose(ma, mb).rows
        assert frozenset((x, y) for x in range(2) for y in range(2) if prod[x][y]) == R.compose(a, b).data
        assert W.compose(Morphism((X,), (X,), ma.rows), Morphism((X,), (X,), mb.rows)).data == prod


def test_identity_matrix_is_a_unit():
    S = builtin_semirings().lookup("nat-trunc-3")
    a = WeightMatrix(S, ((1, 2), (3, 0)))
    assert wrel_compose(WeightMatrix(S, ((1, 0), (0, 1))), a) == a


def test_nat_trunc_3_row_times_column():
    S = builtin_semirings().lookup("nat-trunc-3")
    out = wrel_compose(WeightMatrix(S, ((1, 1),)), WeightMatrix(S, ((1,), (1,))))
    assert [[S.labels[v] for v in row] for row in out.rows] == [["2"]]


def test_wrel_compose_errors():
    S, T = builtin_semirings().lookup("nat-trunc-3"), builtin_semirings().lookup("boolean")
    with pytest.raises(SemiringMismatch):
        wrel_compose(WeightMatrix(S, ((1,),)), WeightMatrix(T, ((1,),)))
    with pytest.raises(TypeMismatch):
        wrel_compose(WeightMatrix(S, ((1, 1),)), WeightMatrix(S, ((1,),)))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_wrel_composition_matches_the_matrix_oracle(seed):
    S = builtin_semirings().lookup("nat-trunc-3")
    W = build_model({"kind": "wrel", "semiring": "nat-trunc-3", "sorts": {"X": 2}})
    rng = random.Random(seed)
    X = W.word("X")
    f, g = W.random_hom(X, X + X, rng), W.random_hom(X + X, X, rng)
    assert W.compose(f, g).data == oracles.matrix_product(S.add, S.mul, S.zero, f.data, g.data)


def _matrix_of(rel, n, m):
    return tuple(tuple(int((x, y) in rel) for y in range(m)) for x in range(n))


def test_wrel_boolean_is_isomorphic_to_finrel():
    X = X2()
    W = WRel(builtin_semirings().lookup("boolean"), [X])
    R = FinRel([X])
    words = [(), (X,)]

    def iso(f):
        return Morphism(f.dom, f.cod, _matrix_of(f.data, R.size(f.dom), R.size(f.cod)))

    for w in words + [(X, X)]:
        for arrow in ("identity", "copy", "discard", "cocopy", "codischarge"):
            assert iso(getattr(R, arrow)(w)) == getattr(W, arrow)(w)
    for a, b in itertools.product(words, repeat=2):
        assert iso(R.symmetry(a, b)) == W.symmetry(a, b)
    homs = {(a, b): list(R.homs(a, b)) for a in words for b in words}
    for (a, b), fs in homs.items():
        assert sorted(iso(f).data for f in fs) == sorted(g.data for g in W.homs(a, b))
        for f, g in itertools.product(fs, repeat=2):
            assert R.leq(f, g) == W.leq(iso(f), iso(g))
            assert iso(R.tensor(f, g)) == W.tensor(iso(f), iso(g))
        for c in words:
            for f, g in itertools.product(fs, homs[(b, c)]):
                assert iso(R.compose(f, g)) == W.compose(iso(f), iso(g))


# subcategories -------------------------------------------------------------------

def test_functional_relations_are_partial_functions():
    X = X2()
    R, P = FinRel([X]), FinPar([X])
    Fun = subcategory(R, "functional")
    for a, b in itertools.product([(), (X,), (X, X)], [(), (X,)]):
        assert {f.data for f in Fun.homs(a, b)} == {oracles.graph(p.data) for p in P.homs(a, b)}


def test_total_relations():
    X = X2()
    R = FinRel([X])
    Tot = subcategory(R, "total")
    for a, b in itertools.product([(), (X,)], repeat=2):
        expected = {r for r in oracles.all_relations(R.size(a), R.size(b)) if oracles.is_total_relation(r, R.size(a))}
        assert {f.data for f in Tot.homs(a, b)} == expected


def test_total_functional_relations_are_functions_and_cartesian():
    X = X2()
    R, S = FinRel([X]), FinSet([X])
    TFun = subcategory(R, "total-functional")
    for a, b in itertools.product([(), (X,), (X, X)], [(), (X,)]):
        assert {f.data for f in TFun.homs(a, b)} == {oracles.graph(g.data) for g in S.homs(a, b)}
    assert check_law(TFun, "NAT_COPY", Budget(words=1)).status == PASS
    assert check_law(TFun, "NAT_DISCARD", Budget(words=1)).status == PASS


def test_maps_in_finrel_are_functions():
    X = X2()
    R = FinRel([X])
    Map = subcategory(R, "maps")
    for a, b in itertools.product([(), (X,)], repeat=2):
        expected = {r for r in oracles.all_relations(R.size(a), R.size(b))
                    if oracles.is_function_graph(r, R.size(a), R.size(b))}
        assert {f.data for f in Map.homs(a, b)} == expected


def test_unknown_filter():
    with pytest.raises(ValueError):
        subcategory(FinRel([X2()]), "injective")
