"""Acceptance criteria 1 to 10, one test each.

Each test prints a single ``criterion N: PASS|FAIL`` line (see conftest.py),
and the whole file runs at desk scale: carriers of at most 3 elements and
object words of length at most 2.
"""
import itertools
import random

from relcat.core import Budget, Morphism, Sort, check_law
from relcat.core.engine import COUNTEREXAMPLE, PASS, replay
from relcat.core.objects import words_up_to
from relcat.diagrams import DEFAULT_SIGNATURE, certificate, diagrams_equal, evaluate, parse_term, random_term, \
    rewrite
from relcat.instances import FinPar, FinPreOrd, FinRel, FinSet, WRel, build_model, canonical_span, rel_from_span, \
    span_compose, subcategory
from relcat.monads import (check_monad, check_monad_class, enriched_monads, kleisli, powerset, table_monoid,
                           upweight, writer_monad)
from relcat.semiring import builtin_semirings
from relcat.taxonomy import classify, find_right_adjoint, predicate

from . import oracles

ONE = Budget(words=1)
TWO = Budget(words=2)
BOOL = builtin_semirings().lookup("boolean")
STOCK = ["finset", "finpar", "finrel", "finrel_forall", "rel_plus", "span_x", "span_plus", "wrel"]


def X2():
    return Sort.discrete("X", 2)


def words(C, n=1):
    return words_up_to(C.sorts, n)


def test_criterion_1_finrel_classification():
    C = FinRel([X2()])
    expect = {"gs": PASS, "frobenius": PASS, "special": PASS, "connected": COUNTEREXAMPLE,
              "diagonals": COUNTEREXAMPLE, "projections": COUNTEREXAMPLE}
    report = classify(C, ONE, predicates=list(expect))
    assert report.verdicts() == expect
    diag = report.predicates["diagonals"]
    f = diag.witness.arrows["f"]
    assert any(sum(1 for (x2, _) in f.data if x2 == x) == 2 for x in range(C.size(f.dom)))
    assert report.predicates["projections"].witness.arrows["f"].data == frozenset()
    r4 = check_law(C, "R4", ONE)
    assert r4.status == COUNTEREXAMPLE
    assert set(r4.witness.arrows) == {"f", "g"}
    for law, w in (("NAT_COPY", diag.witness), ("NAT_DISCARD", report.predicates["projections"].witness),
                   ("R4", r4.witness)):
        assert replay(C, law, w)


def test_criterion_2_subcategory_oracles():
    X = X2()
    R, P, S = FinRel([X]), FinPar([X]), FinSet([X])
    Fun, Tot, TFun = (subcategory(R, k) for k in ("functional", "total", "total-functional"))
    for a, b in itertools.product(words(R, 2), repeat=2):
        if R.size(a) * R.size(b) > 8:
            continue
        n, m = R.size(a), R.size(b)
        assert {f.data for f in Fun.homs(a, b)} == {oracles.graph(p.data) for p in P.homs(a, b)}
        assert {f.data for f in Tot.homs(a, b)} == {r for r in oracles.all_relations(n, m)
                                                    if oracles.is_total_relation(r, n)}
        assert {f.data for f in TFun.homs(a, b)} == {oracles.graph(g.data) for g in S.homs(a, b)}
    assert check_law(TFun, "NAT_COPY", ONE).status == PASS
    assert check_law(TFun, "NAT_DISCARD", ONE).status == PASS


def test_criterion_3_boolean_weighted_relations_are_relations():
    X = X2()
    W, R = WRel(BOOL, [X]), FinRel([X])
    ws = [(), (X,)]

    def iso(f):
        n, m = R.size(f.dom), R.size(f.cod)
        return Morphism(f.dom, f.cod, tuple(tuple(int((x, y) in f.data) for y in range(m)) for x in range(n)))

    for w in ws + [(X, X)]:
        for arrow in ("identity", "copy", "discard", "cocopy", "codischarge"):
            assert iso(getattr(R, arrow)(w)) == getattr(W, arrow)(w)
    comparisons = 0
    for a, b in itertools.product(ws, repeat=2):
        fs = list(R.homs(a, b))
        assert sorted(iso(f).data for f in fs) == sorted(g.data for g in W.homs(a, b))
        for f, g in itertools.product(fs, repeat=2):
            comparisons += 1
            assert R.leq(f, g) == W.leq(iso(f), iso(g))
            assert iso(R.tensor(f, g)) == W.tensor(iso(f), iso(g))
            if a == b:
                assert iso(R.compose(f, g)) == W.compose(iso(f), iso(g))
    assert comparisons == 2 ** 2 + 4 ** 2 + 4 ** 2 + 16 ** 2


def test_criterion_4_kleisli_propositions():
    X = X2()
    K = kleisli(powerset(FinSet([X])))
    R = FinRel([X])

    def rel(f):
        (TY,) = K.monad.obj(f.cod)
        return frozenset((x, y) for x, v in enumerate(f.data) for y in TY.elements[v])

    for a, b in itertools.product([(), (X,)], repeat=2):
        fs = list(K.homs(a, b))
        assert sorted(map(sorted, map(rel, fs))) == sorted(map(sorted, (g.data for g in R.homs(a, b))))
        for f, g in itertools.product(fs, repeat=2):
            assert rel(K.tensor(f, g)) == R.tensor(Morphism(a, b, rel(f)), Morphism(a, b, rel(g))).data
            if a == b:
                assert rel(K.compose(f, g)) == R.compose(Morphism(a, b, rel(f)), Morphism(a, b, rel(g))).data
    for w in ((), (X,), (X, X)):
        assert rel(K.copy(w)) == R.copy(w).data and rel(K.discard(w)) == R.discard(w).data

    Ke, P = kleisli(powerset(FinSet([X]), "at_most_one")), FinPar([X])

    def part(f):
        (TY,) = Ke.monad.obj(f.cod)
        return tuple(next(iter(TY.elements[v]), None) for v in f.data)

    for a, b in itertools.product([(), (X,)], repeat=2):
        fs = list(Ke.homs(a, b))
        assert sorted(map(repr, map(part, fs))) == sorted(repr(g.data) for g in P.homs(a, b))
        for f, g in itertools.product(fs, repeat=2):
            if a == b:
                assert part(Ke.compose(f, g)) == P.compose(Morphism(a, b, part(f)), Morphism(a, b, part(g))).data
    assert predicate(Ke, "diagonals", ONE).status == PASS

    Ku = kleisli(powerset(FinSet([X]), "nonempty"))
    assert predicate(Ku, "projections", ONE).status == PASS

    base = FinPar([X, Sort.discrete("M", 1)])
    T = writer_monad(base, table_monoid(base, base.word("M"), [[0]], 0))
    assert check_monad_class(T, "affine").status == PASS
    KT = kleisli(T)
    assert predicate(KT, "gs", ONE).status == PASS
    assert predicate(KT, "projections", ONE).status == COUNTEREXAMPLE


def test_criterion_5_writer_dichotomy():
    def writer(table, size):
        C = FinSet([X2(), Sort.discrete("M", size)])
        return writer_monad(C, table_monoid(C, C.word("M"), table, 0))

    assert check_monad_class(writer([[0]], 1), "affine").status == PASS
    assert check_monad_class(writer([[0, 1], [1, 1]], 2), "relevant").status == PASS
    z2 = writer([[0, 1], [1, 0]], 2)
    for cls in ("affine", "relevant"):
        r = check_monad_class(z2, cls)
        assert r.status == COUNTEREXAMPLE
        assert r.witness.lhs != r.witness.rhs
    r = check_monad_class(z2, "relevant")
    # element 1 of Z2: one leg keeps it, the other multiplies it with itself and gets 0
    assert r.witness.lhs.data[1] == 1 and r.witness.rhs.data[1] == 0


def test_criterion_6_span_and_relation_duality():
    def verdicts(kind, names):
        C = build_model({"kind": kind, "sorts": {"X": 2}})
        return {n: predicate(C, n, ONE).status for n in names}

    assert verdicts("span_x", ["frobenius", "special", "connected", "lax_connected"]) == {
        "frobenius": PASS, "special": PASS, "connected": COUNTEREXAMPLE, "lax_connected": PASS}
    assert verdicts("span_plus", ["bialgebraic", "special"]) == {"bialgebraic": PASS, "special": COUNTEREXAMPLE}
    assert verdicts("rel_plus", ["bialgebraic", "special"]) == {"bialgebraic": PASS, "special": PASS}

    X = X2()
    R = FinRel([X])
    legs = [(x, y) for x in range(2) for y in range(2)]
    spans = [canonical_span(c) for k in range(4) for c in itertools.combinations_with_replacement(legs, k)]
    for s, t in itertools.product(spans, repeat=2):
        a, b = Morphism((X,), (X,), s), Morphism((X,), (X,), t)
        assert rel_from_span(span_compose(a, b)) == R.compose(rel_from_span(a), rel_from_span(b))


def test_criterion_7_enriched_suite():
    R = FinRel([X2()])
    for name in ("oplax_cartesian", "cartesian_bicategory", "bicat_relations"):
        assert predicate(R, name, ONE).status == PASS, name
    X = R.word("X")
    for f in R.homs(X, X):
        is_map = find_right_adjoint(R, f).found
        assert is_map == oracles.is_function_graph(f.data, 2, 2)
    for kind in STOCK:
        C = build_model({"kind": kind, "sorts": {"X": 2}})
        v = classify(C, ONE, predicates=["cartesian_bicategory", "oplax_cocartesian"], derived=False).verdicts()
        if v["cartesian_bicategory"] == PASS:
            assert v["oplax_cocartesian"] == PASS, kind
    P = FinPar([X2()])
    for name in ("posetal", "oplax_cartesian", "positive", "restriction"):
        assert predicate(P, name, ONE).status == PASS, name


def test_criterion_8_enriched_kleisli():
    H = enriched_monads()["hoare_powerset"]
    assert {r.status for r in check_monad(H)} == {PASS}
    assert check_monad_class(H, "colax-gs").status == PASS
    assert predicate(kleisli(H), "oplax_cartesian", ONE).status == PASS
    for n, order in ((1, []), (2, [(0, 1)])):
        U = upweight(BOOL, FinPreOrd([Sort.preordered("X", n, order)]), "u_sub")
        assert {r.status for r in check_monad(U)} == {PASS}
        assert check_monad_class(U, "colax-affine").status == PASS


def test_criterion_9_diagram_engine():
    rng = random.Random(9)
    for _ in range(200):
        t = random_term(DEFAULT_SIGNATURE, rng, layers=rng.randint(2, 6))
        assert diagrams_equal(t, rewrite(t, rng, steps=rng.randint(1, 4)))
    sig = DEFAULT_SIGNATURE
    pairs = [("copy_A ; (f * f)", "f ; copy_B"), ("f ; discard_B", "discard_A")]
    for left, right in pairs:
        a, b = parse_term(sig, left), parse_term(sig, right)
        assert not diagrams_equal(a, b)
        assert certificate(a, b)
    for spec in ({"kind": "finrel", "sorts": {"X": 2, "Y": 1}},
                 {"kind": "wrel", "semiring": "nat-trunc-3", "sorts": {"X": 2, "Y": 1}}):
        C = build_model(spec)
        for _ in range(60):
            t = random_term(sig, rng, layers=rng.randint(2, 5), max_width=3)
            u = rewrite(t, rng, steps=2)
            sorts = {"A": ["X"], "B": rng.choice([["X"], ["Y"], ["X", "Y"]])}
            gens = {}
            for name, (dom, cod) in sig.generators.items():
                d = tuple(s for n in dom for s in C.word(sorts[n]))
                k = tuple(s for n in cod for s in C.word(sorts[n]))
                gens[name] = C.random_hom(d, k, rng)
            assignment = {"sorts": sorts, "generators": gens}
            assert evaluate(t, assignment, C) == evaluate(u, assignment, C)


def test_criterion_10_frobenius_and_bialgebraic_force_connected():
    point = build_model({"kind": "finrel", "sorts": {"X": 1}})
    verdicts = {n: predicate(point, n, TWO).status for n in ("frobenius", "bialgebraic", "connected")}
    assert verdicts == {"frobenius": PASS, "bialgebraic": PASS, "connected": PASS}
    for kind in STOCK:
        C = build_model({"kind": kind, "sorts": {"X": 2}})
        v = classify(C, ONE, predicates=["frobenius", "bialgebraic", "connected"], derived=False).verdicts()
        if v["frobenius"] == PASS and v["bialgebraic"] == PASS:
            assert v["connected"] != COUNTEREXAMPLE, kind
