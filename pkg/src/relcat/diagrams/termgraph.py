"""Term graphs: the free gs-monoidal semantics of terms, and their canonical forms.

A term is read as a list of wires.  Each generator occurrence becomes a node
that consumes a list of wires and produces fresh ones; ``copy`` reuses a wire,
``discard`` drops it, ``sym`` permutes the list.  Nodes whose outputs are never
used stay in the graph, so ``f ; discard`` differs from ``discard``.

A wire is named by its producer: ``("in", i)`` for the i-th interface input or
``("node", j, p)`` for output port ``p`` of node ``j``.  Two terms denote the
same arrow of the free gs-monoidal category exactly when their graphs are
isomorphic with the interfaces fixed; :func:`canonical` picks one
representative per isomorphism class by colour refinement and
individualisation.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core.expr import Copy, Discard, Gen, Id, Par, Seq, Sym
from ..errors import ArityMismatch, TypeMismatch
from .syntax import DiagramTerm, typecheck


@dataclass(frozen=True)
class TermGraph:
    dom: tuple
    cod: tuple
    nodes: tuple      # (generator name, input wires, number of outputs)
    outputs: tuple    # one wire per codomain position

    def fanout(self):
        """How many times each wire is consumed (by nodes or the output interface)."""
        count = {("in", i): 0 for i in range(len(self.dom))}
        for j, (_, _, n_out) in enumerate(self.nodes):
            for p in range(n_out):
                count[("node", j, p)] = 0
        for _, ins, _ in self.nodes:
            for w in ins:
                count[w] += 1
        for w in self.outputs:
            count[w] += 1
        return count

    def relabel(self, order):
        """The graph with node ``order[k]`` moved to position ``k``."""
        pos = {old: new for new, old in enumerate(order)}

        def wire(w):
            return w if w[0] == "in" else ("node", pos[w[1]], w[2])

        nodes = tuple((self.nodes[j][0], tuple(wire(w) for w in self.nodes[j][1]), self.nodes[j][2])
                      for j in order)
        return TermGraph(self.dom, self.cod, nodes, tuple(wire(w) for w in self.outputs))

    def key(self):
        return (self.dom, self.cod, self.nodes, self.outputs)


def term_graph(term, sig=None):
    """The term graph of a :class:`DiagramTerm` (or of a bare expression with ``sig``)."""
    if isinstance(term, DiagramTerm):
        sig, expr, dom, cod = term.signature, term.expr, term.dom, term.cod
    else:
        expr = term
        dom, cod = typecheck(sig, expr)
    nodes = []

    def run(e, wires):
        if isinstance(e, Gen):
            gdom, gcod = sig.gen(e.name)
            j = len(nodes)
            nodes.append((e.name, tuple(wires), len(gcod)))
            return [("node", j, p) for p in range(len(gcod))]
        if isinstance(e, Id):
            return wires
        if isinstance(e, Sym):
            k = len(e.left)
            return wires[k:] + wires[:k]
        if isinstance(e, Copy):
            return wires + wires
        if isinstance(e, Discard):
            return []
        if isinstance(e, Seq):
            return run(e.second, run(e.first, wires))
        if isinstance(e, Par):
            k = len(typecheck(sig, e.left)[0])
            return run(e.left, wires[:k]) + run(e.right, wires[k:])
        raise ArityMismatch(f"{e!r} is not allowed in a gs term", subterm=repr(e))

    outputs = run(expr, [("in", i) for i in range(len(dom))])
    return TermGraph(tuple(dom), tuple(cod), tuple(nodes), tuple(outputs))


def _rank(signatures):
    order = {s: r for r, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _refine(g, colours, consumers):
    """Colour refinement until the number of colour classes stops growing."""
    while True:
        sigs = []
        for j, (label, ins, n_out) in enumerate(g.nodes):
            feats = []
            for k, w in enumerate(ins):
                feats.append(("i", k, w[1], -1) if w[0] == "in" else ("n", k, colours[w[1]], w[2]))
            for p, uses in enumerate(consumers[j]):
                for m, k in uses:
                    feats.append(("c", p, colours[m], k) if m >= 0 else ("o", p, -1, k))
            sigs.append((colours[j], tuple(sorted(feats))))
        new = _rank(sigs)
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def canonical(g):
    """The least relabelling of ``g`` over the individualisation search tree."""
    n = len(g.nodes)
    if n == 0:
        return g
    consumers = [[[] for _ in range(n_out)] for (_, _, n_out) in g.nodes]
    for m, (_, ins, _) in enumerate(g.nodes):
        for k, w in enumerate(ins):
            if w[0] == "node":
                consumers[w[1]][w[2]].append((m, k))
    for k, w in enumerate(g.outputs):
        if w[0] == "node":
            consumers[w[1]][w[2]].append((-1, k))
    colours = _rank([(label, len(ins), n_out) for (label, ins, n_out) in g.nodes])
    best = [None]

    def search(colours):
        colours = _refine(g, colours, consumers)
        if len(set(colours)) == n:
            cand = g.relabel(sorted(range(n), key=lambda j: colours[j]))
            if best[0] is None or cand.key() < best[0].key():
                best[0] = cand
            return
        cells = {}
        for j, c in enumerate(colours):
            cells.setdefault(c, []).append(j)
        target = min(c for c, members in cells.items() if len(members) > 1)
        seen = set()
        for j in cells[target]:
            # swapping two unused copies of the same node is an automorphism,
            # so one branch per such twin class is enough
            twin = None if any(consumers[j]) else (g.nodes[j][0], g.nodes[j][1])
            if twin is not None:
                if twin in seen:
                    continue
                seen.add(twin)
            split = [2 * c + 1 for c in colours]
            split[j] = 2 * colours[j]
            search(_rank(split))

    search(colours)
    return best[0]


def to_term_graph(term, sig=None):
    """The canonical term graph of a term."""
    return canonical(term_graph(term, sig))


def canonical_key(term, sig=None):
    return canonical(term_graph(term, sig)).key()


def diagrams_equal(t1, t2):
    """Whether two terms denote the same arrow of the free gs-monoidal category."""
    if (t1.dom, t1.cod) != (t2.dom, t2.cod):
        raise TypeMismatch(f"terms have different types: {list(t1.dom)} -> {list(t1.cod)} "
                           f"and {list(t2.dom)} -> {list(t2.cod)}")
    return canonical_key(t1) == canonical_key(t2)


def certificate(t1, t2):
    """A short reason why two same-typed terms differ, or None when they are equal."""
    g1, g2 = canonical(term_graph(t1)), canonical(term_graph(t2))
    if g1.key() == g2.key():
        return None
    c1 = sorted(label for label, _, _ in g1.nodes)
    c2 = sorted(label for label, _, _ in g2.nodes)
    if c1 != c2:
        return f"generator occurrences differ: {c1} vs {c2}"
    f1, f2 = sorted(g1.fanout().values()), sorted(g2.fanout().values())
    if f1 != f2:
        return f"wire fan-out profiles differ: {f1} vs {f2}"
    return "no wiring-preserving bijection between the generator occurrences"
