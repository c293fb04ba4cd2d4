"""Graphviz DOT text for term graphs.

Interface inputs and outputs are small nodes on the left and right, each
generator occurrence is a box, and a wire consumed exactly once is a single
edge.  A wire consumed zero times or several times gets its own junction
point, so copying shows as a fork and discarding as a dead end.  The text
is built from the canonical form, hence equal diagrams print identically.
"""
from __future__ import annotations

from .termgraph import TermGraph, canonical, term_graph


def _quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(term, name="diagram"):
    """DOT text for a term or a term graph."""
    g = canonical(term if isinstance(term, TermGraph) else term_graph(term))
    fan = g.fanout()
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [fontname=Helvetica];"]

    def producer(w):
        return f"in{w[1]}" if w[0] == "in" else f"n{w[1]}"

    def port_of(w):
        return "" if w[0] == "in" else f"o{w[2]}"

    for i, s in enumerate(g.dom):
        lines.append(f"  in{i} [shape=plaintext, label={_quote(s)}];")
    for j, (label, _, _) in enumerate(g.nodes):
        lines.append(f"  n{j} [shape=box, label={_quote(label)}];")
    for k, s in enumerate(g.cod):
        lines.append(f"  out{k} [shape=plaintext, label={_quote(s)}];")

    junction = {}
    for w in sorted(fan, key=lambda w: (w[0] != "in",) + tuple(w[1:])):
        if fan[w] != 1:
            jid = f"w{len(junction)}"
            junction[w] = jid
            lines.append(f"  {jid} [shape=point];")
            lines.append(f"  {producer(w)} -> {jid}{_tail(port_of(w), arrow=False)};")

    def edge(w, target, label):
        src = junction.get(w)
        if src is None:
            lines.append(f"  {producer(w)} -> {target}{_tail(port_of(w), label)};")
        else:
            lines.append(f"  {src} -> {target}{_tail('', label)};")

    for j, (_, ins, _) in enumerate(g.nodes):
        for k, w in enumerate(ins):
            edge(w, f"n{j}", f"i{k}")
    for k, w in enumerate(g.outputs):
        edge(w, f"out{k}", "")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tail(port, label=None, arrow=True):
    attrs = [] if arrow else ["arrowhead=none"]
    if port:
        attrs.append(f"taillabel={_quote(port)}")
    if label:
        attrs.append(f"headlabel={_quote(label)}")
    return f" [{', '.join(attrs)}]" if attrs else ""
