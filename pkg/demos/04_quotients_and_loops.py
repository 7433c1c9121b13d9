"""
Coarsening the associate relation
=================================

Passing from a finer to a coarser associate relation glues vertices
together.  An edge between glued vertices turns into a loop.
"""

from divgraph import Assoc, Atom, build_divisor_graph, build_ring
from divgraph.graphs import check_quotient, merged_edges
from divgraph.common import fmt_ext


def show(g):
    R = g.ring
    print(" ", g.label(), "V =", [R.name(v) for v in g.vertices],
          "E =", [f"{R.name(a)}-{R.name(b)}" for a, b in sorted(g.edges)],
          "loops =", {R.name(v): fmt_ext(n) for v, n in g.loops.items()})


for spec, x, alpha in (("Zmod(6)", "0", Atom.IRREDUCIBLE), ("Zmod(16)", "12", Atom.ANY)):
    R = build_ring(spec)
    print(spec, "x =", x)
    chain = [Assoc.NONE, Assoc.VERY_STRONG, Assoc.STRONG, Assoc.ASSOC]
    graphs = [build_divisor_graph(R, R.element(x), alpha, b) for b in chain]
    for g in graphs:
        show(g)
    for fine, coarse in zip(graphs, graphs[1:]):
        glued = merged_edges(fine, coarse)
        if glued:
            print(f"  {fine.beta.value} -> {coarse.beta.value}: edges turned loops",
                  [f"{R.name(a)}-{R.name(b)}" for a, b in glued],
                  "quotient ok" if check_quotient(fine, coarse).holds else "quotient BROKEN")
    print()
