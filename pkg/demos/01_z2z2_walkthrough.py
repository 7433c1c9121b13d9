"""
Divisor graphs of Z/2 x Z/2
===========================

The smallest ring where factorization goes wrong: (1,0) is idempotent, so
(1,0) = (1,0)^n for every n and lengths are unbounded.
"""

from divgraph import Assoc, Atom, build_divisor_graph, build_ring, property_report, to_dot
from divgraph.common import fmt_ext

R = build_ring("Prod(Zmod(2),Zmod(2))")
zero, p, q = (R.element(s) for s in ("(0,0)", "(1,0)", "(0,1)"))

# the two non-trivial idempotents are the irreducibles
g = build_divisor_graph(R, zero, Atom.IRREDUCIBLE, Assoc.ASSOC)
print(g.label(), "vertices:", [R.name(v) for v in g.vertices])
print("edges:", [(R.name(a), R.name(b)) for a, b in sorted(g.edges)])
print("loops:", {R.name(v): fmt_ext(n) for v, n in g.loops.items()})

# (0,0) = (1,0) * (0,1) * (1,0)^k for any k: one edge, infinitely many loops
for y in (p, q):
    h = build_divisor_graph(R, y, Atom.IRREDUCIBLE, Assoc.ASSOC)
    print(h.label(), "->", [R.name(v) for v in h.vertices], "loops", fmt_ext(h.loops[y]))

# with alpha = none, 0 itself divides 0 and joins the graph
g0 = build_divisor_graph(R, zero, Atom.ANY, Assoc.ASSOC)
print(g0.label(), "vertices:", [R.name(v) for v in g0.vertices])

# ring level: atomic and ACCP, yet no finiteness property survives the idempotents
rep = property_report(R)
for key in ("ACCP", "BFR", "FFR[assoc]", "HFR[irr]", "UFR[irr,assoc]", "presimplifiable"):
    print(f"{key:<16}", rep.verdicts[key])

print()
print(to_dot(g))
