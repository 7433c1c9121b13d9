"""
Five notions of irreducible
===========================

Very strongly irreducible => m-irreducible => strongly irreducible =>
irreducible, and prime => irreducible.  In rings with zero divisors the
arrows can be strict; a census over Z/n shows where.
"""

from collections import Counter

from divgraph import build_ring, classify

for n in (6, 8, 12, 18, 30, 36):
    R = build_ring(f"Zmod({n})")
    tally = Counter()
    for a in R.nonunits:
        p = classify(R, a)
        tally["prime"] += p.prime
        tally["irr"] += p.irreducible
        tally["s-irr"] += p.strong
        tally["m-irr"] += p.m_irreducible
        tally["vs-irr"] += p.very_strong
    print(f"Zmod({n:>2})  non-units={len(R.nonunits):>2} ", "  ".join(f"{k}={v}" for k, v in tally.items()))

# Z/6: 2 = 2*4 and 4 = 4*4, so neither is very strongly irreducible,
# yet both generate maximal principal ideals
R = build_ring("Zmod(6)")
for a in (2, 3, 4):
    p = classify(R, a)
    print(R.name(a), "m-irr" if p.m_irreducible else "", "vs-irr" if p.very_strong else "(not vs-irr)")

# in a présimplifiable ring such as Z/8 the notions collapse
R = build_ring("Zmod(8)")
print({R.name(a): classify(R, a).very_strong == classify(R, a).irreducible for a in R.nonunits})
