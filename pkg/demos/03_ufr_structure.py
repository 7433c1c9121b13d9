"""
Which finite rings are unique factorization rings?
==================================================

Enumerate factorizations directly and compare with the structural answer:
fields, special principal ideal rings, and local rings with M^2 = 0.
"""

from divgraph import Assoc, Atom, build_ring, enumerate_factorizations, is_ufr, structure_class

specs = ["Zmod(5)", "Zmod(8)", "Zmod(27)", "PolyQ(Zmod(2),x^2+x+1)", "PolyQ(Zmod(2),x^3)",
         "Zmod(12)", "Prod(Zmod(2),Zmod(3))", "PolyQ(Zmod(4),x^2)"]

print(f"{'ring':<26}{'class':<8}UFR")
for spec in specs:
    R = build_ring(spec)
    print(f"{spec:<26}{structure_class(R).kind:<8}{is_ufr(R, Atom.IRREDUCIBLE, Assoc.ASSOC).holds}")

# Z/4[x]/(x^2) is local but its maximal ideal (2, x) needs two generators;
# 2x already has three different factorizations
R = build_ring("PolyQ(Zmod(4),x^2)")
en = enumerate_factorizations(R, R.element("2x"), Atom.IRREDUCIBLE, Assoc.ASSOC, 4)
for f in en.factorizations:
    print("2x =", f.render(R))

# in Z/27 every non-zero non-unit is a unit times a power of 3
R = build_ring("Zmod(27)")
for x in ("9", "18"):
    en = enumerate_factorizations(R, R.element(x), Atom.IRREDUCIBLE, Assoc.ASSOC, 5)
    print(x, "=", [f.render(R) for f in en.factorizations])
