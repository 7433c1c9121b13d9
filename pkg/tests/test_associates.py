import pytest

from conftest import CORPUS, oracle, ring
from divgraph.associates import (Assoc, beta_partition, is_associate, is_presimplifiable,
                                 is_strong_associate, is_strongly_associate_ring, is_very_strong_associate)

RELATIONS = {"assoc": is_associate, "s-assoc": is_strong_associate, "vs-assoc": is_very_strong_associate}


@pytest.mark.parametrize("spec", CORPUS)
def test_relations_match_oracle(spec):
    R, O = ring(spec), oracle(spec)
    for name, fn in RELATIONS.items():
        rel = O.relation(name)
        for a in R.elements:
            for b in R.elements:
                assert fn(R, a, b) == rel(a, b), (name, R.name(a), R.name(b))


@pytest.mark.parametrize("spec", CORPUS)
def test_relation_inclusions(spec):
    # vs-assoc inside s-assoc inside assoc
    R = ring(spec)
    for a in R.elements:
        for b in R.elements:
            if is_very_strong_associate(R, a, b):
                assert is_strong_associate(R, a, b)
            if is_strong_associate(R, a, b):
                assert is_associate(R, a, b)


@pytest.mark.parametrize("spec", CORPUS)
def test_partitions_refine_along_the_chain(spec):
    R = ring(spec)
    chain = [beta_partition(R, k) for k in (Assoc.NONE, Assoc.VERY_STRONG, Assoc.STRONG, Assoc.ASSOC)]
    for fine, coarse in zip(chain, chain[1:]):
        assert fine.refines(coarse)
    flat = sorted(a for cls in chain[-1].classes for a in cls)
    assert flat == list(R.elements)


def test_z4z4_idempotent_pair_not_associate():
    R = ring("Prod(Zmod(4),Zmod(4))")
    a, b = R.element("(1,0)"), R.element("(1,2)")
    assert not is_associate(R, a, b)


def test_zero_is_self_very_strong():
    R = ring("Zmod(6)")
    assert is_very_strong_associate(R, 0, 0)
    # 3 = 3*3 with 3 a non-unit, so 3 is not very strongly associate to itself
    assert not is_very_strong_associate(R, 3, 3)
    assert beta_partition(R, Assoc.VERY_STRONG).class_of(3) == (3,)


@pytest.mark.parametrize("spec,expected", [
    ("Zmod(8)", True), ("Zmod(9)", True), ("PolyQ(Zmod(2),x^2+x+1)", True), ("PolyQ(Zmod(4),x^2)", True),
    ("Zmod(6)", False), ("Zmod(12)", False), ("Prod(Zmod(2),Zmod(2))", False),
])
def test_presimplifiable(spec, expected):
    R = ring(spec)
    v = is_presimplifiable(R)
    assert v.holds is expected
    if not expected:
        x, y = v.witness
        assert x != R.zero and not R.is_unit(y) and R.mul(x, y) == x


@pytest.mark.parametrize("spec", CORPUS)
def test_presimplifiable_matches_definition(spec):
    R, O = ring(spec), oracle(spec)
    brute = all(x == R.zero or y in O.units or O.mul(x, y) != x for x in O.E for y in O.E)
    assert bool(is_presimplifiable(R)) == brute


@pytest.mark.parametrize("spec", CORPUS)
def test_strongly_associate_ring(spec):
    R, O = ring(spec), oracle(spec)
    brute = all(O.strong(a, b) for a in O.E for b in O.E if O.assoc(a, b))
    v = is_strongly_associate_ring(R)
    assert v.holds == brute
    if not brute:
        a, b = v.witness
        assert O.assoc(a, b) and not O.strong(a, b)


def test_assoc_parse_aliases():
    assert Assoc.parse("s-assoc") is Assoc.STRONG
    assert Assoc.parse("vs-assoc") is Assoc.VERY_STRONG
    with pytest.raises(ValueError):
        Assoc.parse("bogus")
