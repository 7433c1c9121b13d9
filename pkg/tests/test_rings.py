import json

import numpy as np
import pytest

from conftest import CORPUS, oracle, ring
from divgraph.rings import (AxiomViolation, NonMonicModulus, RingError, RingTooLarge, SpecSyntaxError,
                            TableRing, build_ring, load_table)


def test_zmod6_units():
    R = ring("Zmod(6)")
    assert R.units == {1, 5}
    assert R.nonunits == (0, 2, 3, 4)


def test_product_units_and_names():
    R = ring("Prod(Zmod(2),Zmod(3))")
    assert sorted(R.name(u) for u in R.units) == ["(1,1)", "(1,2)"]
    assert R.element("(1,2)") in R.units
    assert R.name(R.one) == "(1,1)"


def test_f4_multiplication():
    R = ring("PolyQ(Zmod(2),x^2+x+1)")
    x = R.element("x")
    assert R.name(R.mul(x, x)) == "1+x"
    assert R.units == frozenset(range(1, 4))


def test_poly_over_z4_names_roundtrip():
    R = ring("PolyQ(Zmod(4),x^2)")
    assert R.size == 16
    for a in R.elements:
        assert R.element(R.name(a)) == a
    x = R.element("x")
    assert R.mul(x, x) == R.zero
    assert R.name(R.mul(R.element("2"), x)) == "2x"


@pytest.mark.parametrize("spec", CORPUS)
def test_names_roundtrip_and_units_match_oracle(spec):
    R = ring(spec)
    assert [R.element(R.name(a)) for a in R.elements] == list(R.elements)
    assert R.units == oracle(spec).units
    assert R.name(R.zero) in ("0", ) or set(R.name(R.zero)) <= set("(0,)")


@pytest.mark.parametrize("spec", ["Zmod(8)", "Prod(Zmod(2),Zmod(4))", "PolyQ(Zmod(3),x^2+1)"])
def test_tables_agree_with_scalar_ops(spec):
    R = ring(spec)
    for a in R.elements:
        for b in R.elements:
            assert R.mul_table[a, b] == R.mul(a, b)
            assert R.add_table[a, b] == R.add(a, b)


def test_untabulated_ring_matches_tabulated():
    big = build_ring("Zmod(12)", table_threshold=4)
    small = ring("Zmod(12)")
    assert all(big.mul(a, b) == small.mul(a, b) for a in range(12) for b in range(12))


@pytest.mark.parametrize("spec,error", [
    ("Zmod(1)", RingError), ("Zmod(0)", RingError), ("Foo(3)", SpecSyntaxError),
    ("Prod(Zmod(2))", SpecSyntaxError), ("Zmod(6)x", SpecSyntaxError),
    ("PolyQ(Zmod(4),2x^2+1)", NonMonicModulus), ("Zmod(5000)", RingTooLarge),
])
def test_bad_specs(spec, error):
    with pytest.raises(error):
        build_ring(spec)


def test_max_size_is_configurable():
    with pytest.raises(RingTooLarge):
        build_ring("Zmod(30)", max_size=16)


def test_power_cycles():
    c = ring("Zmod(4)").power_cycle(2)
    assert (c.preperiod, c.period) == (2, 1)
    c = ring("Zmod(5)").power_cycle(2)
    assert (c.preperiod, c.period) == (1, 4)
    assert [c.power(k) for k in range(1, 9)] == [2, 4, 3, 1, 2, 4, 3, 1]


@pytest.mark.parametrize("spec", ["Zmod(12)", "Prod(Zmod(2),Zmod(4))", "PolyQ(Zmod(2),x^3)"])
def test_power_cycle_matches_repeated_multiplication(spec):
    R = ring(spec)
    for a in R.elements:
        c = R.power_cycle(a)
        p = a
        for k in range(1, 3 * R.size):
            assert c.power(k) == p
            p = R.mul(p, a)


def _write(tmp_path, doc):
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(doc))
    return path


def test_table_ring_from_file(tmp_path):
    z3 = ring("Zmod(3)")
    doc = {"size": 3, "add": z3.add_table.tolist(), "mul": z3.mul_table.tolist(), "one": 1, "zero": 0,
           "names": ["o", "e", "f"]}
    path = _write(tmp_path, doc)
    R = build_ring(f"Table({path.name})", base_dir=tmp_path)
    assert R.size == 3 and R.units == {1, 2}
    assert R.element("f") == 2
    assert load_table(path).size == 3


def test_table_axiom_violation_names_witness():
    with pytest.raises(AxiomViolation) as info:
        TableRing(np.array([[0, 1], [1, 0]]), np.array([[0, 0], [0, 0]]), 1, 0)
    assert info.value.axiom == "multiplicative identity"
    assert info.value.witness


def test_table_distributivity_violation(tmp_path):
    # Z/3 addition with a multiplication that is commutative and unital but not distributive
    z3 = ring("Zmod(3)")
    mul = z3.mul_table.copy()
    mul[2, 2] = 2
    doc = {"size": 3, "add": z3.add_table.tolist(), "mul": mul.tolist(), "one": 1, "zero": 0}
    with pytest.raises(AxiomViolation):
        load_table(_write(tmp_path, doc))


def test_table_missing_field(tmp_path):
    with pytest.raises(RingError):
        load_table(_write(tmp_path, {"size": 1}))


def test_element_out_of_range():
    with pytest.raises(RingError):
        ring("Zmod(4)").element(7)
    with pytest.raises(RingError):
        ring("Zmod(4)").element("seven")
