import json
import re
from math import inf

import pytest

import oracles
from conftest import SMALL, oracle, ring
from divgraph.associates import Assoc
from divgraph.atoms import Atom
from divgraph.common import UnitElementError
from divgraph.factorization import enumerate_factorizations
from divgraph.graphs import (build_divisor_graph, check_quotient, clique_number, degl, degree, diameter,
                             distance, divisor_graph, factorization_subgraph, is_pseudo_clique,
                             is_subgraph_of, maximal_cliques, merged_edges, phi, pseudo_clique_number,
                             reduced_graph, to_dict, to_dot)

ALPHAS = [Atom.ANY, Atom.PRIME, Atom.IRREDUCIBLE, Atom.M_IRREDUCIBLE, Atom.VERY_STRONG]


@pytest.mark.parametrize("spec", SMALL)
@pytest.mark.parametrize("beta", list(Assoc), ids=lambda b: b.value)
def test_graph_matches_oracle(spec, beta):
    R, O = ring(spec), oracle(spec)
    for alpha in ALPHAS:
        for x in R.nonunits:
            verts, edges, loops = O.graph(x, alpha.value, beta.value)
            g = divisor_graph(R, x, alpha, beta)
            where = (R.name(x), alpha.value)
            assert list(g.vertices) == verts, where
            assert set(g.edges) == edges, where
            assert g.loops == loops, where
            assert clique_number(g) == oracles.clique_number(verts, edges)
            assert pseudo_clique_number(g) == oracles.pseudo_clique_number(verts, edges, loops)


def z2z2():
    R = ring("Prod(Zmod(2),Zmod(2))")
    return R, R.element("(0,0)"), R.element("(1,0)"), R.element("(0,1)")


@pytest.mark.parametrize("alpha", [Atom.IRREDUCIBLE, Atom.STRONG, Atom.M_IRREDUCIBLE], ids=lambda a: a.value)
@pytest.mark.parametrize("beta", [Assoc.ASSOC, Assoc.STRONG], ids=lambda b: b.value)
def test_z2z2_worked_example(alpha, beta):
    R, zero, p, q = z2z2()
    g = build_divisor_graph(R, zero, alpha, beta)
    assert set(g.vertices) == {p, q}
    assert g.edges == {(min(p, q), max(p, q))}
    assert g.loops == {p: inf, q: inf}
    for y in (p, q):
        h = build_divisor_graph(R, y, alpha, beta)
        assert h.vertices == (y,) and not h.edges and h.loops == {y: inf}


def test_units_have_no_graph():
    with pytest.raises(UnitElementError):
        build_divisor_graph(ring("Zmod(6)"), 1, Atom.IRREDUCIBLE, Assoc.ASSOC)


def test_zmod4_small_graphs():
    R = ring("Zmod(4)")
    g = build_divisor_graph(R, 2, Atom.ANY, Assoc.STRONG)
    assert g.vertices == (2,) and not g.edges and g.loops == {2: 0}
    g = build_divisor_graph(R, 0, Atom.ANY, Assoc.ASSOC)
    assert g.vertices == (0, 2)
    assert degree(g, 2) == 1 and degl(g, 2) == inf


def test_degree_of_unknown_vertex():
    g = build_divisor_graph(ring("Zmod(4)"), 2, Atom.ANY, Assoc.STRONG)
    with pytest.raises(KeyError):
        degree(g, 3)


def test_distances_and_diameter():
    R = ring("Zmod(12)")
    g = build_divisor_graph(R, 0, Atom.IRREDUCIBLE, Assoc.ASSOC)
    for a in g.vertices:
        assert distance(g, a, a) == 0
        for b in g.vertices:
            assert distance(g, a, b) == distance(g, b, a)
    d = diameter(g)
    assert d == max(distance(g, a, b) for a in g.vertices for b in g.vertices)


def test_disconnected_diameter_is_infinite():
    R = ring("Zmod(8)")
    g = build_divisor_graph(R, 0, Atom.IRREDUCIBLE, Assoc.NONE)
    # 2 and 6 both divide 0; whether they are adjacent decides connectivity
    assert diameter(g) == (1 if g.edges else inf)


def test_phi_bounds():
    for n in range(1, 12):
        for s in range(1, n + 1):
            assert n - 1 <= phi(n, s) <= n * (n - 1) // 2
    assert phi(4, 1) == 3 and phi(4, 4) == 6
    with pytest.raises(ValueError):
        phi(3, 0)
    with pytest.raises(ValueError):
        phi(2, 3)


def test_factorization_subgraph_weight():
    R = ring("Zmod(16)")
    g = build_divisor_graph(R, 8, Atom.IRREDUCIBLE, Assoc.NONE)
    en = enumerate_factorizations(R, 8, Atom.IRREDUCIBLE, Assoc.NONE, 4)
    assert en.factorizations
    for f in en.factorizations:
        s = factorization_subgraph(g, f)
        assert s.inside(g)
        assert s.weight == phi(len(f), len(s.vertices))


def test_factorization_subgraph_rejects_foreign_factorization():
    R = ring("Zmod(16)")
    g = build_divisor_graph(R, 8, Atom.IRREDUCIBLE, Assoc.NONE)
    f = enumerate_factorizations(R, 4, Atom.IRREDUCIBLE, Assoc.NONE, 3).factorizations[0]
    with pytest.raises(ValueError):
        factorization_subgraph(g, f)


@pytest.mark.parametrize("spec", ["Zmod(6)", "Zmod(12)", "Prod(Zmod(2),Zmod(4))", "PolyQ(Zmod(4),x^2)"])
def test_subgraph_and_quotient_relations(spec):
    R = ring(spec)
    chain = [Atom.VERY_STRONG, Atom.M_IRREDUCIBLE, Atom.STRONG, Atom.IRREDUCIBLE, Atom.ANY]
    betas = [Assoc.NONE, Assoc.VERY_STRONG, Assoc.STRONG, Assoc.ASSOC]
    for x in R.nonunits:
        for beta in betas:
            for a, b in zip(chain, chain[1:]):
                assert is_subgraph_of(divisor_graph(R, x, a, beta), divisor_graph(R, x, b, beta))
        for alpha in chain:
            for fine, coarse in zip(betas, betas[1:]):
                assert check_quotient(divisor_graph(R, x, alpha, fine), divisor_graph(R, x, alpha, coarse)).holds


def test_quotient_turns_edge_into_loop_in_zmod6():
    R = ring("Zmod(6)")
    fine = build_divisor_graph(R, 0, Atom.IRREDUCIBLE, Assoc.VERY_STRONG)
    coarse = build_divisor_graph(R, 0, Atom.IRREDUCIBLE, Assoc.STRONG)
    assert merged_edges(fine, coarse) == [(2, 4)]
    assert check_quotient(fine, coarse).holds


def test_quotient_direction_is_checked():
    R = ring("Zmod(6)")
    fine = build_divisor_graph(R, 0, Atom.IRREDUCIBLE, Assoc.VERY_STRONG)
    coarse = build_divisor_graph(R, 0, Atom.IRREDUCIBLE, Assoc.STRONG)
    with pytest.raises(ValueError):
        check_quotient(coarse, fine)


def test_reduced_graph_and_pseudo_clique():
    R, zero, p, q = z2z2()
    g = build_divisor_graph(R, zero, Atom.IRREDUCIBLE, Assoc.ASSOC)
    r = reduced_graph(g)
    assert r.loop_total == 0 and r.edges == g.edges
    assert is_pseudo_clique(g) and is_pseudo_clique(r)
    assert maximal_cliques(r) == [tuple(sorted((p, q)))]
    assert pseudo_clique_number(g) == inf and pseudo_clique_number(r) == 1


def test_literal_equality():
    R = ring("Zmod(9)")
    a = build_divisor_graph(R, 0, Atom.IRREDUCIBLE, Assoc.ASSOC)
    b = build_divisor_graph(R, 0, Atom.VERY_STRONG, Assoc.ASSOC)
    assert a == b
    assert a != build_divisor_graph(R, 3, Atom.IRREDUCIBLE, Assoc.ASSOC)


def test_to_dict_is_json_and_consistent():
    R, zero, p, q = z2z2()
    g = build_divisor_graph(R, zero, Atom.IRREDUCIBLE, Assoc.ASSOC)
    doc = json.loads(json.dumps(to_dict(g)))
    assert doc["schema"] == 1
    assert doc["ring"] == "Prod(Zmod(2),Zmod(2))" and doc["x"] == "(0,0)"
    assert [v["name"] for v in doc["vertices"]] == [R.name(v) for v in g.vertices]
    assert all(v["loops"] == "inf" and v["degl"] == "inf" and v["deg"] == 1 for v in doc["vertices"])
    assert len(doc["edges"]) == 1
    assert doc["metrics"]["pseudo_clique_number"] == "inf"


DOT_LINE = re.compile(r'^  (v\d+ \[label="[^"]*"\];|v\d+ -- v\d+;|v(\d+) -- v\2 \[label="loops=(\d+|inf)"\];)$')


@pytest.mark.parametrize("spec", ["Prod(Zmod(2),Zmod(2))", "Zmod(12)", "PolyQ(Zmod(2),x^3)"])
def test_dot_is_well_formed(spec):
    R = ring(spec)
    for x in R.nonunits:
        g = build_divisor_graph(R, x, Atom.IRREDUCIBLE, Assoc.ASSOC)
        lines = to_dot(g).splitlines()
        assert lines[0].startswith('graph "G[irr,assoc](') and lines[0].endswith("{")
        assert lines[-1] == "}"
        assert all(DOT_LINE.match(line) for line in lines[1:-1]), lines
        declared = {int(m) for m in re.findall(r"^  v(\d+) \[", "\n".join(lines), re.M)}
        used = {int(m) for m in re.findall(r"v(\d+)", "\n".join(lines[1:-1]))}
        assert declared == set(g.vertices) and used <= declared
