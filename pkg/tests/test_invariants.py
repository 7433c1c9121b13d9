"""Randomised invariants (hypothesis) over generated rings and elements."""

from functools import lru_cache

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import CORPUS, ring
from divgraph.associates import Assoc
from divgraph.atoms import Atom, classify
from divgraph.common import INF
from divgraph.factorization import enumerate_factorizations
from divgraph.graphs import (build_divisor_graph, check_quotient, clique_number, degl, divisor_graph,
                             factorization_subgraph, is_subgraph_of, phi, pseudo_clique_number)
from divgraph.rings import TableRing, build_ring
from oracles import Oracle

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

zmod_specs = st.integers(2, 40).map(lambda n: f"Zmod({n})")
prod_specs = st.tuples(st.integers(2, 6), st.integers(2, 6)).map(lambda t: f"Prod(Zmod({t[0]}),Zmod({t[1]}))")
any_specs = st.one_of(zmod_specs, prod_specs, st.sampled_from(CORPUS))
alphas = st.sampled_from(list(Atom))
betas = st.sampled_from(list(Assoc))


@lru_cache(maxsize=None)
def _oracle(spec):
    return Oracle(ring(spec))


@SETTINGS
@given(any_specs, st.data())
def test_ring_axioms_on_random_triples(spec, data):
    R = ring(spec)
    el = st.integers(0, R.size - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert R.mul(a, b) == R.mul(b, a)
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(a, R.one) == a and R.add(a, R.zero) == a


@SETTINGS
@given(st.one_of(st.integers(2, 30).map(lambda n: f"Zmod({n})"), prod_specs), st.data())
def test_random_rings_classify_like_the_oracle(spec, data):
    R = ring(spec)
    O = _oracle(spec)
    x = data.draw(st.sampled_from(R.nonunits))
    p = classify(R, x)
    f = O.flags(x)
    assert (p.prime, p.irreducible, p.strong, p.m_irreducible, p.very_strong) == \
        (f["prime"], f["irr"], f["s-irr"], f["m-irr"], f["vs-irr"])


@SETTINGS
@given(any_specs, alphas, betas, st.data())
def test_degree_sum_identity(spec, alpha, beta, data):
    R = ring(spec)
    x = data.draw(st.sampled_from(R.nonunits))
    g = divisor_graph(R, x, alpha, beta)
    total = sum((degl(g, v) for v in g.vertices), 0)
    if total != INF:
        assert total == 2 * len(g.edges) + g.loop_total
    else:
        assert g.loop_total == INF
    assert clique_number(g) <= len(g.vertices)


@SETTINGS
@given(any_specs, betas, st.data())
def test_alpha_chain_gives_subgraphs(spec, beta, data):
    R = ring(spec)
    x = data.draw(st.sampled_from(R.nonunits))
    chain = [Atom.VERY_STRONG, Atom.M_IRREDUCIBLE, Atom.STRONG, Atom.IRREDUCIBLE, Atom.ANY]
    graphs = [divisor_graph(R, x, a, beta) for a in chain]
    for small, big in zip(graphs, graphs[1:]):
        assert is_subgraph_of(small, big)
    assert is_subgraph_of(divisor_graph(R, x, Atom.PRIME, beta), graphs[3])


@SETTINGS
@given(any_specs, alphas, st.data())
def test_beta_chain_gives_quotients(spec, alpha, data):
    R = ring(spec)
    x = data.draw(st.sampled_from(R.nonunits))
    chain = [Assoc.NONE, Assoc.VERY_STRONG, Assoc.STRONG, Assoc.ASSOC]
    graphs = [divisor_graph(R, x, alpha, b) for b in chain]
    for fine, coarse in zip(graphs, graphs[1:]):
        v = check_quotient(fine, coarse)
        assert v.holds, v.note
        assert len(coarse.vertices) <= len(fine.vertices)


@SETTINGS
@given(any_specs, alphas, betas, st.data())
def test_factorizations_are_pseudo_cliques_of_weight_phi(spec, alpha, beta, data):
    R = ring(spec)
    x = data.draw(st.sampled_from(R.nonunits))
    g = divisor_graph(R, x, alpha, beta)
    omega = pseudo_clique_number(g)
    for f in enumerate_factorizations(R, x, alpha, beta, 5, limit=30).factorizations:
        s = factorization_subgraph(g, f)
        assert s.inside(g)
        assert s.weight == phi(len(f), len(s.vertices)) <= omega


@SETTINGS
@given(any_specs, alphas, betas, st.integers(1, 4), st.data())
def test_enumeration_grows_with_the_cap(spec, alpha, beta, cap, data):
    R = ring(spec)
    x = data.draw(st.sampled_from(R.nonunits))
    small = enumerate_factorizations(R, x, alpha, beta, cap)
    big = enumerate_factorizations(R, x, alpha, beta, cap + 1)
    keys = lambda en: {f.classes for f in en.factorizations}
    assert keys(small) <= keys(big)
    assert keys(small) == {f.classes for f in big.factorizations if len(f) <= cap}
    assert small.truncated == (len(keys(big)) > len(keys(small)) or big.truncated)


@SETTINGS
@given(st.sampled_from([s for s in CORPUS if ring(s).size <= 16]), st.randoms(use_true_random=False))
def test_relabelled_table_ring_is_isomorphic(spec, rnd):
    """Shuffling element ids (keeping 0 and 1 arbitrary) changes nothing structural."""
    R = ring(spec)
    perm = list(range(R.size))
    rnd.shuffle(perm)
    inv = np.argsort(perm)
    p = np.array(perm)
    add = p[R.add_table[np.ix_(inv, inv)]]
    mul = p[R.mul_table[np.ix_(inv, inv)]]
    T = TableRing(add, mul, int(p[R.one]), int(p[R.zero]), spec="Table(shuffled)")
    assert T.units == {int(p[u]) for u in R.units}
    for x in R.nonunits:
        a, b = classify(R, x), classify(T, int(p[x]))
        assert (a.prime, a.irreducible, a.strong, a.m_irreducible, a.very_strong) == \
            (b.prime, b.irreducible, b.strong, b.m_irreducible, b.very_strong)
        g = build_divisor_graph(R, x, Atom.IRREDUCIBLE, Assoc.STRONG)
        h = build_divisor_graph(T, int(p[x]), Atom.IRREDUCIBLE, Assoc.STRONG)
        assert len(g.vertices) == len(h.vertices) and len(g.edges) == len(h.edges)
        assert sorted(g.loops.values()) == sorted(h.loops.values())


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 200))
def test_zmod_units_are_coprime_residues(n):
    from math import gcd
    R = build_ring(f"Zmod({n})")
    assert R.units == {a for a in range(n) if gcd(a, n) == 1}
