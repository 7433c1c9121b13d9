"""Exhaustive checks of the divisor-graph and factorization theorems.

Each check is a universally quantified statement over a finite ring, so it
either holds on every instance or fails with a concrete, replayable
counterexample.  Checks fan out over corpus rings (optionally in worker
processes) and are merged in corpus order, so reports do not depend on the
number of workers.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .associates import Assoc, beta_partition, is_presimplifiable
from .atoms import IRREDUCIBLE_CHAIN, Atom, atom_set, check_hierarchy, classify, profiles
from .common import INF, fmt_ext
from .factorization import (element_scope, enumerate_factorizations, is_atomic_ring,
                            lengths_unbounded, longer_factorization_exists)
from .graphs import (check_quotient, degl, diameter, divisor_graph, factorization_subgraph, is_pseudo_clique,
                     is_subgraph_of, merged_edges, phi, pseudo_clique_as_graph, pseudo_clique_number,
                     reduced_graph)
from .props import (BETA_KINDS, ConsistencyError, ideal_powers_meet_in_zero, is_accp, is_bfr, is_df,
                    is_domain, is_ffr, is_field, is_hfr, is_ufr, is_wffr, powers_meet_in_zero,
                    structure_class)
from .rings import FiniteRing, RingError, build_ring

REPORT_SCHEMA_VERSION = 1
CORPUS_ENV = "DIVGRAPH_CORPUS"

DEFAULT_CORPUS = tuple(
    [f"Zmod({n})" for n in range(2, 17)]
    + ["Zmod(25)", "Zmod(27)", "Zmod(32)"]
    + [f"Prod(Zmod({a}),Zmod({b}))" for a, b in ((2, 2), (2, 3), (2, 4), (3, 3), (4, 4))]
    + ["PolyQ(Zmod(2),x^2)", "PolyQ(Zmod(2),x^3)", "PolyQ(Zmod(2),x^2+x+1)",
       "PolyQ(Zmod(3),x^2+1)", "PolyQ(Zmod(4),x^2)"]
)

THEOREMS = (
    "T-hierarchy", "T-zero", "T-collapse", "T-inclusions", "T-vsatomic", "T-matomic",
    "T-converse", "T-diameter", "T-phi", "T-accp", "T-bfr", "T-ffr", "T-wffr", "T-idf",
    "T-prop66", "T-noeth", "T-ufr", "T-z2z2",
)
BUILD_ID = "ring-build"

ALPHA_CHAIN = IRREDUCIBLE_CHAIN + (Atom.ANY,)            # each graph sits inside the next
BETA_CHAIN = (Assoc.NONE, Assoc.VERY_STRONG, Assoc.STRONG, Assoc.ASSOC)   # finest first
ALL_BETA = BETA_CHAIN
ALL_ALPHA = (Atom.ANY, Atom.PRIME) + IRREDUCIBLE_CHAIN


@dataclass
class SuiteConfig:
    include_zero: bool = False
    only: tuple[str, ...] | None = None
    jobs: int = 1
    phi_limit: int = 60          # factorizations per (x, α, β) in T-phi
    probe_cap: int = 12          # enumeration cap when lengths are unbounded
    ffr_target: int = 20         # distinct factorizations demanded when |E| is infinite
    ffr_max_size: int = 64
    max_examples: int = 10

    def selected(self) -> tuple[str, ...]:
        if not self.only:
            return THEOREMS
        unknown = [t for t in self.only if t not in THEOREMS]
        if unknown:
            raise ValueError(f"unknown theorem id(s): {', '.join(unknown)}")
        return tuple(t for t in THEOREMS if t in self.only)


@dataclass(frozen=True)
class Counterexample:
    ring: str
    x: str | None
    alpha: str | None
    beta: str | None
    detail: str

    def render(self) -> str:
        parts = [f"ring={self.ring}"]
        if self.x is not None:
            parts.append(f"x={self.x}")
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha}")
        if self.beta is not None:
            parts.append(f"beta={self.beta}")
        return " ".join(parts) + f": {self.detail}"

    def replay(self) -> str:
        """CLI invocation showing the offending object."""
        if self.x is None:
            return f"props --ring '{self.ring}'"
        cmd = f"graph --ring '{self.ring}' --x '{self.x}'"
        if self.alpha is not None:
            cmd += f" --alpha {self.alpha}"
        if self.beta is not None:
            cmd += f" --beta {self.beta}"
        return cmd

    def to_dict(self) -> dict:
        return {"ring": self.ring, "x": self.x, "alpha": self.alpha, "beta": self.beta,
                "detail": self.detail, "replay": self.replay()}


@dataclass
class TheoremReport:
    theorem: str
    domain: str
    passed: bool
    counterexamples: list[Counterexample]
    failure_count: int = 0
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        # timing is left out so reports are reproducible byte for byte
        return {"theorem": self.theorem, "domain": self.domain, "passed": self.passed,
                "failure_count": self.failure_count,
                "counterexamples": [c.to_dict() for c in self.counterexamples],
                "notes": list(self.notes)}


@dataclass
class _Partial:
    """One theorem on one ring."""

    instances: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    marks: dict = field(default_factory=dict)     # label -> example strings
    counts: dict = field(default_factory=dict)    # label -> int
    seconds: float = 0.0


class _Ctx:
    def __init__(self, ring: FiniteRing, config: SuiteConfig, part: _Partial):
        self.ring = ring
        self.cfg = config
        self.part = part
        self.scope = element_scope(ring, config.include_zero)
        self.nonzero = element_scope(ring, False)
        self.nonunits = ring.nonunits

    def check(self, ok: bool, x=None, alpha=None, beta=None, detail: str = "") -> bool:
        self.part.instances += 1
        if not ok:
            self.fail(x, alpha, beta, detail)
        return ok

    def fail(self, x=None, alpha=None, beta=None, detail: str = ""):
        ring = self.ring
        if x is not None and x == ring.zero and self.cfg.include_zero:
            detail += " (0 in scope)"
        self.part.failure_count += 1
        if len(self.part.failures) < self.cfg.max_examples:
            self.part.failures.append(Counterexample(
                ring.spec, None if x is None else ring.name(x),
                None if alpha is None else alpha.value, None if beta is None else beta.value, detail))

    def mark(self, label: str, text: str):
        self.part.marks.setdefault(label, []).append(text)

    def count(self, label: str, n: int = 1):
        self.part.counts[label] = self.part.counts.get(label, 0) + n

    def graph(self, x, alpha, beta):
        return divisor_graph(self.ring, x, alpha, beta)

    def where(self, x, alpha=None, beta=None) -> str:
        s = f"{self.ring.spec} x={self.ring.name(x)}"
        if alpha is not None:
            s += f" alpha={alpha.value}"
        if beta is not None:
            s += f" beta={beta.value}"
        return s


def _shape(g) -> str:
    return f"|V|={len(g.vertices)} |E|={len(g.edges)} loops={fmt_ext(g.loop_total)}"


def _is_k1(g, loops_ok: bool = False) -> bool:
    return len(g.vertices) == 1 and not g.edges and (loops_ok or g.loop_total == 0)


# -- individual checks -------------------------------------------------------

def t_hierarchy(c: _Ctx):
    bad = dict(check_hierarchy(c.ring))
    for a in c.nonunits:
        c.check(a not in bad, a, detail=bad.get(a, ""))


def t_zero(c: _Ctx):
    ring = c.ring
    p = classify(ring, ring.zero)
    field_, domain = is_field(ring), is_domain(ring)
    c.check(p.m_irreducible == field_, ring.zero, Atom.M_IRREDUCIBLE,
            detail=f"0 m-irreducible={p.m_irreducible} but field={field_}")
    c.check(p.irreducible == domain, ring.zero, Atom.IRREDUCIBLE,
            detail=f"0 irreducible={p.irreducible} but domain={domain}")


def t_collapse(c: _Ctx):
    if not is_presimplifiable(c.ring):
        c.part.notes.append(f"{c.ring.spec}: not présimplifiable, nothing to check")
        return
    c.count("présimplifiable rings")
    for x in c.nonzero:
        for beta in ALL_BETA:
            graphs = [c.graph(x, a, beta) for a in IRREDUCIBLE_CHAIN]
            for a, g in zip(IRREDUCIBLE_CHAIN[1:], graphs[1:]):
                c.check(g == graphs[0], x, a, beta,
                        detail=f"differs from the {IRREDUCIBLE_CHAIN[0].value} graph: {_shape(g)} vs {_shape(graphs[0])}")
        for alpha in IRREDUCIBLE_CHAIN:
            graphs = [c.graph(x, alpha, b) for b in BETA_KINDS]
            for b, g in zip(BETA_KINDS[1:], graphs[1:]):
                c.check(g == graphs[0], x, alpha, b, detail=f"differs from the {BETA_KINDS[0].value} graph")


def t_inclusions(c: _Ctx):
    for x in c.nonunits:
        for beta in ALL_BETA:
            for small, big in zip(ALPHA_CHAIN, ALPHA_CHAIN[1:]):
                g1, g2 = c.graph(x, small, beta), c.graph(x, big, beta)
                c.check(is_subgraph_of(g1, g2), x, small, beta, detail=f"not a subgraph of the {big.value} graph")
                if small is Atom.VERY_STRONG and g1 != g2:
                    c.mark("strict vs-irr inside m-irr", c.where(x, beta=beta))
            g1, g2 = c.graph(x, Atom.PRIME, beta), c.graph(x, Atom.IRREDUCIBLE, beta)
            c.check(is_subgraph_of(g1, g2), x, Atom.PRIME, beta, detail="prime graph not inside the irr graph")
        for alpha in ALL_ALPHA:
            for fine, coarse in zip(BETA_CHAIN, BETA_CHAIN[1:]):
                gf, gc = c.graph(x, alpha, fine), c.graph(x, alpha, coarse)
                v = check_quotient(gf, gc)
                c.check(v.holds, x, alpha, fine, detail=f"not a quotient onto {coarse.value}: {v.note}")
                merged = merged_edges(gf, gc)
                if merged:
                    a, b = merged[0]
                    c.mark(f"edge turned loop ({fine.value} to {coarse.value})",
                           f"{c.where(x, alpha)}: {c.ring.name(a)}-{c.ring.name(b)}")


def t_vsatomic(c: _Ctx):
    ring = c.ring
    prof = profiles(ring)
    units = sorted(ring.units)
    for x in c.scope:
        if not prof[x].very_strong:
            continue
        gs = c.graph(x, Atom.ANY, Assoc.STRONG)
        c.check(_is_k1(gs), x, Atom.ANY, Assoc.STRONG, detail=f"expected K1 without loops, got {_shape(gs)}")
        ga = c.graph(x, Atom.ANY, Assoc.ASSOC)
        c.check(_is_k1(ga), x, Atom.ANY, Assoc.ASSOC, detail=f"expected K1, got {_shape(ga)}")
        gn = c.graph(x, Atom.ANY, Assoc.NONE)
        orbit = {ring.mul(u, x) for u in units}
        c.check(set(gn.vertices) == orbit and gn.edge_count == 0, x, Atom.ANY, Assoc.NONE,
                detail=f"expected the edgeless unit orbit of x, got {_shape(gn)}")
        if len(orbit) != len(units):
            c.mark("vertex count |{λx}| below |U(R)| (set form asserted instead)",
                   f"{ring.spec} x={ring.name(x)}: {len(orbit)} < {len(units)}")


def t_matomic(c: _Ctx):
    prof = profiles(c.ring)
    for x in c.scope:
        if prof[x].m_irreducible:
            g = c.graph(x, Atom.ANY, Assoc.ASSOC)
            c.check(_is_k1(g, loops_ok=True), x, Atom.ANY, Assoc.ASSOC,
                    detail=f"reduced graph should be K1, got {_shape(g)}")


def t_converse(c: _Ctx):
    prof = profiles(c.ring)
    for x in c.scope:
        p = prof[x]
        if _is_k1(c.graph(x, Atom.ANY, Assoc.STRONG)):
            c.check(p.very_strong, x, Atom.ANY, Assoc.STRONG, detail="K1 graph but x not vs-irreducible")
        if c.graph(x, Atom.ANY, Assoc.NONE).edge_count == 0:
            c.check(p.very_strong, x, Atom.ANY, Assoc.NONE, detail="edgeless graph but x not vs-irreducible")
        if _is_k1(c.graph(x, Atom.ANY, Assoc.ASSOC), loops_ok=True):
            c.check(p.m_irreducible, x, Atom.ANY, Assoc.ASSOC, detail="reduced K1 but x not m-irreducible")


def t_diameter(c: _Ctx):
    prof = profiles(c.ring)
    for x in c.scope:
        for beta, holds in ((Assoc.ASSOC, prof[x].irreducible), (Assoc.STRONG, prof[x].strong)):
            if not holds:
                continue
            g = c.graph(x, Atom.ANY, beta)
            d = diameter(g)
            c.check(d <= 2, x, Atom.ANY, beta, detail=f"diameter {fmt_ext(d)}")
            hub = g.vertex_of(x)
            ok = hub is not None and all(g.has_edge(hub, v) for v in g.vertices if v != hub)
            c.check(ok, x, Atom.ANY, beta, detail="no vertex equivalent to x is adjacent to all others")


def _cap_for(c: _Ctx, g) -> int:
    omega = pseudo_clique_number(g)
    return c.cfg.probe_cap if omega == INF else int(omega) + 1


def t_phi(c: _Ctx):
    ring = c.ring
    for x in c.nonunits:
        for alpha in ALL_ALPHA:
            for beta in ALL_BETA:
                g = c.graph(x, alpha, beta)
                en = enumerate_factorizations(ring, x, alpha, beta, _cap_for(c, g), limit=c.cfg.phi_limit)
                for f in en.factorizations:
                    s = factorization_subgraph(g, f)
                    n, k = len(f), len(s.vertices)
                    w = s.weight
                    ok = (s.inside(g) and w == phi(n, k)
                          and pseudo_clique_number(pseudo_clique_as_graph(g, s)) == w
                          and n - 1 <= w <= n * (n - 1) // 2)
                    c.check(ok, x, alpha, beta, detail=f"{f.render(ring)}: weight {w}, phi({n},{k})={phi(n, k)}")
                c.count("factorizations checked", len(en.factorizations))


def t_accp(c: _Ctx):
    ring = c.ring
    accp = is_accp(ring).holds
    for alpha in IRREDUCIBLE_CHAIN:
        atomic = is_atomic_ring(ring, alpha, c.cfg.include_zero).holds
        for beta in BETA_KINDS:
            finite = all(degl(g, v) != INF for x in c.scope
                         for g in [c.graph(x, alpha, beta)] for v in g.vertices)
            if atomic and finite:
                c.check(accp, None, alpha, beta, detail="finite degl everywhere but ACCP fails")
    for x in c.scope:
        g = c.graph(x, Atom.IRREDUCIBLE, Assoc.ASSOC)
        if accp and any(degl(g, v) == INF for v in g.vertices):
            c.mark("ACCP holds while some degl is infinite", c.where(x))
            break


def t_bfr(c: _Ctx):
    ring = c.ring
    for alpha in (Atom.ANY,) + IRREDUCIBLE_CHAIN:
        for beta in ALL_BETA:
            for x in c.scope:
                omega = pseudo_clique_number(c.graph(x, alpha, beta))
                unbounded = lengths_unbounded(ring, x, alpha)
                c.check((omega == INF) == unbounded, x, alpha, beta,
                        detail=f"pseudo-clique number {fmt_ext(omega)} but unbounded lengths={unbounded}")
                if omega != INF:
                    c.check(not longer_factorization_exists(ring, x, alpha, int(omega) + 1), x, alpha, beta,
                            detail=f"factorization longer than {int(omega) + 1}")
    try:
        v = is_bfr(ring, c.cfg.include_zero)
        graph_route = all(pseudo_clique_number(c.graph(x, Atom.ANY, Assoc.ASSOC)) != INF for x in c.scope)
        c.check(v.holds == graph_route, detail="ring-level BFR disagrees with the graph route")
    except ConsistencyError as e:
        c.check(False, detail=str(e))


def _enumerate_until(c: _Ctx, x, beta, target: int):
    cap = 2
    while True:
        en = enumerate_factorizations(c.ring, x, Atom.ANY, beta, cap, limit=target)
        if len(en.factorizations) >= target or cap >= 4 * target:
            return en
        cap *= 2


def t_ffr(c: _Ctx):
    ring = c.ring
    if ring.size <= c.cfg.ffr_max_size:
        for beta in ALL_BETA:
            for x in c.scope:
                g = c.graph(x, Atom.ANY, beta)
                e = g.edge_count
                total = sum((degl(g, v) for v in g.vertices), 0)
                c.check((e == INF) == (total == INF), x, Atom.ANY, beta,
                        detail=f"|E|={fmt_ext(e)} but sum degl={fmt_ext(total)}")
                if total != INF:
                    c.check(total == 2 * len(g.edges) + g.loop_total, x, Atom.ANY, beta,
                            detail=f"sum degl={total} != 2E+L={2 * len(g.edges) + g.loop_total}")
                if e != INF:
                    cap = _cap_for(c, g)
                    en = enumerate_factorizations(ring, x, Atom.ANY, beta, cap)
                    more = enumerate_factorizations(ring, x, Atom.ANY, beta, cap + 1)
                    c.check(not en.truncated and len(more.factorizations) == len(en.factorizations),
                            x, Atom.ANY, beta, detail=f"enumeration still growing past cap {cap}")
                else:
                    en = _enumerate_until(c, x, beta, c.cfg.ffr_target)
                    c.check(len(en.factorizations) >= c.cfg.ffr_target, x, Atom.ANY, beta,
                            detail=f"infinite |E| but only {len(en.factorizations)} factorizations found")
    else:
        c.part.notes.append(f"{ring.spec}: per-element part skipped (size {ring.size})")
    z = c.cfg.include_zero
    bfr = is_bfr(ring, z).holds
    pre = is_presimplifiable(ring).holds
    for beta in ALL_BETA:
        ffr = is_ffr(ring, beta, z).holds
        graph_route = all(c.graph(x, Atom.ANY, beta).edge_count != INF for x in c.scope)
        c.check(ffr == graph_route, None, None, beta, detail="ring FFR disagrees with edge counts")
        if ffr:
            c.check(bfr, None, None, beta, detail="FFR but not BFR")
            c.check(pre, None, None, beta, detail="FFR but not présimplifiable")


def _brute_vertex_keys(ring, x, alpha, beta) -> set[int]:
    part = beta_partition(ring, beta)
    atoms = atom_set(ring, alpha)
    return {part.representative(d) for d in atoms if x in ring.principal_ideal(d)}


def t_wffr(c: _Ctx):
    ring = c.ring
    for beta in ALL_BETA:
        for x in c.scope:
            g = c.graph(x, Atom.ANY, beta)
            c.check(set(g.keys.values()) == _brute_vertex_keys(ring, x, Atom.ANY, beta), x, Atom.ANY, beta,
                    detail="vertices are not the divisor classes of x")
        c.check(is_wffr(ring, beta, c.cfg.include_zero).holds
                == all(len(c.graph(x, Atom.ANY, beta).vertices) < INF for x in c.scope),
                None, None, beta, detail="WFFR disagrees with vertex counts")


def t_idf(c: _Ctx):
    ring = c.ring
    for alpha in (Atom.PRIME,) + IRREDUCIBLE_CHAIN:
        for beta in ALL_BETA:
            for x in c.scope:
                g = c.graph(x, alpha, beta)
                c.check(set(g.keys.values()) == _brute_vertex_keys(ring, x, alpha, beta), x, alpha, beta,
                        detail="vertices are not the α-divisor classes of x")
            c.check(is_df(ring, alpha, beta, c.cfg.include_zero).holds
                    == all(len(c.graph(x, alpha, beta).vertices) < INF for x in c.scope),
                    None, alpha, beta, detail="divisor finiteness disagrees with vertex counts")


def t_prop66(c: _Ctx):
    ring = c.ring
    z = c.cfg.include_zero
    bfr = is_bfr(ring, z).holds
    pre = is_presimplifiable(ring).holds
    for beta in BETA_KINDS:
        ffr = is_ffr(ring, beta, z).holds
        wffr = is_wffr(ring, beta, z).holds
        degl_finite = all(sum((degl(g, v) for v in g.vertices), 0) != INF
                          for x in c.scope for g in [c.graph(x, Atom.ANY, beta)])
        e_finite = all(c.graph(x, Atom.ANY, beta).edge_count != INF for x in c.scope)
        v_finite = all(len(c.graph(x, Atom.ANY, beta).vertices) < INF for x in c.scope)
        for alpha in IRREDUCIBLE_CHAIN:
            df = is_df(ring, alpha, beta, z).holds
            va_finite = all(len(c.graph(x, alpha, beta).vertices) < INF for x in c.scope)
            items = {
                "FFR": ffr, "BFR&WFFR": bfr and wffr, "pre&WFFR": pre and wffr,
                "BFR&df": bfr and df, "pre&df": pre and df, "sum degl finite": degl_finite,
                "|E| finite": e_finite, "BFR&|V| finite": bfr and v_finite,
                "pre&|V| finite": pre and v_finite, "BFR&|V_a| finite": bfr and va_finite,
                "pre&|V_a| finite": pre and va_finite,
            }
            c.check(len(set(items.values())) == 1, None, alpha, beta,
                    detail="; ".join(f"{k}={v}" for k, v in items.items()))
            _diagram(c, alpha, beta, ffr, bfr, wffr, df)


def _diagram(c: _Ctx, alpha, beta, ffr, bfr, wffr, df):
    ring = c.ring
    z = c.cfg.include_zero
    ufr = is_ufr(ring, alpha, beta, z).holds
    hfr = is_hfr(ring, alpha, z).holds
    accp = is_accp(ring).holds
    atomic = is_atomic_ring(ring, alpha, z).holds
    arrows = (("UFR", ufr, "HFR", hfr), ("UFR", ufr, "FFR", ffr), ("FFR", ffr, "BFR", bfr),
              ("BFR", bfr, "ACCP", accp), ("FFR", ffr, "WFFR", wffr), ("WFFR", wffr, "df", df))
    if alpha in (Atom.IRREDUCIBLE, Atom.STRONG):
        # ACCP only forces the weaker atom notions; Zmod(6) has no vs-irr factorization of 2
        arrows += (("ACCP", accp, "atomic", atomic),)
    for a, va, b, vb in arrows:
        c.check(not va or vb, None, alpha, beta, detail=f"{a} holds but {b} fails")


def t_noeth(c: _Ctx):
    ring = c.ring
    z = c.cfg.include_zero
    bfr = is_bfr(ring, z).holds
    pre = is_presimplifiable(ring).holds
    powers = powers_meet_in_zero(ring, z).holds
    ideals = ideal_powers_meet_in_zero(ring).holds
    c.check(len({bfr, pre, powers, ideals}) == 1,
            detail=f"BFR={bfr} présimplifiable={pre} powers={powers} ideal powers={ideals}")
    for beta in BETA_KINDS:
        ffr = is_ffr(ring, beta, z).holds
        wffr = is_wffr(ring, beta, z).holds
        c.check(ffr == (powers and wffr) == (ideals and wffr), None, None, beta,
                detail=f"FFR={ffr} but powers&WFFR={powers and wffr}")


def t_ufr(c: _Ctx):
    ring = c.ring
    kind = structure_class(ring).kind
    for alpha in IRREDUCIBLE_CHAIN:
        for beta in BETA_KINDS:
            u = is_ufr(ring, alpha, beta, c.cfg.include_zero)
            c.check(u.holds == (kind != "None"), u.witness if isinstance(u.witness, int) else None,
                    alpha, beta, detail=f"UFR={u.holds} but structure class {kind}")
            if not u.holds:
                continue
            for x in c.scope:
                g = c.graph(x, alpha, beta)
                c.check(g.vertices and is_pseudo_clique(g) and is_pseudo_clique(reduced_graph(g)),
                        x, alpha, beta, detail=f"not a pseudo-clique: {_shape(g)}")


Z2Z2 = "Prod(Zmod(2),Zmod(2))"


def t_z2z2(c: _Ctx):
    ring = c.ring
    if ring.spec != Z2Z2:
        return
    e = ring.element
    zero, p, q = e("(0,0)"), e("(1,0)"), e("(0,1)")
    for alpha in (Atom.IRREDUCIBLE, Atom.STRONG, Atom.M_IRREDUCIBLE):
        for beta in (Assoc.NONE, Assoc.ASSOC, Assoc.STRONG):
            g = c.graph(zero, alpha, beta)
            c.check(set(g.vertices) == {p, q} and g.edges == {(min(p, q), max(p, q))}
                    and g.loops == {p: INF, q: INF}, zero, alpha, beta, detail=f"got {_shape(g)}")
            for y in (p, q):
                g = c.graph(y, alpha, beta)
                c.check(g.vertices == (y,) and not g.edges and g.loops == {y: INF}, y, alpha, beta,
                        detail=f"got {_shape(g)}")
    for y in (p, q):
        g = c.graph(y, Atom.ANY, Assoc.ASSOC)
        c.check(g.vertices == (y,) and g.loops == {y: INF}, y, Atom.ANY, Assoc.ASSOC, detail=f"got {_shape(g)}")
    g = c.graph(zero, Atom.ANY, Assoc.ASSOC)
    c.part.notes.append(f"{ring.spec}: with alpha=none, (0,0) also has the vertex (0,0) ({_shape(g)})")
    z = c.cfg.include_zero
    for alpha in IRREDUCIBLE_CHAIN:
        c.check(not is_hfr(ring, alpha, z), None, alpha, detail="HFR unexpectedly holds")
        for beta in BETA_KINDS:
            c.check(not is_ufr(ring, alpha, beta, z), None, alpha, beta, detail="UFR unexpectedly holds")
    for beta in BETA_KINDS:
        c.check(not is_ffr(ring, beta, z), None, None, beta, detail="FFR unexpectedly holds")
    c.check(not is_bfr(ring, z), detail="BFR unexpectedly holds")
    c.check(is_accp(ring).holds, detail="ACCP fails")


CHECKS = {
    "T-hierarchy": t_hierarchy, "T-zero": t_zero, "T-collapse": t_collapse,
    "T-inclusions": t_inclusions, "T-vsatomic": t_vsatomic, "T-matomic": t_matomic,
    "T-converse": t_converse, "T-diameter": t_diameter, "T-phi": t_phi, "T-accp": t_accp,
    "T-bfr": t_bfr, "T-ffr": t_ffr, "T-wffr": t_wffr, "T-idf": t_idf, "T-prop66": t_prop66,
    "T-noeth": t_noeth, "T-ufr": t_ufr, "T-z2z2": t_z2z2,
}


def run_check(theorem: str, ring: FiniteRing, config: SuiteConfig | None = None) -> _Partial:
    """Run one check on one ring; exceptions become counterexamples."""
    config = config or SuiteConfig()
    part = _Partial()
    ctx = _Ctx(ring, config, part)
    start = time.perf_counter()
    try:
        CHECKS[theorem](ctx)
    except Exception as e:  # a crash inside a check is reported, never swallowed silently
        ctx.check(False, detail=f"{type(e).__name__}: {e}")
    part.seconds = time.perf_counter() - start
    return part


def _run_ring(args):
    spec, config, base_dir, theorems = args
    try:
        ring = build_ring(spec, base_dir=base_dir)
    except (RingError, OSError, ValueError) as e:
        return spec, f"{type(e).__name__}: {e}", {}
    return ring.spec, None, {t: run_check(t, ring, config) for t in theorems}


def _summaries(marks: dict, counts: dict) -> list[str]:
    out = [f"{k}: {v}" for k, v in counts.items()]
    for k, examples in marks.items():
        out.append(f"{k}: {len(examples)} case(s), first {examples[0]}")
    return out


def run_suite(corpus, config: SuiteConfig | None = None, base_dir=None) -> list[TheoremReport]:
    config = config or SuiteConfig()
    corpus = list(corpus)
    if not corpus:
        return []
    theorems = config.selected()
    jobs = [(spec, config, base_dir, theorems) for spec in corpus]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_ring, jobs))
    else:
        results = [_run_ring(j) for j in jobs]

    built = [(spec, parts) for spec, err, parts in results if err is None]
    broken = [Counterexample(spec, None, None, None, err) for spec, err, _ in results if err is not None]
    reports = [TheoremReport(BUILD_ID, f"{len(corpus)} ring spec(s)", not broken,
                             broken[:config.max_examples], len(broken))]
    for t in theorems:
        rep = TheoremReport(t, "", True, [])
        instances = 0
        marks: dict = {}
        counts: dict = {}
        for spec, parts in built:
            p = parts[t]
            instances += p.instances
            rep.failure_count += p.failure_count
            room = config.max_examples - len(rep.counterexamples)
            rep.counterexamples.extend(p.failures[:max(room, 0)])
            rep.notes.extend(p.notes)
            rep.seconds += p.seconds
            for k, v in p.marks.items():
                marks.setdefault(k, []).extend(v)
            for k, v in p.counts.items():
                counts[k] = counts.get(k, 0) + v
        rep.notes.extend(_summaries(marks, counts))
        rep.passed = rep.failure_count == 0
        rep.domain = f"{len(built)} ring(s), {instances} instance(s)"
        reports.append(rep)
    return reports


def load_corpus(path) -> list[str]:
    """One ring spec per line; blank lines and ``#`` comments are ignored."""
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def default_corpus_path() -> str | None:
    return os.environ.get(CORPUS_ENV) or None


def suite_passed(reports: list[TheoremReport]) -> bool:
    return all(r.passed for r in reports)


def render_text(reports: list[TheoremReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.theorem}  [{r.domain}]")
        for c in r.counterexamples:
            lines.append(f"  counterexample: {c.render()}")
        if r.failure_count > len(r.counterexamples):
            lines.append(f"  ... {r.failure_count - len(r.counterexamples)} more")
        for n in r.notes:
            lines.append(f"  note: {n}")
    passed = sum(r.passed for r in reports)
    lines.append(f"summary: {passed} passed, {len(reports) - passed} failed")
    return "\n".join(lines) + "\n"


def render_json(reports: list[TheoremReport]) -> str:
    doc = {"schema": REPORT_SCHEMA_VERSION, "passed": suite_passed(reports),
           "reports": [r.to_dict() for r in reports]}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
