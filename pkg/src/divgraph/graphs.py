"""α-β divisor graphs of a non-unit and their metrics.

Vertices of ``G_α^β(x)`` are the β-classes of α-atoms dividing ``x``, each
named by its least atom.  Distinct vertices ``a, b`` are adjacent iff
``x = c·d·w`` with ``c`` in the class of ``a``, ``d`` in the class of ``b``
and ``w`` empty or a product of α-atoms.  A vertex gets ``n-1`` loops when
``n`` atoms of its class can appear together in one such factorization, and
infinitely many when ``n`` is unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np

from .associates import Assoc
from .atoms import Atom, atom_set
from .common import INF, ExtNat, UnitElementError, Verdict, ext_json, fmt_ext
from .factorization import Factorization, atom_classes, cofactor_mask, loop_count
from .rings import FiniteRing

REPORT_SCHEMA_VERSION = 1


@dataclass(frozen=True, eq=False)
class DivisorGraph:
    ring: FiniteRing = field(repr=False)
    x: int
    alpha: Atom
    beta: Assoc
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]          # (u, v) with u < v
    loops: dict[int, ExtNat]
    classes: dict[int, tuple[int, ...]] = field(repr=False)
    keys: dict[int, int] = field(repr=False)   # vertex -> least element of its β-class

    def __eq__(self, other) -> bool:
        # literal equality: same vertex ids, adjacency and loop counts
        if not isinstance(other, DivisorGraph):
            return NotImplemented
        return (self.ring.spec == other.ring.spec and self.x == other.x
                and self.vertices == other.vertices and self.edges == other.edges
                and self.loops == other.loops)

    __hash__ = None

    def neighbors(self, v: int) -> list[int]:
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def vertex_of(self, a: int) -> int | None:
        for v, members in self.classes.items():
            if a in members:
                return v
        return None

    @property
    def loop_total(self) -> ExtNat:
        return sum(self.loops.values(), 0)

    @property
    def edge_count(self) -> ExtNat:
        """Simple edges plus loops."""
        return len(self.edges) + self.loop_total

    def label(self) -> str:
        return f"G[{self.alpha.value},{self.beta.value}]({self.ring.name(self.x)})"


def build_divisor_graph(ring: FiniteRing, x: int, alpha: Atom, beta: Assoc) -> DivisorGraph:
    if ring.is_unit(x):
        raise UnitElementError(f"{ring.name(x)} is a unit; divisor graphs need a non-unit")
    table = ring.mul_table
    cls = [c for c in atom_classes(ring, alpha, beta) if ring.divides(c.rep, x)]
    mask = cofactor_mask(ring, x, alpha)
    edges = set()
    for a, b in combinations(cls, 2):
        if mask[table[np.ix_(a.members, b.members)]].any():
            edges.add((a.rep, b.rep))
    return DivisorGraph(
        ring=ring, x=x, alpha=alpha, beta=beta,
        vertices=tuple(c.rep for c in cls),
        edges=frozenset(edges),
        loops={c.rep: loop_count(ring, x, c.members, alpha) for c in cls},
        classes={c.rep: c.members for c in cls},
        keys={c.rep: c.key for c in cls},
    )


def divisor_graph(ring: FiniteRing, x: int, alpha: Atom, beta: Assoc) -> DivisorGraph:
    """Cached :func:`build_divisor_graph`."""
    return ring.memo(("graph", x, alpha, beta), lambda: build_divisor_graph(ring, x, alpha, beta))


def reduced_graph(g: DivisorGraph) -> DivisorGraph:
    return DivisorGraph(g.ring, g.x, g.alpha, g.beta, g.vertices, g.edges,
                        {v: 0 for v in g.vertices}, g.classes, g.keys)


def _check_vertex(g: DivisorGraph, v: int):
    if v not in g.loops:
        raise KeyError(f"{v} is not a vertex of {g.label()}")


def degree(g: DivisorGraph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.neighbors(v))


def degl(g: DivisorGraph, v: int) -> ExtNat:
    return degree(g, v) + g.loops[v]


def simple_graph(g: DivisorGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(g.edges)
    return out


def distance(g: DivisorGraph, a: int, b: int) -> ExtNat:
    _check_vertex(g, a)
    _check_vertex(g, b)
    try:
        return nx.shortest_path_length(simple_graph(g), a, b)
    except nx.NetworkXNoPath:
        return INF


def diameter(g: DivisorGraph) -> ExtNat:
    """Sup of pairwise distances; 0 for the empty graph."""
    if not g.vertices:
        return 0
    h = simple_graph(g)
    if not nx.is_connected(h):
        return INF
    return nx.diameter(h)


def maximal_cliques(g: DivisorGraph) -> list[tuple[int, ...]]:
    if not g.vertices:
        return []
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(simple_graph(g)))


def clique_number(g: DivisorGraph) -> int:
    return max((len(c) for c in maximal_cliques(g)), default=0)


def pseudo_clique_number(g: DivisorGraph) -> ExtNat:
    if any(n == INF for n in g.loops.values()):
        return INF
    # adding a vertex to a clique never lowers the weight, so maximal cliques suffice
    return max((comb(len(c), 2) + sum(g.loops[v] for v in c) for c in maximal_cliques(g)), default=0)


def is_pseudo_clique(g: DivisorGraph) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(g.vertices, 2))


def phi(n: int, s: int) -> int:
    """Pseudo-clique weight of a length-``n`` factorization with ``s`` distinct classes."""
    if not 1 <= s <= n:
        raise ValueError("need 1 <= s <= n")
    return s * (s - 1) // 2 + n - s


@dataclass(frozen=True)
class PseudoClique:
    vertices: tuple[int, ...]
    loops: dict[int, int]

    @property
    def weight(self) -> int:
        return comb(len(self.vertices), 2) + sum(self.loops.values())

    def inside(self, g: DivisorGraph) -> bool:
        return (all(v in g.loops for v in self.vertices)
                and all(g.has_edge(u, v) for u, v in combinations(self.vertices, 2))
                and all(self.loops[v] <= g.loops[v] for v in self.vertices))


def factorization_subgraph(g: DivisorGraph, f: Factorization) -> PseudoClique:
    ring = g.ring
    atoms = atom_set(ring, g.alpha)
    if f.target != g.x or ring.prod(f.factors) != g.x or not all(a in atoms for a in f.factors):
        raise ValueError(f"{f.render(ring)} is not a {g.alpha.value}-factorization of {ring.name(g.x)}")
    counts: dict[int, int] = {}
    for a in f.factors:
        v = g.vertex_of(a)
        if v is None:
            raise ValueError(f"factor {ring.name(a)} has no vertex in {g.label()}")
        counts[v] = counts.get(v, 0) + 1
    return PseudoClique(tuple(sorted(counts)), {v: e - 1 for v, e in counts.items()})


def pseudo_clique_as_graph(g: DivisorGraph, s: PseudoClique) -> DivisorGraph:
    """The pseudo-clique as a standalone graph (for metric cross-checks)."""
    return DivisorGraph(g.ring, g.x, g.alpha, g.beta, s.vertices,
                        frozenset(combinations(s.vertices, 2)), dict(s.loops),
                        {v: g.classes[v] for v in s.vertices}, {v: g.keys[v] for v in s.vertices})


def _same_context(g1: DivisorGraph, g2: DivisorGraph, *fields: str):
    if g1.ring.spec != g2.ring.spec or g1.x != g2.x:
        raise ValueError("graphs belong to different rings or elements")
    for name in fields:
        if getattr(g1, name) != getattr(g2, name):
            raise ValueError(f"graphs differ in {name}")


def is_subgraph_of(g1: DivisorGraph, g2: DivisorGraph) -> bool:
    """Vertices, edges and loop counts of ``g1`` all appear in ``g2``.

    Vertices are matched through their β-class, so a class named by
    different least atoms in the two graphs still lines up.
    """
    _same_context(g1, g2, "beta")
    by_key = {g2.keys[v]: v for v in g2.vertices}
    image = {}
    for v in g1.vertices:
        w = by_key.get(g1.keys[v])
        if w is None or not set(g1.classes[v]) <= set(g2.classes[w]):
            return False
        image[v] = w
    if any(not g2.has_edge(image[a], image[b]) for a, b in g1.edges):
        return False
    return all(g1.loops[v] <= g2.loops[image[v]] for v in g1.vertices)


def check_quotient(fine: DivisorGraph, coarse: DivisorGraph) -> Verdict:
    """``coarse`` is ``fine`` with β-equivalent vertices identified.

    Edges between merged vertices must show up as loops, and merged
    vertices carry at least as many loops as any of their parts.
    """
    _same_context(fine, coarse, "alpha")
    if fine.beta.fineness > coarse.beta.fineness:
        raise ValueError(f"{fine.beta.value} is not finer than {coarse.beta.value}")
    image = {}
    for v in fine.vertices:
        targets = {coarse.vertex_of(a) for a in fine.classes[v]}
        if len(targets) != 1 or None in targets:
            return Verdict(False, v, "fine class not inside one coarse vertex")
        image[v] = targets.pop()
    if set(image.values()) != set(coarse.vertices):
        return Verdict(False, sorted(set(coarse.vertices) - set(image.values())), "vertex sets disagree")
    mapped = set()
    for a, b in fine.edges:
        u, w = image[a], image[b]
        if u == w:
            if coarse.loops[u] < 1:
                return Verdict(False, (a, b), "merged edge did not become a loop")
        elif not coarse.has_edge(u, w):
            return Verdict(False, (a, b), "edge lost under the quotient")
        else:
            mapped.add((min(u, w), max(u, w)))
    if mapped != set(coarse.edges):
        return Verdict(False, sorted(set(coarse.edges) - mapped), "coarse edge without a fine preimage")
    for v in fine.vertices:
        if fine.loops[v] > coarse.loops[image[v]]:
            return Verdict(False, v, "loops decreased under the quotient")
    return Verdict(True)


def merged_edges(fine: DivisorGraph, coarse: DivisorGraph) -> list[tuple[int, int]]:
    """Fine edges whose endpoints are identified in ``coarse`` (edges turned loops)."""
    return sorted((a, b) for a, b in fine.edges if coarse.vertex_of(a) == coarse.vertex_of(b))


def graph_metrics(g: DivisorGraph) -> dict:
    return {
        "vertices": len(g.vertices),
        "simple_edges": len(g.edges),
        "loops": ext_json(g.loop_total),
        "diameter": ext_json(diameter(g)),
        "clique_number": clique_number(g),
        "pseudo_clique_number": ext_json(pseudo_clique_number(g)),
        "empty": not g.vertices,
    }


def to_dict(g: DivisorGraph) -> dict:
    """Structured report of a graph; see docs/report-schema.md."""
    ring = g.ring
    return {
        "schema": REPORT_SCHEMA_VERSION,
        "ring": ring.spec,
        "x": ring.name(g.x),
        "alpha": g.alpha.value,
        "beta": g.beta.value,
        "vertices": [
            {"name": ring.name(v), "class": [ring.name(a) for a in g.classes[v]],
             "deg": degree(g, v), "degl": ext_json(degl(g, v)), "loops": ext_json(g.loops[v])}
            for v in g.vertices
        ],
        "edges": [[ring.name(a), ring.name(b)] for a, b in sorted(g.edges)],
        "metrics": graph_metrics(g),
    }


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: DivisorGraph) -> str:
    ring = g.ring
    lines = [f"graph {_dot_quote(g.label())} {{"]
    for v in g.vertices:
        lines.append(f"  v{v} [label={_dot_quote(ring.name(v))}];")
    for a, b in sorted(g.edges):
        lines.append(f"  v{a} -- v{b};")
    for v in g.vertices:
        if g.loops[v]:
            lines.append(f'  v{v} -- v{v} [label="loops={fmt_ext(g.loops[v])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
