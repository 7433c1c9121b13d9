"""Ring-level factorization properties and the local structure of a ring.

Per-element questions are answered on divisor graphs: bounded lengths by a
finite pseudo-clique number, finite factorization counts by finitely many
edges and loops, finite divisor counts by finitely many vertices.  Ring
verdicts quantify over an element scope, nonzero non-units by default.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .associates import Assoc, is_presimplifiable, is_strongly_associate_ring
from .atoms import IRREDUCIBLE_CHAIN, Atom
from .common import INF, Verdict
from .factorization import element_scope, enumerate_factorizations, is_atomic_ring
from .graphs import divisor_graph, pseudo_clique_number
from .rings import FiniteRing

ATOM_KINDS = (Atom.PRIME,) + IRREDUCIBLE_CHAIN
BETA_KINDS = (Assoc.ASSOC, Assoc.STRONG, Assoc.VERY_STRONG)


class ConsistencyError(RuntimeError):
    """Two independent decision routes disagreed; this is always a bug."""


def _graph(ring, x, alpha, beta):
    return divisor_graph(ring, x, alpha, beta)


def is_bfr(ring: FiniteRing, include_zero: bool = False) -> Verdict:
    """Bounded factorization lengths, decided on ``G_∅^~(x)`` and cross-checked.

    The graph route needs a finite pseudo-clique number for every ``x``
    in scope; the second route is the présimplifiable test.  They must
    agree on nonzero elements.  With ``include_zero`` the element 0 is
    judged by the graph route alone.
    """
    bad = None
    bad_zero = None
    for x in element_scope(ring, include_zero):
        if pseudo_clique_number(_graph(ring, x, Atom.ANY, Assoc.ASSOC)) == INF:
            if x == ring.zero:
                bad_zero = x
            elif bad is None:
                bad = x
    pre = is_presimplifiable(ring)
    if (bad is None) != pre.holds:
        raise ConsistencyError(
            f"{ring.spec}: graph route says BFR={bad is None} but présimplifiable={pre.holds}")
    if bad is not None:
        return Verdict(False, bad, f"{ring.name(bad)} has factorizations of unbounded length")
    if bad_zero is not None:
        return Verdict(False, bad_zero, "0 = 0·0·⋯ has unbounded length")
    return Verdict(True)


def is_ffr(ring: FiniteRing, beta: Assoc, include_zero: bool = False) -> Verdict:
    """Finitely many factorizations up to ``beta``; ``Assoc.NONE`` gives strong FFR."""
    for x in element_scope(ring, include_zero):
        if _graph(ring, x, Atom.ANY, beta).edge_count == INF:
            return Verdict(False, x, f"G(x) has infinitely many loops at x={ring.name(x)}")
    return Verdict(True)


def is_wffr(ring: FiniteRing, beta: Assoc, include_zero: bool = False) -> Verdict:
    """Finitely many divisors up to ``beta`` (vertex count of ``G_∅^β``)."""
    return is_df(ring, Atom.ANY, beta, include_zero)


def is_df(ring: FiniteRing, alpha: Atom, beta: Assoc, include_zero: bool = False) -> Verdict:
    for x in element_scope(ring, include_zero):
        if not len(_graph(ring, x, alpha, beta).vertices) < INF:
            return Verdict(False, x)
    return Verdict(True)


def enumeration_cap(ring: FiniteRing, x: int, alpha: Atom, beta: Assoc) -> int | None:
    """Longest possible α-factorization of ``x``, or None when unbounded.

    A length-``n`` factorization spans a pseudo-clique of weight at least
    ``n-1``, so ``n <= Ω + 1``.
    """
    omega = pseudo_clique_number(_graph(ring, x, alpha, beta))
    return None if omega == INF else int(omega) + 1


def factorizations_upto(ring: FiniteRing, x: int, alpha: Atom, beta: Assoc, limit: int | None = None):
    """All α-factorizations of ``x`` up to β, or None when lengths are unbounded."""
    cap = enumeration_cap(ring, x, alpha, beta)
    if cap is None:
        return None
    return enumerate_factorizations(ring, x, alpha, beta, cap, limit=limit)


def hfr_at(ring: FiniteRing, x: int, alpha: Atom) -> Verdict:
    found = factorizations_upto(ring, x, alpha, Assoc.ASSOC)
    if found is None:
        return Verdict(False, x, "unbounded factorization lengths")
    lengths = sorted({len(f) for f in found.factorizations})
    if len(lengths) > 1:
        return Verdict(False, x, f"lengths {lengths}")
    return Verdict(True)


def ufr_at(ring: FiniteRing, x: int, alpha: Atom, beta: Assoc) -> Verdict:
    found = factorizations_upto(ring, x, alpha, beta, limit=2)
    if found is None:
        return Verdict(False, x, "unbounded factorization lengths")
    if len(found.factorizations) > 1:
        shown = " = ".join(f.render(ring) for f in found.factorizations)
        return Verdict(False, x, f"{ring.name(x)} = {shown}")
    return Verdict(True)


def _every(ring, include_zero, alpha, test) -> Verdict:
    atomic = is_atomic_ring(ring, alpha, include_zero)
    if not atomic:
        return Verdict(False, atomic.witness, "not atomic")
    for x in element_scope(ring, include_zero):
        v = test(x)
        if not v:
            return v
    return Verdict(True)


def is_hfr(ring: FiniteRing, alpha: Atom, include_zero: bool = False) -> Verdict:
    return _every(ring, include_zero, alpha, lambda x: hfr_at(ring, x, alpha))


def is_ufr(ring: FiniteRing, alpha: Atom, beta: Assoc, include_zero: bool = False) -> Verdict:
    return _every(ring, include_zero, alpha, lambda x: ufr_at(ring, x, alpha, beta))


def accp_chain(ring: FiniteRing) -> list[frozenset[int]]:
    """A longest strictly ascending chain of principal ideals."""
    ideals = sorted({ring.principal_ideal(a) for a in ring.elements}, key=len)
    best: dict[frozenset, list] = {}
    for i in ideals:
        below = [best[j] for j in best if j < i]
        best[i] = max(below, key=len, default=[]) + [i]
    return max(best.values(), key=len)


def is_accp(ring: FiniteRing) -> Verdict:
    chain = accp_chain(ring)
    return Verdict(True, note=f"longest strict chain of principal ideals has {len(chain)} terms")


def is_field(ring: FiniteRing) -> bool:
    return all(ring.is_unit(a) for a in ring.elements if a != ring.zero)


def is_domain(ring: FiniteRing) -> bool:
    table = ring.mul_table
    nz = [a for a in ring.elements if a != ring.zero]
    return not (table[nz][:, nz] == ring.zero).any()


def stable_power_ideal(ring: FiniteRing, y: int) -> frozenset[int]:
    """``∩_n (y^n)``; the chain of ideals is constant once powers start cycling."""
    cyc = ring.power_cycle(y)
    return ring.principal_ideal(cyc.power(cyc.preperiod))


def powers_meet_in_zero(ring: FiniteRing, include_zero: bool = False) -> Verdict:
    for y in element_scope(ring, include_zero):
        if stable_power_ideal(ring, y) != {ring.zero}:
            return Verdict(False, y)
    return Verdict(True)


def _additive_closure(ring: FiniteRing, elems) -> frozenset[int]:
    cur = frozenset(elems) | {ring.zero}
    while True:
        idx = sorted(cur)
        nxt = frozenset(np.unique(ring.add_table[np.ix_(idx, idx)]).tolist())
        if nxt == cur:
            return cur
        cur = nxt


def all_ideals(ring: FiniteRing) -> list[frozenset[int]]:
    """Every ideal, as sums of principal ideals, smallest first."""
    principal = {ring.principal_ideal(a) for a in ring.elements}
    found = set(principal)
    frontier = list(principal)
    while frontier:
        new = []
        for i in frontier:
            for p in principal:
                s = _additive_closure(ring, i | p)
                if s not in found:
                    found.add(s)
                    new.append(s)
        frontier = new
    return sorted(found, key=lambda i: (len(i), sorted(i)))


def ideal_product(ring: FiniteRing, i: frozenset[int], j: frozenset[int]) -> frozenset[int]:
    prods = np.unique(ring.mul_table[np.ix_(sorted(i), sorted(j))]).tolist()
    return _additive_closure(ring, prods)


def stable_ideal_power(ring: FiniteRing, ideal: frozenset[int]) -> frozenset[int]:
    """``∩_n I^n``, reached once the descending powers stop shrinking."""
    cur = ideal
    while True:
        nxt = ideal_product(ring, cur, ideal)
        if nxt == cur:
            return cur
        cur = nxt


def ideal_powers_meet_in_zero(ring: FiniteRing) -> Verdict:
    whole = frozenset(ring.elements)
    for ideal in all_ideals(ring):
        if ideal != whole and stable_ideal_power(ring, ideal) != {ring.zero}:
            return Verdict(False, min(ideal - {ring.zero}), "lies in a proper ideal whose powers do not vanish")
    return Verdict(True)


@dataclass(frozen=True)
class StructureInfo:
    kind: str                     # "Field", "SPIR", "LocalMsq0" or "None"
    is_field: bool
    is_local: bool
    is_spir: bool
    is_local_msq0: bool
    generator: int | None = None  # generator of the maximal ideal when principal


def structure_class(ring: FiniteRing) -> StructureInfo:
    nonunits = ring.nonunits
    table = ring.mul_table
    add = ring.add_table
    m_set = set(nonunits)
    local = all(int(add[a, b]) in m_set for a in nonunits for b in nonunits)
    field_ = is_field(ring)
    gen = None
    spir = msq0 = False
    if local and not field_:
        gen = next((m for m in nonunits if ring.principal_ideal(m) == frozenset(m_set)), None)
        if gen is not None:
            cyc = ring.power_cycle(gen)
            spir = cyc.power(cyc.preperiod) == ring.zero
        msq0 = bool((table[list(nonunits)][:, list(nonunits)] == ring.zero).all())
    if field_:
        kind = "Field"
    elif spir:
        kind = "SPIR"
    elif msq0:
        kind = "LocalMsq0"
    else:
        kind = "None"
    return StructureInfo(kind, field_, local, spir, msq0, gen)


def is_local(ring: FiniteRing) -> bool:
    return structure_class(ring).is_local


@dataclass
class PropertyReport:
    ring: str
    include_zero: bool
    verdicts: dict[str, bool]
    witnesses: dict[str, str]
    structure: str
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ring": self.ring, "include_zero": self.include_zero, "structure": self.structure,
                "verdicts": dict(self.verdicts), "witnesses": dict(self.witnesses),
                "notes": list(self.notes)}


def _record(ring, out, wit, key, verdict: Verdict):
    out[key] = verdict.holds
    if not verdict.holds and verdict.witness is not None:
        w = verdict.witness
        if isinstance(w, tuple):
            text = ", ".join(ring.name(a) for a in w)
        else:
            text = ring.name(w)
        wit[key] = text + (f" ({verdict.note})" if verdict.note else "")


def property_report(ring: FiniteRing, include_zero: bool = False) -> PropertyReport:
    out: dict[str, bool] = {}
    wit: dict[str, str] = {}
    z = include_zero
    _record(ring, out, wit, "presimplifiable", is_presimplifiable(ring))
    _record(ring, out, wit, "strongly_associate_ring", is_strongly_associate_ring(ring))
    for a in ATOM_KINDS:
        _record(ring, out, wit, f"atomic[{a.value}]", is_atomic_ring(ring, a, z))
    _record(ring, out, wit, "ACCP", is_accp(ring))
    _record(ring, out, wit, "BFR", is_bfr(ring, z))
    _record(ring, out, wit, "powers_meet_in_zero", powers_meet_in_zero(ring, z))
    _record(ring, out, wit, "ideal_powers_meet_in_zero", ideal_powers_meet_in_zero(ring))
    for b in BETA_KINDS:
        _record(ring, out, wit, f"FFR[{b.value}]", is_ffr(ring, b, z))
    _record(ring, out, wit, "strong_FFR", is_ffr(ring, Assoc.NONE, z))
    for b in BETA_KINDS:
        _record(ring, out, wit, f"WFFR[{b.value}]", is_wffr(ring, b, z))
    _record(ring, out, wit, "strong_WFFR", is_wffr(ring, Assoc.NONE, z))
    for a in ATOM_KINDS:
        for b in BETA_KINDS:
            _record(ring, out, wit, f"df[{a.value},{b.value}]", is_df(ring, a, b, z))
        _record(ring, out, wit, f"strong_df[{a.value}]", is_df(ring, a, Assoc.NONE, z))
    for a in ATOM_KINDS:
        _record(ring, out, wit, f"HFR[{a.value}]", is_hfr(ring, a, z))
    for a in ATOM_KINDS:
        for b in BETA_KINDS:
            _record(ring, out, wit, f"UFR[{a.value},{b.value}]", is_ufr(ring, a, b, z))
    info = structure_class(ring)
    out["field"] = info.is_field
    out["domain"] = is_domain(ring)
    out["local"] = info.is_local
    out["SPIR"] = info.is_spir
    out["local_M2_0"] = info.is_local_msq0
    return PropertyReport(ring.spec, z, out, wit, info.kind)


def scope_notes(default: PropertyReport, inclusive: PropertyReport) -> list[str]:
    """Verdicts that change once 0 joins the scope, and what that breaks."""
    notes = [f"{k}: {fmt_bool(default.verdicts[k])} -> {fmt_bool(inclusive.verdicts[k])} with 0 in scope"
             for k in default.verdicts if default.verdicts[k] != inclusive.verdicts[k]]
    structured = default.structure != "None"
    if any(inclusive.verdicts[f"UFR[{a.value},{b.value}]"] != structured
           for a in IRREDUCIBLE_CHAIN for b in BETA_KINDS):
        notes.append("UFR no longer matches the Field/SPIR/LocalMsq0 classification with 0 in scope")
    if inclusive.verdicts["BFR"] != inclusive.verdicts["presimplifiable"]:
        notes.append("BFR no longer matches présimplifiable with 0 in scope")
    return notes


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def render_report(reports: list[PropertyReport], notes: list[str] = ()) -> str:
    head = reports[0]
    lines = [f"ring: {head.ring}", f"structure: {head.structure}"]
    cols = ["default"] + (["with-zero"] if len(reports) > 1 else [])
    width = max(len(k) for k in head.verdicts)
    lines.append(f"{'property':<{width}}  " + "  ".join(f"{c:<9}" for c in cols).rstrip())
    for k in head.verdicts:
        lines.append(f"{k:<{width}}  " + "  ".join(f"{fmt_bool(r.verdicts[k]):<9}" for r in reports).rstrip())
    for r, c in zip(reports, cols):
        for k, w in r.witnesses.items():
            lines.append(f"witness[{c}] {k}: {w}")
    for n in notes:
        lines.append(f"note: {n}")
    return "\n".join(lines) + "\n"
