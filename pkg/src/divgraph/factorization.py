"""Factorizations into atoms of a chosen kind.

Everything here is decided exactly on the finite ring: products of atoms are
closed into a set by fixed-point iteration, and "arbitrarily long" questions
are settled by the eventual periodicity of set-power sequences rather than by
length caps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .associates import Assoc, beta_partition
from .atoms import Atom, atom_set
from .common import INF, ExtNat, UnitElementError, Verdict
from .rings import FiniteRing


def element_scope(ring: FiniteRing, include_zero: bool = False) -> tuple[int, ...]:
    """Non-units quantified over by ring-level properties (0 excluded by default)."""
    return tuple(a for a in ring.nonunits if include_zero or a != ring.zero)


def _set_mul(ring: FiniteRing, left: Iterable[int], right: Iterable[int]) -> frozenset[int]:
    table = ring.mul_table
    return frozenset(np.unique(table[np.ix_(list(left), list(right))]).tolist())


def _closure(ring: FiniteRing, generators: frozenset[int]) -> frozenset[int]:
    members = set(generators)
    frontier = members
    gens = sorted(generators)
    while frontier:
        new = _set_mul(ring, frontier, gens) - members
        members |= new
        frontier = new
    return frozenset(members)


def alpha_closure(ring: FiniteRing, kind: Atom) -> frozenset[int]:
    """All products of one or more atoms of ``kind``."""
    return ring.memo(("alpha_closure", kind), lambda: _closure(ring, atom_set(ring, kind)))


def cofactor_mask(ring: FiniteRing, x: int, kind: Atom) -> np.ndarray:
    """Mask of ``y`` with ``y * w == x`` for some ``w`` in closure ∪ {1}.

    A partial product ``y`` in this set can be completed into a
    factorization of ``x`` by an empty or atom-factorizable remainder.
    """

    def build():
        rest = sorted(alpha_closure(ring, kind) | {ring.one})
        return (ring.mul_table[:, rest] == x).any(axis=1)

    return ring.memo(("cofactor_mask", x, kind), build)


def is_atomic_ring(ring: FiniteRing, kind: Atom, include_zero: bool = False) -> Verdict:
    if kind is Atom.ANY:
        return Verdict(True, note="every non-unit is a one-factor product of non-units")
    closure = alpha_closure(ring, kind)
    for a in element_scope(ring, include_zero):
        if a not in closure:
            return Verdict(False, a)
    return Verdict(True)


@dataclass(frozen=True)
class AtomClass:
    """Atoms of one kind lying in one associate class."""

    rep: int                    # least member; the graph vertex
    members: tuple[int, ...]
    key: int                    # least element of the whole associate class


def atom_classes(ring: FiniteRing, kind: Atom, beta: Assoc) -> tuple[AtomClass, ...]:
    def build():
        part = beta_partition(ring, beta)
        atoms = atom_set(ring, kind)
        out = []
        for cls in part.classes:
            members = tuple(a for a in cls if a in atoms)
            if members:
                out.append(AtomClass(members[0], members, cls[0]))
        return tuple(sorted(out, key=lambda c: c.rep))

    return ring.memo(("atom_classes", kind, beta), build)


@dataclass(frozen=True)
class ClassPowerReach:
    """``sets[k-1]`` = products of exactly ``k`` members (repetition allowed).

    The sequence of sets satisfies ``sets[preperiod + period - 1] ==
    sets[preperiod - 1]``; only the first ``preperiod + period - 1`` terms
    are stored.
    """

    members: frozenset[int]
    sets: tuple[frozenset[int], ...]
    preperiod: int
    period: int

    def at(self, n: int) -> frozenset[int]:
        if n < 1:
            raise ValueError("n must be at least 1")
        if n >= self.preperiod:
            n = self.preperiod + (n - self.preperiod) % self.period
        return self.sets[n - 1]


def class_reach(ring: FiniteRing, members: Iterable[int]) -> ClassPowerReach:
    members = frozenset(members)
    if not members:
        raise ValueError("class must be nonempty")

    def build():
        seen = {members: 1}
        sets = [members]
        cur = members
        k = 1
        while True:
            cur = _set_mul(ring, cur, members)
            k += 1
            if cur in seen:
                lam = seen[cur]
                return ClassPowerReach(members, tuple(sets), lam, k - lam)
            seen[cur] = k
            sets.append(cur)

    return ring.memo(("class_reach", members), build)


def has_factorization_with_class_power(ring: FiniteRing, x: int, members: Iterable[int],
                                       n: int, kind: Atom) -> bool:
    """Is ``x = c_1 ⋯ c_n · w`` with ``c_i`` from the class and ``w`` empty or
    a product of atoms?"""
    if n < 1:
        raise ValueError("n must be at least 1")
    mask = cofactor_mask(ring, x, kind)
    return bool(mask[sorted(class_reach(ring, members).at(n))].any())


def loop_count(ring: FiniteRing, x: int, members: Iterable[int], kind: Atom) -> ExtNat:
    reach = class_reach(ring, members)
    mask = cofactor_mask(ring, x, kind)
    hits = [bool(mask[sorted(s)].any()) for s in reach.sets]
    if any(hits[reach.preperiod - 1:]):
        return INF
    best = max((k for k, h in enumerate(hits, start=1) if h), default=1)
    return best - 1


def longer_factorization_exists(ring: FiniteRing, x: int, kind: Atom, length: int) -> bool:
    """Exact test for a factorization of ``x`` with more than ``length`` atoms."""
    atoms = atom_set(ring, kind)
    if not atoms:
        return False
    reach = class_reach(ring, atoms)
    last = max(length + reach.period, reach.preperiod + reach.period - 1)
    return any(x in reach.at(m) for m in range(length + 1, last + 1))


def lengths_unbounded(ring: FiniteRing, x: int, kind: Atom) -> bool:
    """Does ``x`` have factorizations into atoms of ``kind`` of arbitrarily large length?

    Lengths are unbounded iff ``x`` occurs in the periodic part of the
    atom-set power sequence.
    """
    atoms = atom_set(ring, kind)
    if not atoms:
        return False
    reach = class_reach(ring, atoms)
    return any(x in reach.at(m) for m in range(reach.preperiod, reach.preperiod + reach.period))


def factorization_lengths(ring: FiniteRing, x: int, kind: Atom, upto: int) -> list[int]:
    atoms = atom_set(ring, kind)
    if not atoms:
        return []
    reach = class_reach(ring, atoms)
    return [m for m in range(1, upto + 1) if x in reach.at(m)]


@dataclass(frozen=True, order=True)
class Factorization:
    target: int
    factors: tuple[int, ...]
    kind: Atom = field(compare=False)
    classes: tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.factors)

    def render(self, ring: FiniteRing) -> str:
        names = (ring.name(f) for f in self.factors)
        return " * ".join(f"({n})" if "+" in n or "-" in n else n for n in names)


@dataclass
class Enumeration:
    factorizations: list[Factorization]
    truncated: bool       # a factorization longer than the cap exists
    complete: bool        # False when the limit stopped the search early


class _LimitReached(Exception):
    pass


def enumerate_factorizations(ring: FiniteRing, x: int, kind: Atom, beta: Assoc, cap: int,
                             limit: int | None = None) -> Enumeration:
    """All factorizations of ``x`` of length <= ``cap`` up to rearrangement and β.

    Two factorizations are identified iff their multisets of β-classes agree;
    one concrete representative is returned per multiset, sorted canonically.
    ``limit`` stops the search once that many have been found.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if ring.is_unit(x):
        raise UnitElementError(f"{ring.name(x)} is a unit")
    classes = atom_classes(ring, kind, beta)
    table = ring.mul_table
    k_count = len(classes)

    # completable[j]: partial products that classes j.. (or nothing) can finish
    completable = [None] * k_count
    gens: set[int] = set()
    for j in range(k_count - 1, -1, -1):
        gens.update(classes[j].members)
        reach = sorted(_closure(ring, frozenset(gens)) | {ring.one})
        completable[j] = (table[:, reach] == x).any(axis=1)

    found: list[Factorization] = []
    path: list[int] = []
    sets: list[frozenset[int]] = []

    def witness() -> tuple[int, ...]:
        target = x
        chosen = []
        for i in range(len(path) - 1, -1, -1):
            members = classes[path[i]].members
            prev = sets[i - 1] if i else frozenset({ring.one})
            c = next(c for c in members for p in sorted(prev) if table[p, c] == target)
            p = next(p for p in sorted(prev) if table[p, c] == target)
            chosen.append(c)
            target = p
        chosen.reverse()
        return tuple(chosen)

    def dfs(start: int, partial: frozenset[int] | None):
        for j in range(start, k_count):
            members = classes[j].members
            nxt = frozenset(members) if partial is None else _set_mul(ring, partial, members)
            if not completable[j][sorted(nxt)].any():
                continue
            path.append(j)
            sets.append(nxt)
            if x in nxt:
                factors = witness()
                order = sorted(zip(path, factors))
                found.append(Factorization(x, tuple(f for _, f in order), kind,
                                           tuple(classes[i].rep for i, _ in order)))
                if limit is not None and len(found) >= limit:
                    raise _LimitReached
            if len(path) < cap:
                dfs(j, nxt)
            path.pop()
            sets.pop()

    complete = True
    try:
        dfs(0, None)
    except _LimitReached:
        complete = False
    found.sort(key=lambda f: (len(f), f.classes, f.factors))
    truncated = longer_factorization_exists(ring, x, kind, cap)
    return Enumeration(found, truncated, complete)
