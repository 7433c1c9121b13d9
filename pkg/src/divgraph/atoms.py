"""Irreducibility notions for non-units.

For a non-unit ``a``:

* irreducible:               ``a = bc`` implies ``a ~ b`` or ``a ~ c``
* strongly irreducible:      ... ``a ≈ b`` or ``a ≈ c``
* very strongly irreducible: ... ``a ≅ b`` or ``a ≅ c``
* m-irreducible:             ``(a)`` is maximal among proper principal ideals
* prime:                     ``a | bc`` implies ``a | b`` or ``a | c``
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .associates import assoc_labels, assoc_matrix, strong_matrix, very_strong_matrix
from .common import UnitElementError
from .rings import FiniteRing


class Atom(enum.Enum):
    ANY = "none"
    PRIME = "prime"
    IRREDUCIBLE = "irr"
    STRONG = "s-irr"
    M_IRREDUCIBLE = "m-irr"
    VERY_STRONG = "vs-irr"

    @classmethod
    def parse(cls, token: str) -> "Atom":
        key = token.strip().lower().replace("_", "-").replace(" ", "-")
        try:
            return _ATOM_ALIASES[key]
        except KeyError:
            raise ValueError(f"unknown atom kind {token!r}") from None


_ATOM_ALIASES = {
    "none": Atom.ANY, "any": Atom.ANY, "empty": Atom.ANY, "nonunit": Atom.ANY,
    "prime": Atom.PRIME, "p-atomic": Atom.PRIME,
    "irr": Atom.IRREDUCIBLE, "irreducible": Atom.IRREDUCIBLE, "atomic": Atom.IRREDUCIBLE,
    "s-irr": Atom.STRONG, "strong": Atom.STRONG, "strongly-irreducible": Atom.STRONG,
    "strongly-atomic": Atom.STRONG,
    "m-irr": Atom.M_IRREDUCIBLE, "m-irreducible": Atom.M_IRREDUCIBLE, "m-atomic": Atom.M_IRREDUCIBLE,
    "vs-irr": Atom.VERY_STRONG, "very-strong": Atom.VERY_STRONG,
    "very-strongly-irreducible": Atom.VERY_STRONG, "very-strongly-atomic": Atom.VERY_STRONG,
}

# strongest first; each implies the next
IRREDUCIBLE_CHAIN = (Atom.VERY_STRONG, Atom.M_IRREDUCIBLE, Atom.STRONG, Atom.IRREDUCIBLE)


@dataclass(frozen=True)
class AtomProfile:
    element: int
    prime: bool
    irreducible: bool
    strong: bool
    m_irreducible: bool
    very_strong: bool
    self_vs: bool

    def has(self, kind: Atom) -> bool:
        if kind is Atom.ANY:
            return True
        return {
            Atom.PRIME: self.prime,
            Atom.IRREDUCIBLE: self.irreducible,
            Atom.STRONG: self.strong,
            Atom.M_IRREDUCIBLE: self.m_irreducible,
            Atom.VERY_STRONG: self.very_strong,
        }[kind]


def _profiles(ring: FiniteRing) -> dict[int, AtomProfile]:
    table = ring.mul_table
    ideals = ring.ideal_matrix
    labels = assoc_labels(ring)
    rels = (assoc_matrix(ring), strong_matrix(ring), very_strong_matrix(ring))
    vs = rels[2]
    nonunit_mask = ~ring.unit_mask
    out = {}
    for a in ring.nonunits:
        b, c = np.nonzero(table == a)
        irr, strong, vstrong = (bool((r[a, b] | r[a, c]).all()) for r in rels)
        # non-units whose ideal contains (a) must generate (a) itself
        above = nonunit_mask & ideals[:, ideals[a]].all(axis=1)
        m_irr = bool((labels[above] == labels[a]).all())
        in_a = ideals[a]
        prime = bool((~in_a[table] | in_a[:, None] | in_a[None, :]).all())
        out[a] = AtomProfile(a, prime, irr, strong, m_irr, vstrong, bool(vs[a, a]))
    return out


def profiles(ring: FiniteRing) -> dict[int, AtomProfile]:
    """Profiles of every non-unit, keyed by element id."""
    return ring.memo("atom_profiles", lambda: _profiles(ring))


def classify(ring: FiniteRing, a: int) -> AtomProfile:
    if ring.is_unit(a):
        raise UnitElementError(f"units are not classified ({ring.name(a)} is a unit of {ring.spec})")
    return profiles(ring)[a]


def atom_set(ring: FiniteRing, kind: Atom) -> frozenset[int]:
    def build():
        return frozenset(a for a, p in profiles(ring).items() if p.has(kind))

    return ring.memo(("atom_set", kind), build)


def check_hierarchy(ring: FiniteRing) -> list[tuple[int, str]]:
    """Non-units breaking vs => m => s => irr or prime => irr.

    The implications are unconditional, so any entry is a bug.
    """
    bad = []
    for a, p in profiles(ring).items():
        if p.very_strong and not p.m_irreducible:
            bad.append((a, "vs-irr without m-irr"))
        if p.m_irreducible and not p.strong:
            bad.append((a, "m-irr without s-irr"))
        if p.strong and not p.irreducible:
            bad.append((a, "s-irr without irr"))
        if p.prime and not p.irreducible:
            bad.append((a, "prime without irr"))
    return bad
