"""Associate relations ~, ≈, ≅ and the partitions they induce.

* ``a ~ b``  iff ``(a) == (b)``
* ``a ≈ b``  iff ``a == u*b`` for a unit ``u``
* ``a ≅ b``  iff ``a ~ b`` and (``a == b == 0`` or every ``r`` with
  ``a == r*b`` is a unit)

``≅`` need not be reflexive; an element with ``a ≇ a`` gets a singleton
class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .common import Verdict
from .rings import FiniteRing


class Assoc(enum.Enum):
    NONE = "none"
    ASSOC = "assoc"
    STRONG = "s-assoc"
    VERY_STRONG = "vs-assoc"

    @classmethod
    def parse(cls, token: str) -> "Assoc":
        key = token.strip().lower().replace("_", "-").replace(" ", "-")
        try:
            return _ASSOC_ALIASES[key]
        except KeyError:
            raise ValueError(f"unknown associate kind {token!r}") from None

    @property
    def fineness(self) -> int:
        """Position in the refinement order, finest first."""
        return _FINENESS[self]


_FINENESS = {Assoc.NONE: 0, Assoc.VERY_STRONG: 1, Assoc.STRONG: 2, Assoc.ASSOC: 3}

_ASSOC_ALIASES = {
    "none": Assoc.NONE, "empty": Assoc.NONE, "identity": Assoc.NONE,
    "assoc": Assoc.ASSOC, "associate": Assoc.ASSOC, "~": Assoc.ASSOC,
    "s-assoc": Assoc.STRONG, "strong": Assoc.STRONG, "strong-associate": Assoc.STRONG,
    "strongly-associate": Assoc.STRONG, "≈": Assoc.STRONG,
    "vs-assoc": Assoc.VERY_STRONG, "very-strong": Assoc.VERY_STRONG,
    "very-strong-associate": Assoc.VERY_STRONG, "very-strongly-associate": Assoc.VERY_STRONG,
    "≅": Assoc.VERY_STRONG,
}


class PartitionError(RuntimeError):
    """The ≅ classes failed to form a partition of the ring."""


def assoc_labels(ring: FiniteRing) -> np.ndarray:
    """Integer label per element; equal labels iff same principal ideal."""

    def build():
        _, labels = np.unique(ring.ideal_matrix, axis=0, return_inverse=True)
        return labels.ravel()

    return ring.memo("assoc_labels", build)


def assoc_matrix(ring: FiniteRing) -> np.ndarray:
    def build():
        lab = assoc_labels(ring)
        return lab[:, None] == lab[None, :]

    return ring.memo("assoc_matrix", build)


def strong_matrix(ring: FiniteRing) -> np.ndarray:
    def build():
        units = np.flatnonzero(ring.unit_mask)
        table = ring.mul_table
        out = np.zeros((ring.size, ring.size), dtype=bool)
        for b in ring.elements:
            out[table[units, b], b] = True
        return out

    return ring.memo("strong_matrix", build)


def very_strong_matrix(ring: FiniteRing) -> np.ndarray:
    def build():
        nonunits = np.flatnonzero(~ring.unit_mask)
        table = ring.mul_table
        # bad[a, b]: some non-unit r has r*b == a
        bad = np.zeros((ring.size, ring.size), dtype=bool)
        for b in ring.elements:
            bad[table[nonunits, b], b] = True
        out = assoc_matrix(ring) & ~bad
        out[ring.zero, ring.zero] = True
        return out

    return ring.memo("very_strong_matrix", build)


def relation_matrix(ring: FiniteRing, kind: Assoc) -> np.ndarray:
    if kind is Assoc.ASSOC:
        return assoc_matrix(ring)
    if kind is Assoc.STRONG:
        return strong_matrix(ring)
    if kind is Assoc.VERY_STRONG:
        return very_strong_matrix(ring)
    return np.eye(ring.size, dtype=bool)


def is_associate(ring: FiniteRing, a: int, b: int) -> bool:
    return bool(assoc_matrix(ring)[a, b])


def is_strong_associate(ring: FiniteRing, a: int, b: int) -> bool:
    return bool(strong_matrix(ring)[a, b])


def is_very_strong_associate(ring: FiniteRing, a: int, b: int) -> bool:
    return bool(very_strong_matrix(ring)[a, b])


@dataclass(frozen=True)
class BetaPartition:
    kind: Assoc
    classes: tuple[tuple[int, ...], ...]   # sorted, each class sorted
    label: tuple[int, ...]                 # element -> index into classes

    def class_of(self, a: int) -> tuple[int, ...]:
        return self.classes[self.label[a]]

    def representative(self, a: int) -> int:
        return self.classes[self.label[a]][0]

    def refines(self, other: "BetaPartition") -> bool:
        """Every class of ``self`` lies inside one class of ``other``."""
        return all(len({other.label[a] for a in cls}) == 1 for cls in self.classes)


def beta_partition(ring: FiniteRing, kind: Assoc) -> BetaPartition:
    return ring.memo(("beta_partition", kind), lambda: _build_partition(ring, kind))


def _build_partition(ring: FiniteRing, kind: Assoc) -> BetaPartition:
    n = ring.size
    if kind is Assoc.NONE:
        classes = [(a,) for a in range(n)]
    elif kind is Assoc.ASSOC:
        lab = assoc_labels(ring)
        groups: dict[int, list[int]] = {}
        for a in range(n):
            groups.setdefault(int(lab[a]), []).append(a)
        classes = [tuple(g) for g in groups.values()]
    else:
        rel = relation_matrix(ring, kind)
        classes, seen = [], set()
        for a in range(n):
            if a in seen:
                continue
            if not rel[a, a]:
                cls = (a,)
            else:
                cls = tuple(np.flatnonzero(rel[a]).tolist())
                for b in cls:
                    if b in seen or not np.array_equal(rel[b], rel[a]):
                        raise PartitionError(
                            f"{kind.value} classes of {ring.spec} overlap at {ring.name(a)}, {ring.name(b)}")
            seen.update(cls)
            classes.append(cls)
    classes.sort()
    label = [0] * n
    for i, cls in enumerate(classes):
        for a in cls:
            label[a] = i
    return BetaPartition(kind, tuple(classes), tuple(label))


def is_presimplifiable(ring: FiniteRing) -> Verdict:
    """``x == x*y`` forces ``x == 0`` or ``y`` a unit; witness ``(x, y)``."""

    def build():
        table = ring.mul_table
        nonunits = np.flatnonzero(~ring.unit_mask)
        for x in ring.elements:
            if x == ring.zero:
                continue
            hits = nonunits[table[x, nonunits] == x]
            if len(hits):
                return Verdict(False, (x, int(hits[0])))
        return Verdict(True)

    return ring.memo("presimplifiable", build)


def is_strongly_associate_ring(ring: FiniteRing) -> Verdict:
    """``a ~ b`` implies ``a ≈ b`` for all pairs; witness ``(a, b)``."""
    gap = assoc_matrix(ring) & ~strong_matrix(ring)
    idx = np.argwhere(gap)
    if len(idx):
        return Verdict(False, tuple(int(i) for i in idx[0]))
    return Verdict(True)
