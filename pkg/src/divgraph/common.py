"""Small shared pieces: extended naturals, verdicts, domain errors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Union

INF = math.inf

# A finite natural (int) or INF.
ExtNat = Union[int, float]


def is_finite(n: ExtNat) -> bool:
    return n != INF


def fmt_ext(n: ExtNat) -> str:
    """Render an extended natural as a decimal or the token ``inf``."""
    if n == INF:
        return "inf"
    return str(int(n))


def ext_json(n: ExtNat):
    return "inf" if n == INF else int(n)


class UnitElementError(ValueError):
    """Raised when an operation that needs a non-unit is handed a unit."""


@dataclass(frozen=True)
class Verdict:
    """A boolean answer with an optional counterexample.

    Truthiness follows ``holds`` so verdicts can be used directly in
    conditionals.
    """

    holds: bool
    witness: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds
