"""Finite commutative rings with unity.

Rings are built from a small spec language::

    Zmod(6)
    Prod(Zmod(2),Zmod(2))
    PolyQ(Zmod(4),x^2)
    Table(path/to/ring.json)

Elements are the integers ``0..N-1``.  Each ring kind knows how to multiply
and add whole numpy arrays of element ids at once, which is what the
exhaustive analyses lean on.
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

DEFAULT_MAX_SIZE = 4096
DEFAULT_TABLE_THRESHOLD = 512


class RingError(ValueError):
    pass


class SpecSyntaxError(RingError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class AxiomViolation(RingError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"ring axiom violated: {axiom}, witness {witness}")


class NonMonicModulus(RingError):
    pass


class RingTooLarge(RingError):
    pass


@dataclass(frozen=True)
class PowerCycle:
    """Eventually periodic power sequence of one element.

    ``values[k-1]`` is ``a**k`` for ``k = 1 .. preperiod + period - 1`` and
    ``a**(preperiod + period) == a**preperiod``.
    """

    element: int
    preperiod: int
    period: int
    values: tuple[int, ...]

    def power(self, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        if k >= self.preperiod:
            k = self.preperiod + (k - self.preperiod) % self.period
        return self.values[k - 1]


class FiniteRing:
    """Base class.  Subclasses supply vectorised ``_mul_vec``/``_add_vec``,
    element naming, and literal parsing."""

    kind = "abstract"

    def __init__(self, size: int, spec: str, table_threshold: int = DEFAULT_TABLE_THRESHOLD):
        self.size = size
        self.spec = spec
        self.zero = 0
        self.table_threshold = table_threshold
        self._memo: dict = {}
        self._lock = threading.RLock()
        self._tabulated = size <= table_threshold

    # -- subclass hooks -------------------------------------------------
    def _mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _add_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def name(self, a: int) -> str:
        raise NotImplementedError

    def parse_element(self, literal: str) -> int:
        raise NotImplementedError

    # -- caching --------------------------------------------------------
    def memo(self, key, factory: Callable):
        """Compute-once cache shared by every analysis of this ring."""
        try:
            return self._memo[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._memo:
                self._memo[key] = factory()
            return self._memo[key]

    def _finish(self):
        if self._tabulated:
            self.mul_table
            self.add_table

    # -- arithmetic -----------------------------------------------------
    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def names(self) -> tuple[str, ...]:
        return self.memo("names", lambda: tuple(self.name(a) for a in self.elements))

    def _grid(self, op):
        ids = np.arange(self.size, dtype=np.int64)
        return op(ids[:, None], ids[None, :]).astype(np.int64)

    @property
    def mul_table(self) -> np.ndarray:
        """Full N x N multiplication table (materialised on first use)."""
        return self.memo("mul_table", lambda: self._grid(self._mul_vec))

    @property
    def add_table(self) -> np.ndarray:
        return self.memo("add_table", lambda: self._grid(self._add_vec))

    def mul(self, a: int, b: int) -> int:
        if self._tabulated:
            return int(self.mul_table[a, b])
        return int(self._mul_vec(np.int64(a), np.int64(b)))

    def add(self, a: int, b: int) -> int:
        if self._tabulated:
            return int(self.add_table[a, b])
        return int(self._add_vec(np.int64(a), np.int64(b)))

    def prod(self, factors: Sequence[int]) -> int:
        out = self.one
        for f in factors:
            out = self.mul(out, f)
        return out

    def element(self, literal) -> int:
        """Parse an element literal in this ring's naming scheme."""
        if isinstance(literal, (int, np.integer)):
            a = int(literal)
            if not 0 <= a < self.size:
                raise RingError(f"element id {a} out of range for {self.spec}")
            return a
        return self.parse_element(str(literal).strip())

    # -- units, divisibility --------------------------------------------
    @property
    def unit_mask(self) -> np.ndarray:
        return self.memo("unit_mask", lambda: (self.mul_table == self.one).any(axis=1))

    @property
    def units(self) -> frozenset[int]:
        return self.memo("units", lambda: frozenset(np.flatnonzero(self.unit_mask).tolist()))

    @property
    def nonunits(self) -> tuple[int, ...]:
        return self.memo("nonunits", lambda: tuple(np.flatnonzero(~self.unit_mask).tolist()))

    def is_unit(self, a: int) -> bool:
        return bool(self.unit_mask[a])

    @property
    def ideal_matrix(self) -> np.ndarray:
        """``ideal_matrix[a, y]`` is True iff ``y`` lies in ``(a)``."""

        def build():
            table = self.mul_table
            out = np.zeros((self.size, self.size), dtype=bool)
            rows = np.repeat(np.arange(self.size), self.size)
            out[rows, table.ravel()] = True
            return out

        return self.memo("ideal_matrix", build)

    def principal_ideal(self, a: int) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.ideal_matrix[a]).tolist())

    def divides(self, a: int, x: int) -> bool:
        return bool(self.ideal_matrix[a, x])

    def power_cycle(self, a: int) -> PowerCycle:
        seen = {a: 1}
        powers = [a]
        cur = a
        k = 1
        while True:
            cur = self.mul(cur, a)
            k += 1
            if cur in seen:
                lam = seen[cur]
                return PowerCycle(a, lam, k - lam, tuple(powers))
            seen[cur] = k
            powers.append(cur)

    def __repr__(self) -> str:
        return f"<FiniteRing {self.spec} size={self.size}>"


class Zmod(FiniteRing):
    kind = "Zmod"

    def __init__(self, n: int, table_threshold: int = DEFAULT_TABLE_THRESHOLD):
        if n < 2:
            raise RingError(f"Zmod({n}) is degenerate: the ring must satisfy 1 != 0")
        super().__init__(n, f"Zmod({n})", table_threshold)
        self.n = n
        self.one = 1
        self._finish()

    def _mul_vec(self, a, b):
        return (np.asarray(a, dtype=np.int64) * b) % self.n

    def _add_vec(self, a, b):
        return (np.asarray(a, dtype=np.int64) + b) % self.n

    def name(self, a: int) -> str:
        return str(a)

    def parse_element(self, literal: str) -> int:
        if not re.fullmatch(r"\d+", literal):
            raise SpecSyntaxError("expected a decimal residue", literal, 0)
        a = int(literal)
        if a >= self.n:
            raise RingError(f"residue {a} out of range for Zmod({self.n})")
        return a


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


class Product(FiniteRing):
    kind = "Product"

    def __init__(self, components: Sequence[FiniteRing], table_threshold: int = DEFAULT_TABLE_THRESHOLD):
        if len(components) < 2:
            raise RingError("a product needs at least two factors")
        self.components = tuple(components)
        sizes = [c.size for c in components]
        size = int(np.prod(sizes))
        spec = "Prod(" + ",".join(c.spec for c in components) + ")"
        super().__init__(size, spec, table_threshold)
        # row-major: the first component is the most significant digit
        self.strides = tuple(int(np.prod(sizes[i + 1:])) for i in range(len(sizes)))
        self.one = self._compose([np.int64(c.one) for c in components])
        self._finish()

    def _split(self, ids):
        ids = np.asarray(ids, dtype=np.int64)
        return [(ids // s) % c.size for s, c in zip(self.strides, self.components)]

    def _compose(self, parts):
        out = np.int64(0)
        for s, p in zip(self.strides, parts):
            out = out + np.asarray(p, dtype=np.int64) * s
        return out if np.ndim(out) else int(out)

    def _mul_vec(self, a, b):
        return self._compose([c._mul_vec(x, y) for c, x, y in zip(self.components, self._split(a), self._split(b))])

    def _add_vec(self, a, b):
        return self._compose([c._add_vec(x, y) for c, x, y in zip(self.components, self._split(a), self._split(b))])

    def coords(self, a: int) -> tuple[int, ...]:
        return tuple(int(p) for p in self._split(a))

    def name(self, a: int) -> str:
        return "(" + ",".join(c.name(p) for c, p in zip(self.components, self.coords(a))) + ")"

    def parse_element(self, literal: str) -> int:
        if not (literal.startswith("(") and literal.endswith(")")):
            raise SpecSyntaxError("expected a parenthesised tuple", literal, 0)
        parts = _split_top_level(literal[1:-1])
        if len(parts) != len(self.components):
            raise SpecSyntaxError(f"expected {len(self.components)} coordinates", literal, 1)
        coords = [c.element(p.strip()) for c, p in zip(self.components, parts)]
        return self._compose(coords)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(x(?:\s*\^\s*(\d+))?)?\s*")


def parse_poly(text: str) -> dict[int, int]:
    """Parse ``"x^2+2x+1"`` into ``{power: coefficient}`` (unreduced)."""
    coeffs: dict[int, int] = {}
    pos = 0
    text = text.strip()
    if not text:
        raise SpecSyntaxError("empty polynomial", text, 0)
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, num, var, exp = m.groups() if m else (None, None, None, None)
        if not m or (num is None and var is None) or (not first and sign is None):
            raise SpecSyntaxError("malformed polynomial term", text, pos)
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        power = 0 if var is None else (int(exp) if exp is not None else 1)
        coeffs[power] = coeffs.get(power, 0) + c
        pos = m.end()
        first = False
    return coeffs


class PolyQuotient(FiniteRing):
    """``base[x] / (modulus)`` for a monic modulus over ``Zmod(n)``.

    Element ids are base-n digit strings of the coefficient vector with the
    constant term as the least significant digit, so constants keep their
    ``Zmod`` ids.
    """

    kind = "PolyQuotient"

    def __init__(self, base: FiniteRing, modulus: dict[int, int] | Sequence[int],
                 table_threshold: int = DEFAULT_TABLE_THRESHOLD):
        if not isinstance(base, Zmod):
            raise RingError("PolyQ requires a Zmod(n) base ring")
        n = base.n
        if not isinstance(modulus, dict):
            modulus = dict(enumerate(modulus))
        degree = max((k for k, c in modulus.items() if c % n), default=0)
        if degree < 1:
            raise NonMonicModulus("modulus must have degree at least 1")
        if modulus[degree] % n != 1:
            raise NonMonicModulus(f"modulus is not monic over Zmod({n})")
        self.base = base
        self.n = n
        self.degree = degree
        self.modulus = tuple(modulus.get(k, 0) % n for k in range(degree + 1))
        spec = f"PolyQ({base.spec},{_poly_name(self.modulus, descending=True)})"
        super().__init__(n ** degree, spec, table_threshold)
        self.one = 1
        self._pows = n ** np.arange(degree, dtype=np.int64)
        self._finish()

    def _coeffs(self, ids):
        ids = np.asarray(ids, dtype=np.int64)
        return (ids[..., None] // self._pows) % self.n

    def _from_coeffs(self, c):
        out = (c % self.n) @ self._pows
        return out if np.ndim(out) else int(out)

    def _mul_vec(self, a, b):
        ca, cb = self._coeffs(a), self._coeffs(b)
        ca, cb = np.broadcast_arrays(ca, cb)
        d = self.degree
        prod = np.zeros(ca.shape[:-1] + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                prod[..., i + j] += ca[..., i] * cb[..., j]
        for k in range(2 * d - 2, d - 1, -1):
            top = prod[..., k] % self.n
            for j in range(d):
                prod[..., k - d + j] -= top * self.modulus[j]
        return self._from_coeffs(prod[..., :d])

    def _add_vec(self, a, b):
        return self._from_coeffs(self._coeffs(a) + self._coeffs(b))

    def coefficients(self, a: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._coeffs(a))

    def name(self, a: int) -> str:
        return _poly_name(self.coefficients(a))

    def parse_element(self, literal: str) -> int:
        coeffs = parse_poly(literal)
        top = max(coeffs)
        vec = [0] * max(top + 1, self.degree)
        for k, c in coeffs.items():
            vec[k] = c % self.n
        # reduce higher powers with x^d = -(lower terms of the modulus)
        for k in range(len(vec) - 1, self.degree - 1, -1):
            t = vec[k]
            vec[k] = 0
            for j in range(self.degree):
                vec[k - self.degree + j] = (vec[k - self.degree + j] - t * self.modulus[j]) % self.n
        return self._from_coeffs(np.array(vec[: self.degree], dtype=np.int64))


def _poly_name(coeffs: Sequence[int], descending: bool = False) -> str:
    terms = []
    order = range(len(coeffs) - 1, -1, -1) if descending else range(len(coeffs))
    for k in order:
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            var = "x" if k == 1 else f"x^{k}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) if terms else "0"


class TableRing(FiniteRing):
    kind = "Table"

    def __init__(self, add, mul, one: int, zero: int, names: Sequence[str] | None = None,
                 spec: str = "Table(<inline>)", table_threshold: int = DEFAULT_TABLE_THRESHOLD):
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
        n = add.shape[0] if add.ndim == 2 else 0
        if n == 0 or add.shape != (n, n) or mul.shape != (n, n):
            raise RingError("add and mul must be square matrices of the same size")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise RingError("table entries must be element ids 0..N-1")
        if not (0 <= one < n and 0 <= zero < n):
            raise RingError("one and zero must be element ids")
        if names is not None and (len(names) != n or len(set(names)) != n):
            raise RingError("names must be N distinct strings")
        super().__init__(n, spec, table_threshold)
        self.zero = zero
        self.one = one
        self._add = add
        self._mul = mul
        self._names = tuple(names) if names is not None else None
        self._memo["mul_table"] = mul
        self._memo["add_table"] = add
        self._tabulated = True
        validate_axioms(add, mul, one, zero)

    def _mul_vec(self, a, b):
        return self._mul[a, b]

    def _add_vec(self, a, b):
        return self._add[a, b]

    def name(self, a: int) -> str:
        return self._names[a] if self._names else str(a)

    def parse_element(self, literal: str) -> int:
        if self._names and literal in self._names:
            return self._names.index(literal)
        if re.fullmatch(r"\d+", literal) and int(literal) < self.size:
            return int(literal)
        raise RingError(f"unknown element {literal!r} for {self.spec}")


def _first(mask: np.ndarray):
    idx = np.argwhere(mask)
    return tuple(int(i) for i in idx[0]) if len(idx) else None


def validate_axioms(add: np.ndarray, mul: np.ndarray, one: int, zero: int) -> None:
    """Exhaustively check the commutative-ring-with-unity axioms.

    Raises AxiomViolation carrying the first failing element tuple.
    """
    n = add.shape[0]
    ids = np.arange(n)
    if one == zero:
        raise AxiomViolation("1 != 0", (one, zero))
    for label, t in (("commutativity of +", add), ("commutativity of *", mul)):
        w = _first(t != t.T)
        if w:
            raise AxiomViolation(label, w)
    w = _first(add[zero] != ids)
    if w:
        raise AxiomViolation("additive identity", (zero, w[0]))
    w = _first(~(add == zero).any(axis=1))
    if w:
        raise AxiomViolation("additive inverse", w)
    w = _first(mul[one] != ids)
    if w:
        raise AxiomViolation("multiplicative identity", (one, w[0]))
    # triple checks run one slice at a time to bound memory
    for a in range(n):
        checks = (
            ("associativity of +", add[add[a]] != add[a][add]),
            ("associativity of *", mul[mul[a]] != mul[a][mul]),
            ("distributivity", mul[a][add] != add[mul[a][:, None], mul[a][None, :]]),
        )
        for label, bad in checks:
            w = _first(bad)
            if w:
                raise AxiomViolation(label, (a,) + w)


def load_table(path: str | Path, **kwargs) -> TableRing:
    """Load a Table ring from a JSON document.

    Fields: ``size``, ``add``, ``mul``, ``one``, ``zero`` and optional
    ``names``.  Every axiom is re-validated.
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise RingError(f"cannot read table file {path}: {exc}") from exc
    for key in ("size", "add", "mul", "one", "zero"):
        if key not in doc:
            raise RingError(f"table file {path} is missing field {key!r}")
    ring = TableRing(doc["add"], doc["mul"], int(doc["one"]), int(doc["zero"]),
                     names=doc.get("names"), spec=f"Table({path})", **kwargs)
    if ring.size != int(doc["size"]):
        raise RingError(f"table file {path}: size field disagrees with matrices")
    return ring


class _SpecParser:
    def __init__(self, text: str, max_size: int, table_threshold: int, base_dir: Path | None):
        self.text = text
        self.pos = 0
        self.max_size = max_size
        self.table_threshold = table_threshold
        self.base_dir = base_dir

    def error(self, msg):
        raise SpecSyntaxError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.error(f"expected {token!r}")
        self.pos += len(token)

    def peek(self, token):
        self.skip()
        return self.text.startswith(token, self.pos)

    def until_close(self, stop_at_comma=False):
        """Raw text up to the matching close paren (or top-level comma)."""
        depth, start = 0, self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    return self.text[start:self.pos]
                depth -= 1
            elif ch == "," and depth == 0 and stop_at_comma:
                return self.text[start:self.pos]
            self.pos += 1
        self.error("unbalanced parentheses")

    def check_size(self, size):
        if size > self.max_size:
            raise RingTooLarge(f"ring of size {size} exceeds the configured maximum {self.max_size}")

    def ring(self) -> FiniteRing:
        self.skip()
        if self.peek("Zmod("):
            self.expect("Zmod(")
            self.skip()
            m = re.compile(r"\d+").match(self.text, self.pos)
            if not m:
                self.error("expected a natural number")
            self.pos = m.end()
            self.expect(")")
            n = int(m.group())
            self.check_size(n)
            return Zmod(n, self.table_threshold)
        if self.peek("Prod("):
            self.expect("Prod(")
            parts = [self.ring()]
            while self.peek(","):
                self.expect(",")
                parts.append(self.ring())
            self.expect(")")
            if len(parts) < 2:
                self.error("Prod needs at least two factors")
            self.check_size(int(np.prod([p.size for p in parts], dtype=object)))
            return Product(parts, self.table_threshold)
        if self.peek("PolyQ("):
            self.expect("PolyQ(")
            base = self.ring()
            self.expect(",")
            start = self.pos
            poly_text = self.until_close()
            self.expect(")")
            try:
                coeffs = parse_poly(poly_text)
            except SpecSyntaxError as exc:
                raise SpecSyntaxError(f"bad modulus: {exc}", self.text, start) from None
            if not isinstance(base, Zmod):
                raise RingError("PolyQ requires a Zmod(n) base ring")
            degree = max((k for k, c in coeffs.items() if c % base.n), default=0)
            self.check_size(base.n ** degree)
            return PolyQuotient(base, coeffs, self.table_threshold)
        if self.peek("Table("):
            self.expect("Table(")
            path = self.until_close().strip()
            self.expect(")")
            p = Path(path)
            if self.base_dir is not None and not p.is_absolute():
                p = self.base_dir / p
            ring = load_table(p, table_threshold=self.table_threshold)
            self.check_size(ring.size)
            return ring
        self.error("expected Zmod, Prod, PolyQ or Table")


def build_ring(spec: str, *, max_size: int = DEFAULT_MAX_SIZE,
               table_threshold: int = DEFAULT_TABLE_THRESHOLD,
               base_dir: str | Path | None = None) -> FiniteRing:
    """Parse a ring spec and construct the validated ring."""
    parser = _SpecParser(spec, max_size, table_threshold, Path(base_dir) if base_dir else None)
    ring = parser.ring()
    parser.skip()
    if parser.pos != len(spec):
        parser.error("trailing characters")
    return ring
