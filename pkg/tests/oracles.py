"""Definitional brute force, deliberately naive.

Nothing here uses the package's tables, masks or closures: only the scalar
``ring.mul`` / ``ring.add`` and plain Python sets.
"""

from functools import cached_property, lru_cache
from itertools import combinations
from math import comb, inf


class Oracle:
    def __init__(self, ring):
        self.R = ring
        self.E = list(range(ring.size))

    def mul(self, a, b):
        return self.R.mul(a, b)

    def prod(self, xs):
        out = self.R.one
        for a in xs:
            out = self.mul(out, a)
        return out

    @cached_property
    def units(self):
        return {a for a in self.E if any(self.mul(a, b) == self.R.one for b in self.E)}

    @cached_property
    def nonunits(self):
        return [a for a in self.E if a not in self.units]

    @cached_property
    def _ideals(self):
        return {a: frozenset(self.mul(a, r) for r in self.E) for a in self.E}

    def ideal(self, a):
        return self._ideals[a]

    def divides(self, a, x):
        return any(self.mul(a, r) == x for r in self.E)

    def assoc(self, a, b):
        return self.ideal(a) == self.ideal(b)

    def strong(self, a, b):
        return any(self.mul(u, b) == a for u in self.units)

    def vstrong(self, a, b):
        if not self.assoc(a, b):
            return False
        if a == b == self.R.zero:
            return True
        return all(r in self.units for r in self.E if self.mul(r, b) == a)

    def relation(self, kind):
        return {"none": lambda a, b: a == b, "assoc": self.assoc, "s-assoc": self.strong,
                "vs-assoc": self.vstrong}[kind]

    @lru_cache(maxsize=None)
    def cls(self, a, kind):
        rel = self.relation(kind)
        if kind == "vs-assoc" and not rel(a, a):
            return frozenset({a})
        return frozenset(b for b in self.E if rel(a, b))

    @lru_cache(maxsize=None)
    def flags(self, a):
        pairs = [(b, c) for b in self.E for c in self.E if self.mul(b, c) == a]
        out = {}
        for name, rel in (("irr", self.assoc), ("s-irr", self.strong), ("vs-irr", self.vstrong)):
            out[name] = all(rel(a, b) or rel(a, c) for b, c in pairs)
        ia = self.ideal(a)
        out["m-irr"] = all(self.ideal(b) == ia for b in self.nonunits if ia <= self.ideal(b))
        out["prime"] = all(self.divides(a, b) or self.divides(a, c)
                           for b in self.E for c in self.E if self.divides(a, self.mul(b, c)))
        out["self-vs"] = self.vstrong(a, a)
        return out

    @lru_cache(maxsize=None)
    def atoms(self, kind):
        if kind == "none":
            return frozenset(self.nonunits)
        return frozenset(a for a in self.nonunits if self.flags(a)[kind])

    @lru_cache(maxsize=None)
    def closure(self, kind):
        atoms = self.atoms(kind)
        seen = set(atoms)
        todo = list(atoms)
        while todo:
            t = todo.pop()
            for a in atoms:
                p = self.mul(t, a)
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
        return frozenset(seen)

    def _tuples(self, kind, cap):
        """Every sorted atom tuple up to length cap, bucketed by its product."""
        cache = self.__dict__.setdefault("_tuple_cache", {})
        if (kind, cap) not in cache:
            atoms = sorted(self.atoms(kind))
            buckets = {}

            def walk(start, prefix, value):
                for i in range(start, len(atoms)):
                    t = prefix + (atoms[i],)
                    v = self.mul(value, atoms[i])
                    buckets.setdefault(v, []).append(t)
                    if len(t) < cap:
                        walk(i, t, v)

            walk(0, (), self.R.one)
            cache[kind, cap] = buckets
        return cache[kind, cap]

    def factorizations(self, x, kind, cap):
        """Every sorted tuple of atoms of length <= cap multiplying to x."""
        return sorted(self._tuples(kind, cap).get(x, []), key=lambda t: (len(t), t))

    def factorization_keys(self, x, kind, beta, cap):
        return {tuple(sorted(min(self.cls(a, beta)) for a in t)) for t in self.factorizations(x, kind, cap)}

    # -- graphs --------------------------------------------------------------
    def vertex_classes(self, x, alpha, beta):
        atoms = set(self.atoms(alpha))
        out = {}
        for a in sorted(atoms):
            if not self.divides(a, x):
                continue
            members = frozenset(self.cls(a, beta) & atoms)
            out[min(members)] = members
        return out

    def graph(self, x, alpha, beta):
        """(vertices, edges, loops) straight from the definitions."""
        verts = self.vertex_classes(x, alpha, beta)
        rest = self.closure(alpha) | {self.R.one}
        edges = set()
        for a, b in combinations(sorted(verts), 2):
            if any(self.mul(self.mul(c, d), w) == x for c in verts[a] for d in verts[b] for w in rest):
                edges.add((a, b))
        n_max = 4 * self.R.size + 4
        loops = {}
        for v, members in verts.items():
            layer = set(members)
            hits = []
            for n in range(1, n_max + 1):
                hits.append(any(self.mul(t, w) == x for t in layer for w in rest))
                layer = {self.mul(t, c) for t in layer for c in members}
            if any(hits[self.R.size + 1:]):
                loops[v] = inf
            else:
                loops[v] = max((n for n, h in enumerate(hits, 1) if h), default=1) - 1
        return sorted(verts), edges, loops


def clique_number(vertices, edges):
    adj = set(edges) | {(b, a) for a, b in edges}
    best = 0
    for k in range(1, len(vertices) + 1):
        for s in combinations(vertices, k):
            if all((a, b) in adj for a, b in combinations(s, 2)):
                best = k
                break
    return best


def pseudo_clique_number(vertices, edges, loops):
    adj = set(edges) | {(b, a) for a, b in edges}
    best = 0
    for k in range(1, len(vertices) + 1):
        for s in combinations(vertices, k):
            if all((a, b) in adj for a, b in combinations(s, 2)):
                best = max(best, comb(k, 2) + sum(loops[v] for v in s))
    return best
