"""Finite monoids, monoid actions, and transformation monoids.

Elements are integer indices.  A monoid is its multiplication table
(row = left factor), a self-map monoid is a canonically ordered tuple of
value arrays closed under composition, and an action is a table of
carrier images.  Everything is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import AssociativityViolation, IdentityViolation
from .limits import guard_enum


@dataclass(frozen=True)
class FiniteMonoid:
    size: int
    identity: int
    table: tuple[tuple[int, ...], ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "identity": self.identity,
            "table": [list(row) for row in self.table],
        }


def monoid_from_json(obj: dict) -> FiniteMonoid:
    return validate_monoid(obj["table"], obj["identity"])


def validate_monoid(table, identity: int) -> FiniteMonoid:
    """Check the identity and associativity laws and build the monoid.

    Raises IdentityViolation or AssociativityViolation with the first
    offending element/triple in scan order.
    """
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n == 0:
        raise ValueError("empty multiplication table")
    if any(len(row) != n for row in rows):
        raise ValueError("multiplication table is not square")
    arr = np.asarray(rows, dtype=np.intp)
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("table entry out of range")
    if not (0 <= identity < n):
        raise ValueError(f"identity index {identity} out of range")

    ident = np.arange(n)
    left_bad = np.nonzero(arr[identity] != ident)[0]
    if left_bad.size:
        raise IdentityViolation(int(left_bad[0]))
    right_bad = np.nonzero(arr[:, identity] != ident)[0]
    if right_bad.size:
        raise IdentityViolation(int(right_bad[0]))

    # (x*y)*z versus x*(y*z), all triples at once
    lhs = arr[arr, :]
    rhs = arr[:, arr]
    if not np.array_equal(lhs, rhs):
        x, y, z = np.argwhere(lhs != rhs)[0]
        raise AssociativityViolation(int(x), int(y), int(z))

    return FiniteMonoid(size=n, identity=int(identity), table=rows)


def opposite(m: FiniteMonoid) -> FiniteMonoid:
    """Reverse the multiplication order: table'[x][y] = table[y][x]."""
    n = m.size
    table = tuple(tuple(m.table[y][x] for y in range(n)) for x in range(n))
    return FiniteMonoid(size=n, identity=m.identity, table=table)


def is_submonoid(m: FiniteMonoid, subset) -> bool:
    """True iff the subset contains the identity and is product-closed."""
    sub = set(subset)
    if not sub <= set(range(m.size)):
        raise ValueError("subset contains non-elements")
    if m.identity not in sub:
        return False
    return all(m.table[x][y] in sub for x in sub for y in sub)


def adjoin_identity(table) -> FiniteMonoid:
    """Adjoin a fresh identity to a semigroup table (new element is last)."""
    rows = [list(map(int, row)) + [i] for i, row in enumerate(table)]
    rows.append(list(range(len(rows) + 1)))
    return validate_monoid(rows, len(rows) - 1)


@dataclass(frozen=True)
class MonoidAction:
    """Left action of a monoid on a finite carrier: act[s][x] = s.x."""

    monoid: FiniteMonoid
    carrier_size: int
    act: tuple[tuple[int, ...], ...]

    def map_of(self, s: int) -> tuple[int, ...]:
        return self.act[s]

    def to_json(self) -> dict:
        return {
            "monoid": self.monoid.to_json(),
            "carrier_size": self.carrier_size,
            "act": [list(row) for row in self.act],
        }


def action_from_json(obj: dict) -> MonoidAction:
    return validate_action(
        monoid_from_json(obj["monoid"]), obj["carrier_size"], obj["act"]
    )


def validate_action(m: FiniteMonoid, carrier_size: int, act) -> MonoidAction:
    """Check act[e] = id and act[s*t] = act[s] after act[t]."""
    rows = tuple(tuple(int(v) for v in row) for row in act)
    if len(rows) != m.size or any(len(row) != carrier_size for row in rows):
        raise ValueError("action table has wrong shape")
    arr = np.asarray(rows, dtype=np.intp)
    if carrier_size > 0 and (arr.min() < 0 or arr.max() >= carrier_size):
        raise ValueError("action entry out of range")
    if not np.array_equal(arr[m.identity], np.arange(carrier_size)):
        raise ValueError("identity does not act as the identity map")
    tab = np.asarray(m.table, dtype=np.intp)
    lhs = arr[tab, :]           # act[s*t][x]
    rhs = arr[:, arr]           # act[s][act[t][x]]
    if not np.array_equal(lhs, rhs):
        s, t, x = np.argwhere(lhs != rhs)[0]
        raise ValueError(f"action law fails at (s, t, x) = ({s}, {t}, {x})")
    return MonoidAction(monoid=m, carrier_size=carrier_size, act=rows)


def self_action(m: FiniteMonoid) -> MonoidAction:
    """The monoid acting on itself by left translations."""
    return MonoidAction(monoid=m, carrier_size=m.size, act=m.table)


@dataclass(frozen=True)
class SelfMapMonoid:
    """A set of self-maps of a finite carrier, closed under composition.

    Maps are stored in ascending lexicographic order of their value
    arrays; the identity map must be present.  Closure is guaranteed by
    the constructors in this package and can be re-verified with
    verify_closure (quadratic, meant for test-size instances).
    """

    carrier_size: int
    elements: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ident = tuple(range(self.carrier_size))
        if ident not in set(self.elements):
            raise ValueError("identity map missing")
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("elements not in canonical order")

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return self.index_of(tuple(range(self.carrier_size)))

    def index_of(self, f) -> int:
        return self._index()[tuple(f)]

    def _index(self) -> dict:
        idx = getattr(self, "_index_cache", None)
        if idx is None:
            idx = {f: i for i, f in enumerate(self.elements)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def compose(self, i: int, j: int) -> int:
        """Index of elements[i] after elements[j] (apply j first)."""
        f, g = self.elements[i], self.elements[j]
        return self.index_of(tuple(f[g[x]] for x in range(self.carrier_size)))

    def verify_closure(self) -> bool:
        idx = self._index()
        n = self.carrier_size
        for f in self.elements:
            for g in self.elements:
                if tuple(f[g[x]] for x in range(n)) not in idx:
                    return False
        return True

    def to_monoid(self) -> FiniteMonoid:
        """Composition table under the canonical element order."""
        k = len(self.elements)
        table = tuple(
            tuple(self.compose(i, j) for j in range(k)) for i in range(k)
        )
        return FiniteMonoid(size=k, identity=self.identity_index, table=table)


def selfmap_monoid_from_maps(maps, carrier_size: int) -> SelfMapMonoid:
    """Canonicalize a collection of maps and verify closure."""
    elements = tuple(sorted({tuple(int(v) for v in f) for f in maps}))
    mon = SelfMapMonoid(carrier_size=carrier_size, elements=elements)
    if not mon.verify_closure():
        raise ValueError("map set is not closed under composition")
    return mon


def full_selfmap_monoid(n: int, limit: int | None = None) -> SelfMapMonoid:
    """All n**n self-maps of an n-point set, lexicographically ordered."""
    if n < 1:
        raise ValueError("carrier must be nonempty")
    guard_enum(n**n, f"full self-map monoid on {n} points", limit)
    elements = tuple(product(range(n), repeat=n))
    return SelfMapMonoid(carrier_size=n, elements=elements)


def generated_selfmap_monoid(carrier_size: int, generators,
                             max_size: int | None = None) -> SelfMapMonoid:
    """Closure of the given maps (plus the identity) under composition."""
    ident = tuple(range(carrier_size))
    seen = {ident}
    frontier = [tuple(int(v) for v in g) for g in generators]
    for g in frontier:
        seen.add(g)
    while frontier:
        nxt = []
        for g in frontier:
            for f in list(seen):
                for h in (tuple(f[g[x]] for x in range(carrier_size)),
                          tuple(g[f[x]] for x in range(carrier_size))):
                    if h not in seen:
                        if max_size is not None and len(seen) >= max_size:
                            raise ValueError("generated monoid exceeds max_size")
                        seen.add(h)
                        nxt.append(h)
        frontier = nxt
    return SelfMapMonoid(carrier_size=carrier_size, elements=tuple(sorted(seen)))


def cayley_embed(m: FiniteMonoid) -> tuple[SelfMapMonoid, tuple[int, ...]]:
    """Left-translation representation s -> (x -> s*x).

    Returns the transformation monoid of translation maps together with
    the element-to-map index table.  The representation is injective
    (evaluate at the identity) and multiplication-preserving.
    """
    maps = SelfMapMonoid(
        carrier_size=m.size, elements=tuple(sorted(set(m.table)))
    )
    to_map = tuple(maps.index_of(m.table[s]) for s in range(m.size))
    return maps, to_map
