"""Seeded random instances for the verification sweeps.

Everything takes an explicit random.Random so runs are reproducible from
a single seed.  Ultrametrics come out of nested partition chains, which
guarantees the strong triangle inequality by construction; translation-
compatible metrics come out of congruence closures of such chains.
"""

from __future__ import annotations

import random
from itertools import product

from .errors import AssociativityViolation, IdentityViolation
from .finmon import (
    FiniteMonoid,
    MonoidAction,
    SelfMapMonoid,
    generated_selfmap_monoid,
    validate_monoid,
)
from .ultra import MonotoneChain, Partition, UltraPseudometric, d_from_chain
from .unif import Cover


def random_partition(rng: random.Random, n: int, max_classes: int | None = None) -> Partition:
    k = rng.randint(1, max_classes or n)
    return Partition.from_class_ids([rng.randrange(k) for _ in range(n)])


def random_refinement(rng: random.Random, p: Partition, split_chance: float = 0.5) -> Partition:
    """Split some classes of p at random; the result refines p."""
    ids = list(p.class_id)
    next_id = max(ids) + 1
    for cls in p.classes():
        if len(cls) > 1 and rng.random() < split_chance:
            for x in cls:
                if rng.random() < 0.5:
                    ids[x] = next_id
            next_id += 1
    return Partition.from_class_ids(ids)


def random_chain(rng: random.Random, n: int, depth: int | None = None) -> MonotoneChain:
    depth = depth if depth is not None else rng.randint(0, n)
    levels = []
    current = random_partition(rng, n)
    for _ in range(depth):
        levels.append(current)
        current = random_refinement(rng, current)
    return MonotoneChain(carrier_size=n, chain=tuple(levels))


def random_ultrametric(rng: random.Random, n: int) -> UltraPseudometric:
    return d_from_chain(random_chain(rng, n, depth=rng.randint(1, max(2, n))))


def random_cover(rng: random.Random, n: int, max_blocks: int = 6) -> Cover:
    blocks: set[frozenset[int]] = set()
    for _ in range(rng.randint(1, max_blocks)):
        size = rng.randint(1, n)
        blocks.add(frozenset(rng.sample(range(n), size)))
    missing = set(range(n)) - set().union(*blocks)
    if missing:
        blocks.add(frozenset(missing))
    return Cover(carrier_size=n, blocks=frozenset(blocks))


def random_transformation_monoid(rng: random.Random, carrier: int,
                                 max_size: int) -> tuple[FiniteMonoid, SelfMapMonoid]:
    """A small monoid realized as self-maps: closure of random generators.

    Retries with fresh generators until the closure fits under max_size,
    falling back to a single generator (whose closure is the generator's
    power monoid and always small).  Returns the abstract table together
    with the realizing maps.
    """
    for attempt in range(50):
        count = 1 if attempt > 10 or rng.random() < 0.7 else 2
        gens = [
            tuple(rng.randrange(carrier) for _ in range(carrier))
            for _ in range(count)
        ]
        try:
            maps = generated_selfmap_monoid(carrier, gens, max_size=max_size)
        except ValueError:
            continue
        return maps.to_monoid(), maps
    maps = generated_selfmap_monoid(carrier, [tuple([0] * carrier)])
    return maps.to_monoid(), maps


def congruence_closure(m: FiniteMonoid, p: Partition, side: str) -> Partition:
    """Smallest coarsening of p preserved by all one-sided translations."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    parent = list(range(m.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[ry] = rx
        return True

    for x in range(m.size):
        for y in range(x + 1, m.size):
            if p.relates(x, y):
                union(x, y)
    changed = True
    while changed:
        changed = False
        for x in range(m.size):
            for y in range(x + 1, m.size):
                if find(x) != find(y):
                    continue
                for s in range(m.size):
                    if side == "right":
                        xs, ys = m.table[x][s], m.table[y][s]
                    else:
                        xs, ys = m.table[s][x], m.table[s][y]
                    if union(xs, ys):
                        changed = True
    return Partition.from_class_ids([find(x) for x in range(m.size)])


def random_one_sided_metric(rng: random.Random, m: FiniteMonoid,
                            side: str) -> UltraPseudometric:
    """A random ultra-pseudometric nonexpansive under the chosen translations.

    Takes a random nested chain and replaces every level by its one-sided
    congruence closure; closures of nested relations stay nested, and the
    chain metric of a congruence chain is nonexpansive on that side.
    """
    depth = rng.randint(1, 3)
    raw = random_chain(rng, m.size, depth=depth)
    levels = tuple(congruence_closure(m, p, side) for p in raw.chain)
    return d_from_chain(MonotoneChain(carrier_size=m.size, chain=levels))


def enumerate_small_monoids(size: int) -> list[FiniteMonoid]:
    """Every multiplication table of the given size with identity element 0."""
    free = [(x, y) for x in range(1, size) for y in range(1, size)]
    out = []
    for values in product(range(size), repeat=len(free)):
        table = [[0] * size for _ in range(size)]
        for x in range(size):
            table[0][x] = x
            table[x][0] = x
        for (x, y), v in zip(free, values):
            table[x][y] = v
        try:
            out.append(validate_monoid(table, 0))
        except (AssociativityViolation, IdentityViolation):
            continue
    return out


def enumerate_actions(m: FiniteMonoid, carrier: int) -> list[MonoidAction]:
    """Every action of m on the carrier (identity acts as the identity map)."""
    ident = tuple(range(carrier))
    maps = list(product(range(carrier), repeat=carrier))
    non_identity = [s for s in range(m.size) if s != m.identity]
    out = []
    for choice in product(maps, repeat=len(non_identity)):
        act: list = [None] * m.size
        act[m.identity] = ident
        for s, f in zip(non_identity, choice):
            act[s] = f
        ok = True
        for s in range(m.size):
            for t in range(m.size):
                st = m.table[s][t]
                if any(act[s][act[t][x]] != act[st][x] for x in range(carrier)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(MonoidAction(monoid=m, carrier_size=carrier, act=tuple(act)))
    return out
