"""The whole-package verification suite.

Each check exhaustively (or with seeded random sweeps) exercises one of
the dualities, metrization constructions, or combinators, at sizes set
by a SuiteConfig.  Checks report pass/fail with a replayable witness and
never raise; order and content are deterministic for a fixed config.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import contrast as contrast_mod
from . import navector
from .boolring import BoolRing, enumerate_group_endos, enumerate_ring_endos, ring_homs_to_Z2
from .duality import entourage_transport, hom_embed
from .errors import AssociativityViolation, NoWitness, StoneworkError
from .finmon import full_selfmap_monoid, validate_monoid
from .generators import (
    enumerate_actions,
    enumerate_small_monoids,
    random_chain,
    random_cover,
    random_one_sided_metric,
    random_partition,
    random_transformation_monoid,
    random_ultrametric,
)
from .ultra import (
    UltraPseudometric,
    check_left_congruence,
    d_from_chain,
    enumerate_theta,
    epsilon_A_relation,
    minimax_path_distance,
    nonexpansive_counterexample,
    ball_submonoid_check,
)
from .unif import (
    Cover,
    cover_order,
    cover_star,
    cover_wedge,
    is_meet_closed,
    is_saturated_under,
    preimage_partition,
    refines,
    saturate,
)


@dataclass
class SuiteConfig:
    bound_points: int = 3      # carrier sizes for the dualities
    bound_atoms: int = 3       # ring sizes for full additive-endomorphism sweeps
    bound_k: int = 4           # truncation level of the contrast instance
    seed: int = 0
    chain_count: int = 200
    theta_metric_count: int = 50
    ball_instance_count: int = 100
    cover_pair_count: int = 500
    self_test: bool = False

    def validate(self) -> None:
        from .errors import ConfigError

        if not 1 <= self.bound_points <= 4:
            raise ConfigError("bound_points must be between 1 and 4")
        if not 1 <= self.bound_atoms <= 3:
            raise ConfigError("bound_atoms must be between 1 and 3")
        if not 1 <= self.bound_k <= 7:
            raise ConfigError("bound_k must be between 1 and 7")


@dataclass
class VerificationReport:
    check: str
    params: dict
    instances: int
    outcome: str                   # "pass" or "fail"
    witness: object = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "instances": self.instances,
            "outcome": self.outcome,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_tsv_row(self) -> str:
        witness = "-" if self.witness is None else json.dumps(self.witness, sort_keys=True)
        return "\t".join(
            [
                self.check,
                json.dumps(self.params, sort_keys=True),
                str(self.instances),
                self.outcome,
                witness,
                f"{self.elapsed_ms:.1f}",
            ]
        )


TSV_HEADER = "check\tparams\tinstances\toutcome\twitness\telapsed_ms"


def _rng(cfg: SuiteConfig, name: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{name}")


# ---------------------------------------------------------------------------
# vectorized composition tables


def _selfmap_tables(n: int):
    """Maps, their value arrays, and the all-pairs composition index table."""
    maps = full_selfmap_monoid(n)
    arr = np.asarray(maps.elements, dtype=np.int64)
    comp = arr[:, arr]                       # comp[s, t, x] = s(t(x))
    powers = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    keys = arr @ powers                      # ascending with the lex element order
    ckeys = comp @ powers
    table = np.searchsorted(keys, ckeys)
    if not np.array_equal(keys[table], ckeys):
        raise AssertionError("self-map composition left the enumerated set")
    return maps, arr, table


def _atom_image_array(arr: np.ndarray, n: int) -> np.ndarray:
    """Per-map atom images: images[s, a] = mask of the preimage of atom a."""
    bits = (arr[:, :, None] == np.arange(n)[None, None, :]).astype(np.int64)
    pows2 = (1 << np.arange(n, dtype=np.int64))
    return (bits * pows2[None, :, None]).sum(axis=1)


def _endo_tables(endos, n: int):
    """Atom-image array, full action maps, composition table, and keys."""
    images = np.asarray([e.atom_images for e in endos], dtype=np.int64)
    size = 1 << n
    full = np.zeros((len(endos), size), dtype=np.int64)
    for x in range(1, size):
        lsb = x & -x
        full[:, x] = full[:, x ^ lsb] ^ images[:, lsb.bit_length() - 1]
    comp = full[:, images]                   # comp[a, b, j] = a(b(atom_j))
    shifts = 1 << (n * np.arange(n - 1, -1, -1, dtype=np.int64))
    keys = images @ shifts
    ckeys = comp @ shifts
    table = np.searchsorted(keys, ckeys)
    if not np.array_equal(keys[table], ckeys):
        raise AssertionError("ring-endomorphism composition left the enumerated set")
    return images, full, keys, table


def _dense_from_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Row masks to dense 0/1 matrices: dense[e, i, j] = bit j of row i."""
    return ((rows[:, :, None] >> np.arange(n)[None, None, :]) & 1).astype(np.uint8)


def _keys_from_dense(dense: np.ndarray, n: int) -> np.ndarray:
    rows = (dense.astype(np.int64) * (1 << np.arange(n, dtype=np.int64))).sum(axis=-1)
    shifts = 1 << (n * np.arange(n - 1, -1, -1, dtype=np.int64))
    return rows @ shifts


def _group_full_action(dense: np.ndarray, n: int) -> np.ndarray:
    """full[e, x] = matrix e applied to mask x (XOR of columns over bits of x)."""
    cols = (dense.astype(np.int64) * (1 << np.arange(n, dtype=np.int64))[None, :, None]).sum(axis=1)
    size = 1 << n
    full = np.zeros((dense.shape[0], size), dtype=np.int64)
    for x in range(1, size):
        lsb = x & -x
        full[:, x] = full[:, x ^ lsb] ^ cols[:, lsb.bit_length() - 1]
    return full


def _adjoint_pointwise_ok(dense: np.ndarray, n: int) -> bool:
    """Transpose matrices realize character precomposition on every argument.

    For every matrix, character mask f, and ring element chi the mask
    computed by the transpose action must satisfy
    parity(mask & chi) == parity(f & (matrix applied to chi)).
    """
    full = _group_full_action(dense, n)                    # (E, 2^n)
    denseT = dense.transpose(0, 2, 1)
    fullT = _group_full_action(denseT, n)                  # transpose action
    size = 1 << n
    fs = np.arange(size, dtype=np.int64)
    adj_mask = fullT[:, fs]                                # (E, f) mask of f.sigma
    lhs = np.bitwise_count(adj_mask[:, :, None] & fs[None, None, :]) & 1
    rhs = np.bitwise_count(fs[None, :, None] & full[:, None, :]) & 1
    return bool(np.array_equal(lhs, rhs))


# ---------------------------------------------------------------------------
# the checks


def check_duality_counts(cfg: SuiteConfig):
    params = {"points": list(range(1, cfg.bound_points + 1))}
    instances = 0
    for n in range(1, cfg.bound_points + 1):
        maps = full_selfmap_monoid(n)
        endos = enumerate_ring_endos(BoolRing(n))
        instances += len(maps) + len(endos)
        if not (len(maps) == len(endos) == n**n):
            return params, instances, {
                "n": n,
                "selfmaps": len(maps),
                "ring_endos": len(endos),
                "expected": n**n,
            }
    return params, instances, None


def check_phi(cfg: SuiteConfig):
    params = {"points": list(range(1, cfg.bound_points + 1))}
    instances = 0
    for n in range(1, cfg.bound_points + 1):
        maps, arr, map_table = _selfmap_tables(n)
        endos = enumerate_ring_endos(BoolRing(n))
        _, _, endo_keys, endo_table = _endo_tables(endos, n)
        images = _atom_image_array(arr, n)
        shifts = 1 << (n * np.arange(n - 1, -1, -1, dtype=np.int64))
        phi_keys = images @ shifts
        phi_idx = np.minimum(np.searchsorted(endo_keys, phi_keys), len(endos) - 1)
        instances += len(maps) ** 2
        bijective = (
            len(endos) == len(maps)
            and np.array_equal(endo_keys[phi_idx], phi_keys)
            and np.array_equal(np.sort(phi_idx), np.arange(len(endos)))
        )
        if not bijective:
            return params, instances, {"n": n, "failure": "phi is not a bijection"}
        lhs = phi_idx[map_table]
        rhs = endo_table[np.ix_(phi_idx, phi_idx)].T
        if not np.array_equal(lhs, rhs):
            s, t = map(int, np.argwhere(lhs != rhs)[0])
            return params, instances, {
                "n": n,
                "s": list(maps.elements[s]),
                "t": list(maps.elements[t]),
                "failure": "phi(s.t) != phi(t).phi(s)",
            }
    return params, instances, None


def check_delta(cfg: SuiteConfig):
    params = {"atoms": list(range(1, cfg.bound_atoms + 1)),
              "points": list(range(1, cfg.bound_points + 1))}
    instances = 0

    # full additive endomorphism monoid
    for n in range(1, cfg.bound_atoms + 1):
        endos = enumerate_group_endos(BoolRing(n))
        rows = np.asarray([e.rows for e in endos], dtype=np.int64)
        dense = _dense_from_rows(rows, n)
        keys = _keys_from_dense(dense, n)
        prod = np.einsum("aij,bjk->abik", dense, dense) % 2
        ckeys = _keys_from_dense(prod.reshape(-1, n, n), n).reshape(len(endos), len(endos))
        table = np.minimum(np.searchsorted(keys, ckeys), len(endos) - 1)
        if not np.array_equal(keys[table], ckeys):
            return params, instances, {"n": n, "failure": "composition left the matrix set"}
        dkeys = _keys_from_dense(dense.transpose(0, 2, 1), n)
        delta = np.minimum(np.searchsorted(keys, dkeys), len(endos) - 1)
        if not np.array_equal(keys[delta], dkeys):
            return params, instances, {"n": n, "failure": "transpose left the matrix set"}
        instances += len(endos) ** 2
        if not np.array_equal(np.sort(delta), np.arange(len(endos))):
            return params, instances, {"n": n, "failure": "transpose is not a bijection"}
        lhs = delta[table]
        rhs = table[np.ix_(delta, delta)].T
        if not np.array_equal(lhs, rhs):
            a, b = map(int, np.argwhere(lhs != rhs)[0])
            return params, instances, {
                "n": n,
                "sigma": endos[a].to_json(),
                "tau": endos[b].to_json(),
                "failure": "delta(sigma.tau) != delta(tau).delta(sigma)",
            }
        if not _adjoint_pointwise_ok(dense, n):
            return params, instances, {"n": n, "failure": "transpose does not realize the adjoint"}

    # restriction to the image of phi
    for n in range(1, cfg.bound_points + 1):
        maps, arr, _ = _selfmap_tables(n)
        images = _atom_image_array(arr, n)
        dense = ((images[:, None, :] >> np.arange(n)[None, :, None]) & 1).astype(np.uint8)
        instances += len(maps) ** 2
        prod = np.einsum("aij,bjk->abik", dense, dense) % 2
        lhs = prod.transpose(0, 1, 3, 2)
        denseT = dense.transpose(0, 2, 1)
        rhs = np.einsum("tij,sjk->stik", denseT, denseT) % 2
        if not np.array_equal(lhs, rhs):
            s, t = map(int, np.argwhere((lhs != rhs).any(axis=(2, 3)))[0])
            return params, instances, {
                "n": n,
                "s": list(maps.elements[s]),
                "t": list(maps.elements[t]),
                "failure": "anti-law fails on the phi image",
            }
        image_keys = np.sort(_keys_from_dense(dense, n))
        pkeys = _keys_from_dense(prod.reshape(-1, n, n), n)
        pos = np.searchsorted(image_keys, pkeys)
        if not np.array_equal(image_keys[np.minimum(pos, len(image_keys) - 1)], pkeys):
            return params, instances, {"n": n, "failure": "phi image not closed under composition"}
        if not _adjoint_pointwise_ok(dense, n):
            return params, instances, {"n": n, "failure": "adjoint check fails on the phi image"}
    return params, instances, None


def check_evaluation(cfg: SuiteConfig):
    params = {"points": list(range(1, cfg.bound_points + 1))}
    instances = 0
    for n in range(1, cfg.bound_points + 1):
        ring = BoolRing(n)
        homs = set(ring_homs_to_Z2(ring))
        image = {1 << y for y in range(n)}
        instances += len(homs)
        if homs != image or len(image) != n:
            return params, instances, {
                "n": n,
                "ring_homs": sorted(homs),
                "evaluation_image": sorted(image),
            }
        maps = full_selfmap_monoid(n)
        for s in maps.elements:
            endo = hom_embed(s, ring)
            for y in range(n):
                instances += 1
                if endo.apply(1 << y) != 1 << s[y]:
                    return params, instances, {
                        "n": n,
                        "s": list(s),
                        "y": y,
                        "failure": "evaluation is not equivariant",
                    }
    return params, instances, None


def check_entourage_transport(cfg: SuiteConfig):
    bound = min(cfg.bound_points, 3)
    params = {"points": list(range(1, bound + 1))}
    instances = 0
    for n in range(1, bound + 1):
        ring = BoolRing(n)
        maps = full_selfmap_monoid(n)
        for chi in ring.elements():
            for s1 in maps.elements:
                for s2 in maps.elements:
                    instances += 1
                    triple = entourage_transport(chi, s1, s2, ring)
                    if len(set(triple)) != 1:
                        return params, instances, {
                            "n": n,
                            "chi": chi,
                            "s1": list(s1),
                            "s2": list(s2),
                            "memberships": list(triple),
                        }
    return params, instances, None


def check_chain_metrization(cfg: SuiteConfig):
    rng = _rng(cfg, "chain-metrization")
    params = {"chains": cfg.chain_count, "max_points": 6}
    instances = 0
    for _ in range(cfg.chain_count):
        n = rng.randint(2, 6)
        chain = random_chain(rng, n)
        d = d_from_chain(chain)
        witness_base = {"chain": chain.to_json()}
        for x in range(n):
            for y in range(x + 1, n):
                instances += 1
                closed = d.dist[x][y]
                literal = minimax_path_distance(chain, x, y)
                if closed != literal:
                    return params, instances, {
                        **witness_base,
                        "pair": [x, y],
                        "closed_form": str(closed),
                        "path_infimum": str(literal),
                    }
        for level in range(len(chain) + 1):
            finer = chain.level(level + 1) if level < len(chain) else None
            coarser = chain.level(level)
            bound = Fraction(1, 2**level)
            for x in range(n):
                for y in range(n):
                    inside = d.dist[x][y] < bound
                    if finer is not None and finer.relates(x, y) and not inside:
                        return params, instances, {
                            **witness_base,
                            "level": level,
                            "pair": [x, y],
                            "failure": "finer level escapes the open ball",
                        }
                    if x == y and not inside:
                        return params, instances, {**witness_base, "level": level,
                                                   "pair": [x, y], "failure": "diagonal"}
                    if inside and not coarser.relates(x, y):
                        return params, instances, {
                            **witness_base,
                            "level": level,
                            "pair": [x, y],
                            "failure": "open ball escapes the coarser level",
                        }
        # construction re-validates the strong triangle inequality
        UltraPseudometric.from_rows(d.dist)
    return params, instances, None


def check_theta_discrete(cfg: SuiteConfig):
    bound = min(cfg.bound_points, 3)
    params = {"points": list(range(1, bound + 1))}
    instances = 0
    for n in range(1, bound + 1):
        theta = enumerate_theta(UltraPseudometric.discrete(n))
        everything = full_selfmap_monoid(n)
        instances += len(everything)
        if theta.elements != everything.elements:
            return params, instances, {"n": n, "theta": len(theta), "maps": len(everything)}
    return params, instances, None


def check_theta_closure(cfg: SuiteConfig):
    rng = _rng(cfg, "theta-closure")
    params = {"metrics": cfg.theta_metric_count, "max_points": 4}
    instances = 0
    for _ in range(cfg.theta_metric_count):
        n = rng.randint(2, 4)
        d = random_ultrametric(rng, n)
        theta = enumerate_theta(d)
        instances += len(theta) ** 2
        if not theta.verify_closure():
            return params, instances, {"metric": d.to_json(), "failure": "not closed"}
    return params, instances, None


def check_theta_entourages(cfg: SuiteConfig):
    rng = _rng(cfg, "theta-entourages")
    params = {"points": 3, "metrics": 5}
    n = 3
    metrics = [UltraPseudometric.discrete(n)]
    two_level = UltraPseudometric.from_rows(
        [
            [0, Fraction(1, 2), 1],
            [Fraction(1, 2), 0, 1],
            [1, 1, 0],
        ]
    )
    metrics.append(two_level)
    while len(metrics) < 5:
        metrics.append(random_ultrametric(rng, n))
    instances = 0
    point_sets = [
        [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2],
    ]
    for d in metrics:
        theta = enumerate_theta(d)
        eps_values = d.values() + [d.values()[-1] + 1]
        for eps in eps_values:
            if eps <= 0:
                continue
            parts = {
                tuple(points): epsilon_A_relation(theta, d, points, eps)
                for points in point_sets
            }
            instances += len(parts) * len(theta)
            for points in point_sets:
                part_a = parts[tuple(points)]
                for s0 in range(len(theta)):
                    s0_map = theta.elements[s0]
                    part_moved = parts[tuple(sorted({s0_map[a] for a in points}))]
                    translated: dict[int, int] = {}
                    for i in range(len(theta)):
                        key = part_moved.class_id[i]
                        val = part_a.class_id[theta.compose(i, s0)]
                        instances += 1
                        if translated.setdefault(key, val) != val:
                            return params, instances, {
                                "metric": d.to_json(),
                                "points": points,
                                "eps": str(eps),
                                "s0": list(s0_map),
                                "failure": "right translation does not respect the entourage",
                            }
    return params, instances, None


def check_ball_submonoids(cfg: SuiteConfig):
    rng = _rng(cfg, "ball-submonoids")
    params = {"instances": cfg.ball_instance_count, "max_monoid": 6}
    instances = 0
    for _ in range(cfg.ball_instance_count):
        carrier = rng.randint(2, 4)
        m, _ = random_transformation_monoid(rng, carrier, max_size=6)
        d = random_one_sided_metric(rng, m, "right")
        radii = [v for v in d.values() if v > 0]
        if radii:
            radii = [radii[0] / 2] + radii + [radii[-1] * 2]
        else:
            radii = [Fraction(1)]
        for r in radii:
            instances += 1
            if not ball_submonoid_check(m, d, r, side="right"):
                return params, instances, {
                    "monoid": m.to_json(),
                    "metric": d.to_json(),
                    "radius": str(r),
                }
    return params, instances, None


def check_ball_left_congruences(cfg: SuiteConfig):
    rng = _rng(cfg, "ball-left-congruences")
    params = {"instances": cfg.ball_instance_count, "max_monoid": 6}
    instances = 0
    for _ in range(cfg.ball_instance_count):
        carrier = rng.randint(2, 4)
        m, _ = random_transformation_monoid(rng, carrier, max_size=6)
        d = random_one_sided_metric(rng, m, "left")
        if nonexpansive_counterexample(m, d, "left") is not None:
            return params, instances, {
                "monoid": m.to_json(),
                "metric": d.to_json(),
                "failure": "generator produced a non-left-nonexpansive metric",
            }
        radii = [v for v in d.values() if v > 0]
        if radii:
            radii = [radii[0] / 2] + radii + [radii[-1] * 2]
        else:
            radii = [Fraction(1)]
        for r in radii:
            instances += 1
            if not check_left_congruence(m, d.ball_partition(r)):
                return params, instances, {
                    "monoid": m.to_json(),
                    "metric": d.to_json(),
                    "radius": str(r),
                }
    return params, instances, None


def check_saturation(cfg: SuiteConfig):
    params = {"monoid_size": 3, "carrier": 3}
    instances = 0
    all_partitions = _partitions_of(3)
    for m in enumerate_small_monoids(3):
        for action in enumerate_actions(m, 3):
            for eps in all_partitions:
                for s in range(m.size):
                    for t in range(m.size):
                        instances += 1
                        st = m.table[s][t]
                        nested = preimage_partition(
                            action.act[t], preimage_partition(action.act[s], eps)
                        )
                        direct = preimage_partition(action.act[st], eps)
                        if nested != direct:
                            return params, instances, {
                                "monoid": m.to_json(),
                                "action": [list(r) for r in action.act],
                                "partition": eps.to_json(),
                                "pair": [s, t],
                            }
            for eps in all_partitions:
                family = saturate(action, [eps])
                instances += 1
                ok = (
                    eps in family
                    and is_meet_closed(family)
                    and is_saturated_under(family, action)
                    and saturate(action, family) == family
                )
                if not ok:
                    return params, instances, {
                        "monoid": m.to_json(),
                        "action": [list(r) for r in action.act],
                        "generator": eps.to_json(),
                        "failure": "saturation fixed point violated",
                    }
    return params, instances, None


def _partitions_of(n: int):
    from .ultra import Partition

    out = []

    def descend(ids, next_id):
        if len(ids) == n:
            out.append(Partition.from_class_ids(ids))
            return
        for k in range(next_id + 1):
            descend(ids + [k], max(next_id, k + 1))

    descend([], 0)
    return out


def check_covering_combinators(cfg: SuiteConfig):
    rng = _rng(cfg, "covering-combinators")
    params = {"pairs": cfg.cover_pair_count, "max_points": 6}
    instances = 0
    for _ in range(cfg.cover_pair_count):
        n = rng.randint(2, 6)
        p = random_cover(rng, n)
        q = random_cover(rng, n)
        instances += 1
        if not refines(p, cover_star(p)):
            return params, instances, {"cover": p.to_json(), "failure": "P does not refine P*"}
        if cover_order(cover_wedge(p, q)) > cover_order(p) * cover_order(q):
            return params, instances, {
                "p": p.to_json(),
                "q": q.to_json(),
                "failure": "wedge order exceeds the product bound",
            }
        part = Cover.from_partition(random_partition(rng, n))
        if cover_order(part) != 1:
            return params, instances, {"cover": part.to_json(), "failure": "partition order"}
    return params, instances, None


def _kantorovich_spaces(cfg: SuiteConfig, max_points: int):
    rng = _rng(cfg, "kantorovich-spaces")
    spaces = []
    for n in range(1, max_points + 1):
        spaces.append(UltraPseudometric.discrete(n))
        for _ in range(3):
            spaces.append(random_ultrametric(rng, n))
    return [navector.free_space(d) for d in spaces]


def check_kantorovich_extension(cfg: SuiteConfig):
    params = {"max_points": 4}
    instances = 0
    for space in _kantorovich_spaces(cfg, 4):
        base = space.carrier_size - 1
        zero_norm = navector.kantorovich_norm(navector.vector(space, []))
        if zero_norm != 0:
            return params, instances, {"space": space.to_json(), "failure": "zero vector"}
        for x in range(base):
            instances += 1
            if navector.kantorovich_norm(navector.vector(space, [x])) != 1:
                return params, instances, {"space": space.to_json(), "point": x}
            for y in range(x + 1, base):
                instances += 1
                norm = navector.kantorovich_norm(navector.vector(space, [x, y]))
                if norm != space.dist[x][y]:
                    return params, instances, {
                        "space": space.to_json(),
                        "pair": [x, y],
                        "norm": str(norm),
                        "distance": str(space.dist[x][y]),
                    }
    return params, instances, None


def check_kantorovich_ultranorm(cfg: SuiteConfig):
    params = {"max_points": 4}
    instances = 0
    for space in _kantorovich_spaces(cfg, 4):
        base = space.carrier_size - 1
        supports = _subsets(base)
        norms = {
            s: navector.kantorovich_norm(navector.vector(space, s)) for s in supports
        }
        for s1 in supports:
            v1 = navector.vector(space, s1)
            for s2 in supports:
                instances += 1
                total = v1.add(navector.vector(space, s2))
                if norms[tuple(sorted(total.support))] > max(norms[s1], norms[s2]):
                    return params, instances, {
                        "space": space.to_json(),
                        "u": list(s1),
                        "v": list(s2),
                        "failure": "ultra-norm max law",
                    }
    return params, instances, None


def check_kantorovich_contraction(cfg: SuiteConfig):
    params = {"points": 3}
    instances = 0
    for space in _kantorovich_spaces(cfg, 3):
        base = space.carrier_size - 1
        if base != 3:
            continue
        restricted = UltraPseudometric.from_rows(
            [[space.dist[x][y] for y in range(base)] for x in range(base)]
        )
        theta = enumerate_theta(restricted)
        supports = _subsets(base)
        norms = {
            s: navector.kantorovich_norm(navector.vector(space, s)) for s in supports
        }
        for f in theta.elements:
            for s in supports:
                instances += 1
                image = navector.lipschitz_linear_extend(f, navector.vector(space, s))
                if navector.kantorovich_norm(image) > norms[s]:
                    return params, instances, {
                        "space": space.to_json(),
                        "map": list(f),
                        "support": list(s),
                        "failure": "extension increased the norm",
                    }
        for f in theta.elements:
            for g in theta.elements:
                fg = tuple(f[g[x]] for x in range(base))
                for s in supports:
                    instances += 1
                    direct = navector.lipschitz_linear_extend(fg, navector.vector(space, s))
                    staged = navector.lipschitz_linear_extend(
                        f, navector.lipschitz_linear_extend(g, navector.vector(space, s))
                    )
                    if direct.support != staged.support:
                        return params, instances, {
                            "space": space.to_json(),
                            "f": list(f),
                            "g": list(g),
                            "support": list(s),
                            "failure": "extension is not multiplicative",
                        }
    return params, instances, None


def check_kantorovich_oracle(cfg: SuiteConfig):
    params = {"max_points": 4}
    instances = 0
    for space in _kantorovich_spaces(cfg, 4):
        base = space.carrier_size - 1
        for s in _subsets(base):
            instances += 1
            v = navector.vector(space, s)
            plain = navector.kantorovich_norm(v)
            relaxed = navector.kantorovich_norm_with_auxiliary(v)
            if plain != relaxed:
                return params, instances, {
                    "space": space.to_json(),
                    "support": list(s),
                    "pairing_norm": str(plain),
                    "auxiliary_norm": str(relaxed),
                }
    return params, instances, None


def _subsets(n: int):
    out = []
    for mask in range(1 << n):
        out.append(tuple(x for x in range(n) if mask >> x & 1))
    return out


def check_contrast(cfg: SuiteConfig):
    params = {"levels": list(range(1, cfg.bound_k + 1))}
    instances = 0
    right_witness_seen = None
    for k in range(1, cfg.bound_k + 1):
        instance = contrast_mod.build_contrast(k)
        cert = contrast_mod.rna_certificate(instance)
        instances += instance.carrier_size ** 3
        if not cert.ok:
            return params, instances, {"k": k, "certificate": cert.to_json()}
        if cert.right_witness is not None:
            right_witness_seen = {"k": k, "triple": list(cert.right_witness)}
        if k >= 2 and cert.right_witness is None:
            return params, instances, {
                "k": k,
                "failure": "expected right-nonexpansiveness counterexample is missing",
            }
        for j in range(k):
            instances += 1
            try:
                u, nat = contrast_mod.obstruction_witness(instance, j)
            except NoWitness:
                return params, instances, {"k": k, "j": j, "failure": "missing witness"}
            if instance.monoid.table[u][nat] != instance.sink:
                return params, instances, {"k": k, "j": j, "u": u, "n": nat}
        try:
            contrast_mod.obstruction_witness(instance, k)
            return params, instances, {"k": k, "failure": "witness beyond the truncation"}
        except NoWitness:
            instances += 1
    if cfg.bound_k >= 2 and right_witness_seen is None:
        return params, instances, {"failure": "no right counterexample recorded"}
    return params, instances, None


def check_corrupted_table_control(cfg: SuiteConfig):
    """Negative control: a broken table must be caught with a replayable triple."""
    table = [[0, 1, 2], [1, 2, 1], [2, 2, 2]]
    params = {"size": 3}
    try:
        validate_monoid(table, 0)
    except AssociativityViolation as exc:
        x, y, z = exc.triple
        return params, 1, {
            "table": table,
            "identity": 0,
            "violating_triple": [x, y, z],
        }
    return params, 1, {"table": table, "identity": 0,
                       "failure": "corruption was not detected"}


CHECKS: list[tuple[str, object]] = [
    ("selfmap-vs-ring-endo-counts", check_duality_counts),
    ("phi-anti-isomorphism", check_phi),
    ("delta-anti-isomorphism", check_delta),
    ("evaluation-embedding", check_evaluation),
    ("entourage-transport", check_entourage_transport),
    ("chain-metrization", check_chain_metrization),
    ("theta-discrete-identification", check_theta_discrete),
    ("theta-closure", check_theta_closure),
    ("theta-pointwise-entourages", check_theta_entourages),
    ("ball-submonoids", check_ball_submonoids),
    ("ball-left-congruences", check_ball_left_congruences),
    ("action-saturation", check_saturation),
    ("contrast-example", check_contrast),
    ("kantorovich-extension", check_kantorovich_extension),
    ("kantorovich-ultranorm-laws", check_kantorovich_ultranorm),
    ("kantorovich-lipschitz-contraction", check_kantorovich_contraction),
    ("kantorovich-oracle-agreement", check_kantorovich_oracle),
    ("covering-combinators", check_covering_combinators),
]


def run_suite(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    cfg = cfg or SuiteConfig()
    cfg.validate()
    todo = list(CHECKS)
    if cfg.self_test:
        todo.append(("corrupted-table-control", check_corrupted_table_control))
    reports = []
    for name, fn in todo:
        start = time.perf_counter()
        try:
            params, instances, witness = fn(cfg)
        except StoneworkError as exc:
            params, instances, witness = {}, 0, {"error": str(exc)}
        except Exception as exc:  # a crashed check is a failed check
            params, instances = {}, 0
            witness = {"error": f"{type(exc).__name__}: {exc}"}
        elapsed = (time.perf_counter() - start) * 1000
        reports.append(
            VerificationReport(
                check=name,
                params=params,
                instances=instances,
                outcome="pass" if witness is None else "fail",
                witness=witness,
                elapsed_ms=elapsed,
            )
        )
    return reports
