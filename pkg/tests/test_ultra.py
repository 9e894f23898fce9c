import random
from fractions import Fraction

import pytest

from stonework.errors import (
    CarrierMismatch,
    ChainNotMonotone,
    PreconditionUnverified,
    ResourceLimit,
)
from stonework.finmon import validate_monoid
from stonework.generators import random_chain, random_one_sided_metric, random_transformation_monoid
from stonework.ultra import (
    MonotoneChain,
    Partition,
    UltraPseudometric,
    ball_submonoid_check,
    check_left_congruence,
    check_nonexpansive,
    d_from_chain,
    enumerate_theta,
    epsilon_A_relation,
    epsilon_A_relates,
    meet_all,
    metric_from_json,
    minimax_path_distance,
    nonexpansive_counterexample,
    partition_from_json,
    sup_combine,
)

HALF = Fraction(1, 2)


# --- partitions -----------------------------------------------------------


def test_partition_normalization_and_equality():
    p = Partition.from_class_ids([5, 5, 9, 5])
    q = Partition.from_classes(4, [[0, 1, 3], [2]])
    assert p == q
    assert p.class_id == (0, 0, 1, 0)
    with pytest.raises(ValueError):
        Partition(carrier_size=2, class_id=(1, 0))  # not first-occurrence form


def test_partition_meet_and_refines():
    p = Partition.from_classes(4, [[0, 1], [2, 3]])
    q = Partition.from_classes(4, [[0, 1, 2], [3]])
    met = p.meet(q)
    assert met == Partition.from_classes(4, [[0, 1], [2], [3]])
    assert met.refines(p) and met.refines(q)
    assert not p.refines(q)
    assert meet_all([p, q, Partition.indiscrete(4)]) == met


def test_partition_json_round_trip():
    p = Partition.from_classes(3, [[0, 2], [1]])
    assert partition_from_json(3, p.to_json()) == p


# --- metric validation ----------------------------------------------------


def test_metric_validation_catches_asymmetry_and_triangle():
    with pytest.raises(ValueError):
        UltraPseudometric.from_rows([[0, 1], [HALF, 0]])
    # two short sides and one long side cannot happen in an ultrametric
    with pytest.raises(ValueError):
        UltraPseudometric.from_rows(
            [[0, 1, HALF], [1, 0, HALF], [HALF, HALF, 0]]
        )
    with pytest.raises(ValueError):
        UltraPseudometric.from_rows([[1]])
    with pytest.raises(ValueError):
        UltraPseudometric.from_rows([[0, -1], [-1, 0]])


def test_metric_json_round_trip_exact():
    d = UltraPseudometric.from_rows([[0, HALF, 1], [HALF, 0, 1], [1, 1, 0]])
    blob = d.to_json()
    assert blob["dist"][0][1] == "1/2"
    assert metric_from_json(blob) == d


# --- chain metrization ----------------------------------------------------


def test_empty_chain_gives_discrete_metric():
    chain = MonotoneChain(carrier_size=3, chain=())
    assert d_from_chain(chain) == UltraPseudometric.discrete(3)


def test_single_level_chain_closed_form():
    chain = MonotoneChain(
        carrier_size=3, chain=(Partition.from_classes(3, [[0, 1], [2]]),)
    )
    d = d_from_chain(chain)
    assert d.d(0, 1) == HALF
    assert d.d(0, 2) == 1 and d.d(1, 2) == 1
    # literal path infimum agrees
    for x in range(3):
        for y in range(3):
            assert minimax_path_distance(chain, x, y) == d.d(x, y)


def test_chain_json_round_trip():
    from stonework.ultra import chain_from_json

    chain = MonotoneChain(
        carrier_size=3,
        chain=(
            Partition.from_classes(3, [[0, 1], [2]]),
            Partition.from_classes(3, [[0], [1], [2]]),
        ),
    )
    assert chain_from_json(chain.to_json()) == chain


def test_chain_not_monotone_raises():
    with pytest.raises(ChainNotMonotone):
        MonotoneChain(
            carrier_size=3,
            chain=(
                Partition.from_classes(3, [[0], [1], [2]]),
                Partition.from_classes(3, [[0, 1], [2]]),
            ),
        )


def test_random_chains_match_minimax_oracle_and_sandwich():
    rng = random.Random(20)
    for _ in range(25):
        n = rng.randint(2, 6)
        chain = random_chain(rng, n, depth=3)
        d = d_from_chain(chain)
        for x in range(n):
            for y in range(x + 1, n):
                assert d.d(x, y) == minimax_path_distance(chain, x, y)
        for level in range(len(chain)):
            bound = Fraction(1, 2**level)
            finer = chain.level(level + 1)
            coarser = chain.level(level)
            for x in range(n):
                for y in range(n):
                    if finer.relates(x, y):
                        assert d.d(x, y) < bound
                    if d.d(x, y) < bound:
                        assert coarser.relates(x, y)


def test_sup_combine():
    d1 = UltraPseudometric.discrete(3)
    assert sup_combine([d1], cap=2) == d1
    near01 = UltraPseudometric.from_rows([[0, 0, 1], [0, 0, 1], [1, 1, 0]])
    near12 = UltraPseudometric.from_rows([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    # pointwise OR of the two distinct-point indicators
    assert sup_combine([near01, near12], cap=1) == d1
    capped = sup_combine([d1], cap=HALF)
    assert capped.d(0, 1) == HALF
    with pytest.raises(CarrierMismatch):
        sup_combine([d1, UltraPseudometric.discrete(2)], cap=1)


def test_sup_combine_strong_triangle_random():
    rng = random.Random(4)
    for _ in range(10):
        metrics = [d_from_chain(random_chain(rng, 5, depth=2)) for _ in range(3)]
        sup_combine(metrics, cap=1)  # constructor re-validates the triangle


# --- nonexpansiveness and balls -------------------------------------------


def test_discrete_metric_left_nonexpansive_on_group():
    z3 = validate_monoid([[0, 1, 2], [1, 2, 0], [2, 0, 1]], 0)
    assert check_nonexpansive(z3, UltraPseudometric.discrete(3), "left")
    assert check_nonexpansive(z3, UltraPseudometric.discrete(3), "right")


def test_right_nonexpansive_with_constant_translation():
    # two-level metric: identity far from both absorbing elements
    table = [[0, 1, 2], [1, 1, 2], [2, 1, 2]]  # x*y = y for x,y nonidentity
    m = validate_monoid(table, 0)
    d = UltraPseudometric.from_rows([[0, 1, 1], [1, 0, HALF], [1, HALF, 0]])
    assert check_nonexpansive(m, d, "right")
    assert nonexpansive_counterexample(m, d, "right") is None


def test_nonexpansive_counterexample_is_canonical_and_real():
    # right translation by the absorbing element collapses 0 and 1 but
    # moves them close to 2, which is far from both: expansion
    table = [[0, 1, 2], [1, 0, 2], [2, 2, 2]]
    m = validate_monoid(table, 0)
    d = UltraPseudometric.from_rows(
        [[0, HALF, 1], [HALF, 0, 1], [1, 1, 0]]
    )
    witness = nonexpansive_counterexample(m, d, "left")
    assert witness is None
    # make translation by 2 send far-apart points to far-apart points only
    d2 = UltraPseudometric.from_rows(
        [[0, 1, 1], [1, 0, HALF], [1, HALF, 0]]
    )
    w = nonexpansive_counterexample(m, d2, "right")
    assert w is not None
    x, y, s = w
    assert d2.d(m.mul(x, s), m.mul(y, s)) > d2.d(x, y)


def test_side_argument_checked():
    m = validate_monoid([[0]], 0)
    with pytest.raises(ValueError):
        check_nonexpansive(m, UltraPseudometric.discrete(1), "sideways")
    with pytest.raises(CarrierMismatch):
        check_nonexpansive(m, UltraPseudometric.discrete(2), "left")


def test_ball_submonoid_trivial_radii():
    rng = random.Random(11)
    m, _ = random_transformation_monoid(rng, 3, max_size=6)
    d = random_one_sided_metric(rng, m, "right")
    positive = [v for v in d.values() if v > 0]
    top = positive[-1] if positive else Fraction(1)
    assert ball_submonoid_check(m, d, top * 2, side="right")       # whole monoid
    assert ball_submonoid_check(m, d, Fraction(1, 1000), side="right")  # just {e}


def test_ball_submonoid_sweep_random_instances():
    rng = random.Random(12)
    for _ in range(10):
        m, _ = random_transformation_monoid(rng, rng.randint(2, 4), max_size=6)
        d = random_one_sided_metric(rng, m, "right")
        radii = [v for v in d.values() if v > 0] or [Fraction(1)]
        for r in radii:
            assert ball_submonoid_check(m, d, r, side="right")


def test_ball_submonoid_requires_verified_precondition():
    table = [[0, 1, 2], [1, 0, 2], [2, 2, 2]]
    m = validate_monoid(table, 0)
    d = UltraPseudometric.from_rows([[0, 1, 1], [1, 0, HALF], [1, HALF, 0]])
    with pytest.raises(PreconditionUnverified):
        ball_submonoid_check(m, d, Fraction(1), side="right")


def test_left_congruence_basics():
    m = validate_monoid([[0, 1], [1, 1]], 0)
    assert check_left_congruence(m, Partition.indiscrete(2))
    assert check_left_congruence(m, Partition.discrete(2))
    # balls of a left-nonexpansive metric induce left congruences
    rng = random.Random(13)
    for _ in range(10):
        mm, _ = random_transformation_monoid(rng, rng.randint(2, 4), max_size=6)
        d = random_one_sided_metric(rng, mm, "left")
        for r in d.values() or [Fraction(1)]:
            assert check_left_congruence(mm, d.ball_partition(r))


def test_left_congruence_failure_detected():
    # collapsing the two absorbing elements of the right-zero monoid is a
    # left congruence, but collapsing identity with one of them is not
    table = [[0, 1, 2], [1, 1, 2], [2, 1, 2]]
    m = validate_monoid(table, 0)
    assert check_left_congruence(m, Partition.from_classes(3, [[0], [1, 2]]))
    assert not check_left_congruence(m, Partition.from_classes(3, [[0, 1], [2]]))


# --- the 1-Lipschitz monoid ------------------------------------------------


def test_theta_discrete_is_everything():
    for n in (1, 2, 3):
        theta = enumerate_theta(UltraPseudometric.discrete(n))
        assert len(theta) == n**n


def test_theta_two_level_count_against_filter():
    d = UltraPseudometric.from_rows([[0, HALF, 1], [HALF, 0, 1], [1, 1, 0]])
    theta = enumerate_theta(d)
    # literal filter: the near pair {0,1} must stay within distance 1/2
    from itertools import product

    expected = [
        f
        for f in product(range(3), repeat=3)
        if all(
            d.d(f[x], f[y]) <= d.d(x, y)
            for x in range(3)
            for y in range(3)
        )
    ]
    assert list(theta.elements) == expected
    assert len(theta) == 15
    assert theta.verify_closure()
    assert tuple(range(3)) in theta.elements


def test_theta_resource_limit():
    with pytest.raises(ResourceLimit):
        enumerate_theta(UltraPseudometric.discrete(3), limit=26)


def test_epsilon_relation_extremes():
    d = UltraPseudometric.discrete(2)
    theta = enumerate_theta(d)
    wide = epsilon_A_relation(theta, d, [0, 1], eps=Fraction(5))
    assert wide == Partition.indiscrete(len(theta))
    tight = epsilon_A_relation(theta, d, [0, 1], eps=HALF)
    assert tight == Partition.discrete(len(theta))
    with pytest.raises(ValueError):
        epsilon_A_relation(theta, d, [], eps=HALF)
    with pytest.raises(ValueError):
        epsilon_A_relation(theta, d, [0], eps=0)


def test_epsilon_relation_saturation_instance():
    d = UltraPseudometric.from_rows([[0, HALF, 1], [HALF, 0, 1], [1, 1, 0]])
    theta = enumerate_theta(d)
    eps = Fraction(3, 4)
    for s0 in range(len(theta)):
        s0_map = theta.elements[s0]
        for points in ([0], [0, 1], [0, 1, 2]):
            moved = sorted({s0_map[a] for a in points})
            for i in range(len(theta)):
                for j in range(len(theta)):
                    if epsilon_A_relates(theta, d, moved, eps, i, j):
                        assert epsilon_A_relates(
                            theta, d, points, eps,
                            theta.compose(i, s0), theta.compose(j, s0),
                        )
