import random

from stonework.generators import (
    congruence_closure,
    enumerate_actions,
    enumerate_small_monoids,
    random_chain,
    random_cover,
    random_one_sided_metric,
    random_partition,
    random_transformation_monoid,
    random_ultrametric,
)
from stonework.ultra import (
    UltraPseudometric,
    check_left_congruence,
    check_nonexpansive,
)


def test_generators_are_deterministic_for_a_seed():
    a = random_ultrametric(random.Random("s"), 4)
    b = random_ultrametric(random.Random("s"), 4)
    assert a == b
    c1 = random_cover(random.Random(1), 5)
    c2 = random_cover(random.Random(1), 5)
    assert c1 == c2


def test_random_metrics_are_valid():
    rng = random.Random(2)
    for _ in range(20):
        d = random_ultrametric(rng, rng.randint(1, 5))
        UltraPseudometric.from_rows(d.dist)  # revalidates everything


def test_random_chain_is_nested():
    rng = random.Random(8)
    for _ in range(10):
        chain = random_chain(rng, 5, depth=4)
        for i in range(1, len(chain.chain)):
            assert chain.chain[i].refines(chain.chain[i - 1])


def test_congruence_closure_is_a_congruence():
    rng = random.Random(6)
    for _ in range(10):
        m, _ = random_transformation_monoid(rng, 3, max_size=6)
        p = random_partition(rng, m.size)
        left = congruence_closure(m, p, "left")
        assert check_left_congruence(m, left)
        right = congruence_closure(m, p, "right")
        for x in range(m.size):
            for y in range(m.size):
                if right.relates(x, y):
                    for s in range(m.size):
                        assert right.relates(m.mul(x, s), m.mul(y, s))


def test_one_sided_metrics_are_one_sided():
    rng = random.Random(7)
    for _ in range(15):
        m, _ = random_transformation_monoid(rng, rng.randint(2, 4), max_size=6)
        assert check_nonexpansive(m, random_one_sided_metric(rng, m, "right"), "right")
        assert check_nonexpansive(m, random_one_sided_metric(rng, m, "left"), "left")


def test_transformation_monoids_fit_the_bound():
    rng = random.Random(10)
    for _ in range(20):
        m, maps = random_transformation_monoid(rng, rng.randint(2, 4), max_size=6)
        assert m.size <= 6
        assert maps.verify_closure()


def test_enumerate_small_monoids_and_actions():
    monoids = enumerate_small_monoids(2)
    # tables over {identity, a} are pinned by a*a, which can be anything
    assert len(monoids) == 2
    threes = enumerate_small_monoids(3)
    assert all(m.identity == 0 for m in threes)
    assert len(threes) > 5
    m = threes[0]
    actions = enumerate_actions(m, 2)
    assert actions  # the trivial action always exists
    for action in actions:
        for s in range(m.size):
            for t in range(m.size):
                st = m.mul(s, t)
                for x in range(2):
                    assert action.act[st][x] == action.act[s][action.act[t][x]]
