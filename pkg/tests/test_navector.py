import random
from fractions import Fraction

import pytest

from stonework.errors import NotLipschitz, ResourceLimit
from stonework.generators import random_ultrametric
from stonework.navector import (
    FreeVector,
    free_space,
    kantorovich_norm,
    kantorovich_norm_with_auxiliary,
    lipschitz_linear_extend,
    optimal_pairing,
    vector,
)
from stonework.ultra import UltraPseudometric, enumerate_theta

HALF = Fraction(1, 2)

TWO_LEVEL = UltraPseudometric.from_rows(
    [[0, HALF, 1], [HALF, 0, 1], [1, 1, 0]]
)


def test_free_space_points_the_zero_at_distance_one():
    space = free_space(TWO_LEVEL)
    assert space.carrier_size == 4
    for x in range(3):
        assert space.d(x, 3) == 1
    assert space.d(0, 1) == HALF


def test_free_space_truncates_at_one():
    wide = UltraPseudometric.from_rows([[0, 3], [3, 0]])
    space = free_space(wide)
    assert space.d(0, 1) == 1


def test_vector_guards():
    space = free_space(TWO_LEVEL)
    with pytest.raises(ValueError):
        vector(space, [3])  # the zero point is not a basis point
    close_pair = UltraPseudometric.from_rows([[0, HALF], [HALF, 0]])
    with pytest.raises(ValueError):
        FreeVector(space=close_pair, support=frozenset({0}))  # not pointed


def test_norm_zero_singleton_and_pair():
    space = free_space(TWO_LEVEL)
    assert kantorovich_norm(vector(space, [])) == 0
    assert kantorovich_norm(vector(space, [0])) == 1
    assert kantorovich_norm(vector(space, [0, 1])) == HALF
    assert kantorovich_norm(vector(space, [0, 2])) == 1
    # pairing the two points beats sending each to the zero point
    norm, pairing = optimal_pairing(vector(space, [0, 1]))
    assert norm == HALF and pairing == [(0, 1)]


def test_norm_odd_support_pads_with_zero_point():
    space = free_space(TWO_LEVEL)
    norm, pairing = optimal_pairing(vector(space, [0, 1, 2]))
    assert norm == 1
    flattened = {p for pair in pairing for p in pair}
    assert flattened == {0, 1, 2, 3}  # the zero point participates


def test_auxiliary_oracle_agrees():
    rng = random.Random(5)
    for _ in range(15):
        base = random_ultrametric(rng, rng.randint(1, 4))
        space = free_space(base)
        n = space.carrier_size - 1
        for mask in range(1 << n):
            support = [x for x in range(n) if mask >> x & 1]
            v = vector(space, support)
            assert kantorovich_norm(v) == kantorovich_norm_with_auxiliary(v)


def test_ultranorm_max_law_small():
    space = free_space(TWO_LEVEL)
    supports = [frozenset(s) for s in ([], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2])]
    norm = {s: kantorovich_norm(FreeVector(space=space, support=s)) for s in supports}
    for a in supports:
        for b in supports:
            assert norm[a ^ b] <= max(norm[a], norm[b])


def test_extension_identity_constant_and_guards():
    space = free_space(TWO_LEVEL)
    v = vector(space, [0, 1])
    assert lipschitz_linear_extend((0, 1, 2), v) == v
    collapsed = lipschitz_linear_extend((2, 2, 2), v)
    assert collapsed.is_zero()
    assert kantorovich_norm(collapsed) == 0
    with pytest.raises(ValueError):
        lipschitz_linear_extend((0, 1), v)
    with pytest.raises(ValueError):
        lipschitz_linear_extend((0, 1, 3), v)


def test_extension_rejects_expanding_maps():
    space = free_space(TWO_LEVEL)
    v = vector(space, [0])
    # sending the close pair {0,1} onto the far pair {0,2} expands
    with pytest.raises(NotLipschitz):
        lipschitz_linear_extend((0, 2, 1), v)


def test_extension_contracts_norm_exhaustively():
    space = free_space(TWO_LEVEL)
    theta = enumerate_theta(TWO_LEVEL)
    for f in theta.elements:
        for mask in range(8):
            support = [x for x in range(3) if mask >> x & 1]
            v = vector(space, support)
            image = lipschitz_linear_extend(f, v)
            assert kantorovich_norm(image) <= kantorovich_norm(v)


def test_extension_respects_composition():
    space = free_space(TWO_LEVEL)
    theta = enumerate_theta(TWO_LEVEL)
    v = vector(space, [0, 2])
    for f in theta.elements:
        for g in theta.elements:
            fg = tuple(f[g[x]] for x in range(3))
            assert lipschitz_linear_extend(fg, v) == lipschitz_linear_extend(
                f, lipschitz_linear_extend(g, v)
            )


def test_support_resource_limit():
    base = UltraPseudometric.discrete(9)
    space = free_space(base)
    with pytest.raises(ResourceLimit):
        kantorovich_norm(vector(space, range(9)))
