"""The maximal ultra-norm on two-element-field combinations of metric points.

Vectors over the two-element field are support sets; the norm of a
vector is the cheapest way to pair its support up (odd supports borrow
the adjoined zero point), where a pairing costs its worst pair distance.
The norm extends the metric on point differences, obeys the ultra-norm
maximum law, and shrinks under 1-Lipschitz substitutions.
"""

from fractions import Fraction

from stonework import (
    UltraPseudometric,
    enumerate_theta,
    free_space,
    kantorovich_norm,
    kantorovich_norm_with_auxiliary,
    lipschitz_linear_extend,
    optimal_pairing,
    vector,
)

HALF = Fraction(1, 2)
base = UltraPseudometric.from_rows(
    [[0, HALF, 1, 1],
     [HALF, 0, 1, 1],
     [1, 1, 0, Fraction(1, 4)],
     [1, 1, Fraction(1, 4), 0]]
)
space = free_space(base)
print(f"base of 4 points plus an adjoined zero point (index {space.carrier_size - 1})")

for support in ([], [0], [0, 1], [2, 3], [0, 2], [0, 1, 2], [0, 1, 2, 3]):
    v = vector(space, support)
    norm, pairing = optimal_pairing(v)
    print(f"  ||{str(support):14s}|| = {str(norm):5s} via pairing {pairing}")
    assert kantorovich_norm_with_auxiliary(v) == norm

# the norm extends the metric: a two-point vector costs their distance
assert kantorovich_norm(vector(space, [0, 1])) == base.d(0, 1)
assert kantorovich_norm(vector(space, [2, 3])) == base.d(2, 3)

# ultra-norm law on a sample pair
u, w = vector(space, [0, 1]), vector(space, [1, 2])
assert kantorovich_norm(u.add(w)) <= max(kantorovich_norm(u), kantorovich_norm(w))
print("\nmax law: ||u+w|| <= max(||u||, ||w||) on the sample pair")

# 1-Lipschitz substitution never increases the norm
theta = enumerate_theta(base)
v = vector(space, [0, 2, 3])
worst = max(
    kantorovich_norm(lipschitz_linear_extend(f, v)) for f in theta.elements
)
print(f"worst image norm of ||{sorted(v.support)}|| = {kantorovich_norm(v)} "
      f"over all {len(theta)} Lipschitz maps: {worst}")
assert worst <= kantorovich_norm(v)
