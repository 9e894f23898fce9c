"""Free vectors over the two-element field on a pointed ultrametric base,
the Kantorovich maximal ultra-norm, and 1-Lipschitz linear extension.

Coefficients live in the two-element field, so a vector is just its
support set and addition is symmetric difference.  The base space is an
ultrametric carrier with one extra point adjoined: the zero of the
vector space, at distance exactly 1 from every base point (the input
metric is truncated at 1 first so this stays an ultrametric).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotLipschitz, ResourceLimit
from .ultra import UltraPseudometric

MAX_SUPPORT = 8


def free_space(d: UltraPseudometric) -> UltraPseudometric:
    """Adjoin the zero point (last index) at distance 1 from every point.

    The input is truncated at 1 beforehand; truncation preserves the
    strong triangle inequality and keeps the 1-Lipschitz monoid intact.
    """
    n = d.carrier_size
    one = Fraction(1)
    rows = [[min(d.dist[x][y], one) for y in range(n)] + [one] for x in range(n)]
    rows.append([one] * n + [Fraction(0)])
    for x in range(n):
        rows[x][x] = Fraction(0)
    return UltraPseudometric.from_rows(rows)


@dataclass(frozen=True)
class FreeVector:
    """A two-element-field combination of base points, stored as its support.

    space must be a pointed metric as produced by free_space; the last
    index is the zero point and never appears in a support.
    """

    space: UltraPseudometric
    support: frozenset[int]

    def __post_init__(self):
        zero = self.space.carrier_size - 1
        if any(not 0 <= x < zero for x in self.support):
            raise ValueError("support must avoid the zero point and stay in range")
        one = Fraction(1)
        for x in range(zero):
            if self.space.dist[x][zero] != one:
                raise ValueError("space is not pointed: zero point not at distance 1")

    @property
    def zero_point(self) -> int:
        return self.space.carrier_size - 1

    def add(self, other: FreeVector) -> FreeVector:
        if other.space is not self.space and other.space != self.space:
            raise ValueError("vectors over different spaces")
        return FreeVector(space=self.space, support=self.support ^ other.support)

    def is_zero(self) -> bool:
        return not self.support


def vector(space: UltraPseudometric, points) -> FreeVector:
    return FreeVector(space=space, support=frozenset(map(int, points)))


def _matchings(points: list[int]):
    """All perfect matchings of an even-length list of point indices."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, partner in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def _best_matching(space: UltraPseudometric, points: list[int]):
    best_norm = None
    best_pairs = None
    for pairs in _matchings(points):
        worst = max((space.dist[a][b] for a, b in pairs), default=Fraction(0))
        if best_norm is None or worst < best_norm:
            best_norm, best_pairs = worst, pairs
    return best_norm, best_pairs


def optimal_pairing(v: FreeVector) -> tuple[Fraction, list[tuple[int, int]]]:
    """Norm together with a pairing of the support realizing it.

    The support is matched up perfectly (padded with the zero point when
    odd); the norm is the smallest achievable maximum pair distance.
    Intermediate points cannot help: by the strong triangle inequality a
    two-step pairing through an extra point is never better, which the
    auxiliary-point search below validates on small instances.
    """
    points = sorted(v.support)
    if not points:
        return Fraction(0), []
    if len(points) > MAX_SUPPORT:
        raise ResourceLimit(
            f"support of size {len(points)} above the pairing bound {MAX_SUPPORT}"
        )
    if len(points) % 2:
        points.append(v.zero_point)
    norm, pairs = _best_matching(v.space, points)
    return norm, pairs


def kantorovich_norm(v: FreeVector) -> Fraction:
    """Minimal over pairings of the maximal pair distance; 0 on the zero vector."""
    return optimal_pairing(v)[0]


def kantorovich_norm_with_auxiliary(v: FreeVector) -> Fraction:
    """Reference norm allowing one doubled auxiliary point in the pairing.

    A doubled point cancels over the two-element field, so this searches
    a strictly larger representation class; agreement with the plain
    pairing search is a checkable instance of the maximality argument.
    """
    base = kantorovich_norm(v)
    points = sorted(v.support)
    if len(points) % 2:
        points.append(v.zero_point)
    best = base
    for z in range(v.space.carrier_size):
        worst, _ = _best_matching(v.space, points + [z, z])
        if worst < best:
            best = worst
    return best


def lipschitz_linear_extend(f, v: FreeVector) -> FreeVector:
    """Push a vector forward along a 1-Lipschitz base self-map.

    f acts on the base points (the zero point stays fixed); colliding
    images cancel in the two-element field.  Raises NotLipschitz with a
    witness pair if f increases some base distance.
    """
    f = tuple(int(x) for x in f)
    zero = v.zero_point
    if len(f) != zero:
        raise ValueError("map must be defined on exactly the base points")
    if any(not 0 <= x < zero for x in f):
        raise ValueError("map must send base points to base points")
    for x in range(zero):
        for y in range(x + 1, zero):
            if v.space.dist[f[x]][f[y]] > v.space.dist[x][y]:
                raise NotLipschitz(x, y)
    image: set[int] = set()
    for x in v.support:
        image ^= {f[x]}
    return FreeVector(space=v.space, support=frozenset(image))
