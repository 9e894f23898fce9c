"""Dualities between self-maps, ring endomorphisms, and dual-group endomorphisms.

For an n-point carrier Y with powerset ring B:

* ``phi`` sends a self-map s to the ring endomorphism "precompose with s":
  the indicator of A goes to the indicator of the preimage of A.  It
  reverses composition order and is a bijection onto all ring
  endomorphisms.
* ``delta_adjoint`` sends an additive endomorphism of B to its adjoint on
  the character group (precomposition), whose matrix is the transpose.
  It also reverses composition order.
* ``delta_eval`` embeds Y into the character group by evaluation; its
  image is exactly the multiplicative unital characters.

The composite ``hom_embed = delta_adjoint . phi`` is order-preserving and
makes evaluation equivariant: hom_embed(s) maps eval(y) to eval(s(y)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolring import (
    BoolRing,
    GroupEndo,
    RingEndo,
    parity,
    pontryagin_dual,
)
from .errors import DimensionMismatch
from .finmon import SelfMapMonoid
from .ultra import Partition

ON_MAPS = "on_maps"
ON_RING_ENDOS = "on_ring_endos"
ON_DUAL_ENDOS = "on_dual_endos"

TAGS = (ON_MAPS, ON_RING_ENDOS, ON_DUAL_ENDOS)


def preimage_mask(s, chi: int) -> int:
    """Mask of points y with s(y) in the set coded by chi."""
    return sum(1 << y for y, sy in enumerate(s) if chi >> sy & 1)


def phi(s, ring: BoolRing | None = None) -> RingEndo:
    """Ring endomorphism indicator(A) -> indicator(preimage of A)."""
    s = tuple(int(v) for v in s)
    if ring is None:
        ring = BoolRing(len(s))
    if ring.atom_count != len(s):
        raise DimensionMismatch(
            f"self-map on {len(s)} points against a {ring.atom_count}-atom ring"
        )
    images = tuple(preimage_mask(s, 1 << a) for a in range(ring.atom_count))
    return RingEndo(ring=ring, atom_images=images)


def phi_inverse(mu: RingEndo) -> tuple[int, ...]:
    """The unique self-map s with phi(s) = mu.

    The atom images partition the carrier, so each point sits in exactly
    one image; the owning atom is its value under s.
    """
    n = mu.ring.atom_count
    out = [-1] * n
    for a, img in enumerate(mu.atom_images):
        for y in range(n):
            if img >> y & 1:
                out[y] = a
    return tuple(out)


def delta_adjoint(sigma: GroupEndo) -> GroupEndo:
    """Adjoint on characters, f -> f . sigma; as a matrix, the transpose."""
    return sigma.transpose()


def delta_eval(y: int, ring: BoolRing) -> int:
    """Evaluation character of the point y, as a dual-group mask."""
    if not 0 <= y < ring.atom_count:
        raise ValueError(f"point {y} outside the {ring.atom_count}-point carrier")
    return 1 << y


def hom_embed(s, ring: BoolRing | None = None) -> GroupEndo:
    """The composite embedding into dual-group endomorphisms."""
    return delta_adjoint(phi(s, ring).to_group_endo())


@dataclass(frozen=True)
class EntourageChi:
    """The basic entourage indexed by a ring element, in one representation.

    Each tag yields a relation on self-maps of the carrier: equality of
    preimages of the set coded by chi, equality of the phi-images at chi,
    or equality of the transported action at chi under every character.
    All three relations agree pointwise.

    On a finite discrete carrier the pointwise and uniform-convergence
    comparisons coincide, so an entourage is represented only through its
    defining relation, never as an abstract filter member.
    """

    ring: BoolRing
    chi: int
    tag: str

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown representation tag {self.tag!r}")
        if not 0 <= self.chi < self.ring.size:
            raise ValueError("chi out of range")

    def relates(self, s1, s2) -> bool:
        if self.tag == ON_MAPS:
            return preimage_mask(s1, self.chi) == preimage_mask(s2, self.chi)
        if self.tag == ON_RING_ENDOS:
            return phi(s1, self.ring).apply(self.chi) == phi(s2, self.ring).apply(self.chi)
        # literal quantification over every character of the ring
        a = phi(s1, self.ring).apply(self.chi)
        b = phi(s2, self.ring).apply(self.chi)
        return all(
            parity(psi & a) == parity(psi & b)
            for psi in pontryagin_dual(self.ring).elements()
        )


def entourage_transport(chi: int, s1, s2, ring: BoolRing | None = None):
    """Membership of (s1, s2) in the three representations of the chi-entourage.

    The three booleans are always equal; the third is computed by the
    literal character quantification rather than by the separation
    shortcut, so the agreement is informative.
    """
    s1 = tuple(int(v) for v in s1)
    s2 = tuple(int(v) for v in s2)
    if len(s1) != len(s2):
        raise DimensionMismatch("self-maps on different carriers")
    if ring is None:
        ring = BoolRing(len(s1))
    return tuple(
        EntourageChi(ring=ring, chi=chi, tag=tag).relates(s1, s2) for tag in TAGS
    )


def entourage_partition(maps: SelfMapMonoid, chi: int, tag: str,
                        ring: BoolRing | None = None) -> Partition:
    """The chi-entourage as a partition of a transformation monoid.

    Keys by the preimage/image value the relation compares, so the result
    is an equivalence relation by construction; tests confirm it matches
    the pairwise relation.
    """
    if ring is None:
        ring = BoolRing(maps.carrier_size)
    ent = EntourageChi(ring=ring, chi=chi, tag=tag)
    ids = []
    seen: dict[int, int] = {}
    for f in maps.elements:
        key = preimage_mask(f, chi) if tag == ON_MAPS else phi(f, ring).apply(chi)
        ids.append(seen.setdefault(key, len(seen)))
    part = Partition.from_class_ids(ids)
    if tag == ON_DUAL_ENDOS:
        # the character quantification must induce the same classes
        for i, f in enumerate(maps.elements):
            for j in range(i + 1, len(maps.elements)):
                if part.relates(i, j) != ent.relates(f, maps.elements[j]):
                    raise AssertionError("character relation disagrees with classes")
    return part
