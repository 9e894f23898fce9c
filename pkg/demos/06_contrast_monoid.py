"""The lopsided glued monoid: compatible on the left, obstructed on the right.

The cube part multiplies pointwise and acts on the segment part by
reading coordinates; segment elements absorb from the left.  The
first-difference ultrametric on the cube (1 everywhere else) is
nonexpansive under left translations, so left translations embed the
monoid into its own Lipschitz monoid.  Right translations expand it,
and every agreement neighborhood of the identity can be dragged onto
the sink by a segment element, which is the finite obstruction to the
mirror-image compatibility.
"""

from stonework import build_contrast, obstruction_witness, rna_certificate
from stonework.contrast import agreement_neighborhood

k = 4
inst = build_contrast(k)
print(f"truncation {k}: carrier of {inst.carrier_size} elements "
      f"({inst.cube_size} cube tuples + {k} segment elements)")
print("identity:", inst.describe(inst.identity), " sink:", inst.describe(inst.sink))

cert = rna_certificate(inst)
print("\ncertificate:")
print("  metric left-nonexpansive:       ", cert.left_nonexpansive)
print("  left translations 1-Lipschitz:  ", cert.translations_lipschitz)
print("  translation map injective:      ", cert.embedding_injective)
print("  translation map multiplicative: ", cert.embedding_homomorphism)
x, y, s = cert.right_witness
print(f"  right-nonexpansiveness fails at x={inst.describe(x)} "
      f"y={inst.describe(y)} s={inst.describe(s)}:")
m, d = inst.monoid, inst.metric
print(f"    d(x,y) = {d.d(x, y)}  but  d(xs,ys) = {d.d(m.mul(x, s), m.mul(y, s))}")

print("\nobstruction witnesses (agreement depth j -> element of the "
      "neighborhood times a segment element = sink):")
for j in range(k):
    u, nat = obstruction_witness(inst, j)
    size = len(agreement_neighborhood(inst, j))
    print(f"  j={j} (|U_j|={size:2d}):  {inst.describe(u)} * {inst.describe(nat)}"
          f" = {inst.describe(m.mul(u, nat))}")
