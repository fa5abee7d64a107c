"""Conic-bundle lattices and the fiber-swapping parity rule.

A conic bundle with m degenerate fibers has Picard lattice spanned by a fiber
class f, a section s and one component e_i of each degenerate fiber.  An
isometry that fixes f and K and keeps every fiber must switch the two
components of an even number of fibers.
"""

from picardlab import census, cohomology, gaction
from picardlab.picard import conic_bundle

for m in range(1, 5):
    l = conic_bundle(m, 1)
    counts = sorted({len(s) for _, s, _ in census.fiber_preserving_isometries(l, base_trivial=True)})
    print(f"m={m}: swap counts that occur {counts}")

try:
    census.cb_swap_isometry(conic_bundle(3, 1), [1, 2, 3], [1])
except ValueError as exc:
    print("a single swap is rejected:", exc)

print()
for n in (3, 5):
    e = census.binary_dihedral_bundle(n)
    print(f"binary dihedral n={n}: order {e.group.order}, fibers {e.lattice.fiber_count},",
          f"{len(e.metadata['schedules'])} swap schedules, H^1-trivial:",
          cohomology.h1_trivial_all_subgroups(e.group)[0])

# The Z/4 + Z/2 bundle on four fibers: the lattice image is only (Z/2)^2, and
# H^1 of the whole group does not vanish.
e = census.iskovskikh_bundle()
print("\nZ/4 + Z/2 bundle: image order", e.group.order, "invariant rank", gaction.invariant_rank(e.group))
for row in e.metadata["subgroup_h1"]:
    print(f"  subgroup of order {len(row['elements'])}: H^1 factors {row['invariant_factors']}")
