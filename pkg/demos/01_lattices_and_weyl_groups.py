"""Picard lattices of del Pezzo surfaces and their Weyl groups.

Walks down the degrees, printing the root system type, the number of roots and
lines, and the Weyl group order.  The small groups are enumerated outright; the
degree-2 group is sized by orbit-stabilizer on the 56 lines.
"""

from picardlab import del_pezzo, dynkin_type
from picardlab.weyl import group_order_orbit_stabilizer, weyl_generators, weyl_group

print(f"{'degree':>6} {'type':>7} {'roots':>6} {'lines':>6} {'|W|':>9}")
for d in range(7, 0, -1):
    l = del_pezzo(d)
    if d >= 3:
        order = weyl_group(l).order
    elif d == 2:
        order = group_order_orbit_stabilizer(l, weyl_generators(l))
    else:
        order = "-"  # W(E8) is out of desk scale
    print(f"{d:>6} {dynkin_type(l):>7} {len(l.root_system):>6} {len(l.exceptional):>6} {order:>9}")

# The degree-2 group has a center of order 2 (the Geiser involution), so the
# quotient has order 1451520.
l = del_pezzo(2)
print("\nW(E7) / center:", group_order_orbit_stabilizer(l, weyl_generators(l)) // 2)
