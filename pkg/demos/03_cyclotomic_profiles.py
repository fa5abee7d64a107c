"""Characteristic polynomials on K-perp, factored into cyclotomic pieces.

An isometry of finite order has a characteristic polynomial that is a product
of cyclotomic polynomials.  Tabulating these profiles over all of W(E6)
shows which combinations actually occur for each element order.
"""

from collections import defaultdict

from picardlab import census, gaction
from picardlab.weyl import element_order_array

W = census.weyl_of(3)
orders = element_order_array(W)
profiles = gaction.cyclo_profiles(W)

by_order = defaultdict(lambda: defaultdict(int))
for p, o in zip(profiles, orders.tolist()):
    by_order[o][str(p)] += 1

for o in sorted(by_order):
    print(f"order {o:2d}:", ", ".join(f"{p} x{n}" for p, n in sorted(by_order[o].items())))

# Powers are read off the profile alone: Phi_d under x -> x^k becomes
# gcd(d, k) copies of Phi_{d / gcd(d, k)}.
i = next(j for j, o in enumerate(orders.tolist()) if o == 12)
print("\nan element of order 12:", profiles[i])
for k in (2, 3, 4, 6):
    print(f"  predicted profile of its {k}-th power:", gaction.cyclo_power(profiles[i], k))
