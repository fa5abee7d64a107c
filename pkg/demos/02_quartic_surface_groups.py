"""Groups acting on the Picard lattice of a quartic del Pezzo surface.

The abelian group A = (Z/2)^4 sits inside W(D5) as the unique normal subgroup
of order 16.  Its five involutions of trace -3 on K-perp play the role of the
de Jonquieres involutions.  We then look at the order-12 group that acts
minimally and check that its H^1 vanishes on every subgroup.
"""

from picardlab import census, cohomology, gaction
from picardlab.picard import del_pezzo
from picardlab.weyl import all_subgroups

A = census.quartic_A().group
traces = {}
for t in (A.traces - 1).tolist():
    traces[t] = traces.get(t, 0) + 1
print("traces on K-perp in A:", traces)

tau = census.quartic_taus()[0]
print("H^1 of one tau:", cohomology.h1_cyclic(tau, 2))
print("H^1 of A itself:", cohomology.h1(A))

subs = census.tau_free_subgroups()
print("tau-free subgroups: pairs", len(subs["pair"]), "triples", len(subs["triple"]))

e = census.quartic_minimal_group()
G = e.group
print("\nminimal group: order", G.order, "invariant rank", gaction.invariant_rank(G))
print("orbit sizes on the 16 lines:", gaction.orbit_sizes(G, del_pezzo(4).exceptional))
print("candidates found", e.metadata["subgroups_found"], "in", e.metadata["conjugacy_classes"], "conjugacy class(es)")
subgroups = all_subgroups(G)
print(f"its {len(subgroups)} subgroups all have H^1 = 0:",
      all(cohomology.h1(h).is_trivial for h in subgroups))
