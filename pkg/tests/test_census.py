import itertools
import json
import logging

import numpy as np
import pytest
import sympy

from picardlab import census, cohomology, gaction, weyl
from picardlab.census import cb_swap_isometry, fiber_data, swap_count
from picardlab.picard import conic_bundle, del_pezzo, pairing, second_section
from picardlab.weyl import Isometry, reflection


# ---------------------------------------------------------------- degree 4


def test_quartic_A_structure():
    e = census.quartic_A()
    A = e.group
    assert A.order == 16
    assert set(weyl.element_orders(A)) == {1, 2}
    assert e.metadata["tau_product_all_identity"]
    traces = sorted((A.traces - 1).tolist())
    assert traces == [-3] * 5 + [1] * 10 + [5]
    # A is the diagonal sign-change group: every element permutes lines, none is a permutation of e_i alone
    l = del_pezzo(4)
    assert all(weyl.is_isometry(l, x) for x in A.elements)


def test_tau_free_subgroups():
    subs = census.tau_free_subgroups()
    assert len(subs["pair"]) == 10 and len(subs["triple"]) == 10
    assert len(subs["trivial"]) == 1 and not subs["other"]
    assert {int((h.traces - 1).sum()) for h in subs["pair"]} == {6}
    assert {int((h.traces - 1).sum()) for h in subs["triple"]} == {8}
    # brute force over the 67 subgroups of (Z/2)^4
    assert len(weyl.all_subgroups(census.quartic_A().group)) == 67


def test_quartic_minimal_group():
    e = census.quartic_minimal_group()
    G = e.group
    assert G.order == 12
    assert gaction.invariant_rank(G) == 1
    x, y = G.generators
    assert x.order() == 3 and y.order() == 4
    assert y @ x @ y.inverse() == x.inverse()
    traces = (G.traces - 1).tolist()
    assert sum(traces) == 0
    orders = weyl.element_order_array(G)
    assert {t for t, o in zip(traces, orders) if o == 4} == {-1}
    assert {t for t, o in zip(traces, orders) if o == 6} == {-2}
    assert -3 not in traces
    assert e.metadata["conjugacy_classes"] == 1


def brute_subgroup_count(table, identity):
    n = len(table)
    found = set()
    for k in range(1, 4):
        for gens in itertools.combinations(range(n), k):
            s = {identity}
            frontier = [identity]
            while frontier:
                a = frontier.pop()
                for g in gens:
                    b = table[a][g]
                    if b not in s:
                        s.add(b)
                        frontier.append(b)
            found.add(frozenset(s))
    found.add(frozenset([identity]))
    return len(found)


def test_minimal_group_subgroup_count():
    G = census.quartic_minimal_group().group
    subs = weyl.all_subgroups(G)
    assert len(subs) == brute_subgroup_count(G.mult_table.tolist(), G.identity_index) == 8


# ---------------------------------------------------------------- central involutions


@pytest.mark.parametrize("name,degree,trace", [("geiser", 2, -7), ("bertini", 1, -8)])
def test_central_involutions(name, degree, trace):
    e = getattr(census, name)()
    x = e.metadata["element"]
    l = del_pezzo(degree)
    assert (x @ x).is_identity()
    assert gaction.trace_on_Q(x) == trace
    assert x.apply(l.canonical) == l.canonical
    for s in weyl.weyl_generators(l):
        assert x @ s == s @ x


def test_geiser_commutes_with_all_root_reflections():
    l = del_pezzo(2)
    x = census.geiser().metadata["element"]
    assert len(l.root_system) == 126
    assert all(x @ reflection(l, a) == reflection(l, a) @ x for a in l.root_system.roots)


# ---------------------------------------------------------------- conic bundles


def test_swap_isometry_examples():
    l = conic_bundle(4, 2)
    assert cb_swap_isometry(l, [1, 2, 3, 4], ()).is_identity()
    x = cb_swap_isometry(l, [1, 2, 3, 4], {1, 2})
    assert x.apply(l.s) == (1, 1, -1, -1, 0, 0)
    assert weyl.is_isometry(l, x)
    for p in itertools.permutations([1, 2, 3, 4]):
        with pytest.raises(ValueError):
            cb_swap_isometry(l, list(p), {1})


def test_swap_isometry_bad_input():
    l = conic_bundle(3, 1)
    with pytest.raises(ValueError):
        cb_swap_isometry(l, [1, 1, 2], ())
    with pytest.raises(ValueError):
        cb_swap_isometry(l, [1, 2, 3], {4, 1})


def test_fiber_data_roundtrip():
    l = conic_bundle(5, 1)
    x = cb_swap_isometry(l, [2, 3, 1, 5, 4], {1, 4})
    assert fiber_data(x) == ((2, 3, 1, 5, 4), frozenset({1, 4}))
    assert swap_count(x) == 0
    y = cb_swap_isometry(l, [1, 2, 3, 5, 4], {1, 2})
    assert swap_count(y) == 2


def test_parity_exhaustive():
    res = census.cb_parity_check(4)
    from math import factorial

    for (m, e), v in res.items():
        assert v["odd"] == 0
        assert v["isometries"] == 2 ** (m - 1) * factorial(m)
        assert v["base_trivial"] == 2 ** (m - 1)
        assert v["even_swaps_validate"]


def test_fiber_preserving_group_order():
    assert census.fiber_preserving_group(4, 2).order == 192


@pytest.mark.parametrize("n", [3, 5])
def test_binary_dihedral(n):
    e = census.binary_dihedral_bundle(n)
    g = e.group
    l = g.lattice
    assert g.order == 4 * n
    assert weyl.element_orders(g)[2] == 1
    assert l.fiber_count == n + 2
    assert pairing(l, l.canonical, l.canonical) == 6 - n == 8 - l.fiber_count
    assert e.metadata["tau_switched_fibers"] == [n + 1, n + 2]
    assert gaction.invariant_rank(g) == 2
    assert cohomology.h1_trivial_all_subgroups(g)[0]
    # non-abelian: generators do not commute
    r, s = g.generators
    assert r @ s != s @ r


def test_binary_dihedral_schedule_counts():
    assert len(census.binary_dihedral_schedules(3)) == 8
    assert len(census.binary_dihedral_schedules(5)) == 32
    for sched in census.binary_dihedral_schedules(3):
        assert cohomology.h1_trivial_all_subgroups(sched["group"])[0]


def test_binary_dihedral_rejects_even():
    with pytest.raises(ValueError):
        census.binary_dihedral_schedules(4)


def test_iskovskikh_image():
    e = census.iskovskikh_bundle()
    g = e.group
    l = g.lattice
    assert (l.fiber_count, l.section_param) == (4, 2)
    assert g.order == 4 and set(weyl.element_orders(g)) == {1, 2}
    assert gaction.invariant_rank(g) == 2
    c2 = second_section(l)
    assert pairing(l, l.s, l.s) == pairing(l, c2, c2) == -2
    assert c2 in gaction.orbit_of(g, l.s)
    assert {swap_count(x) for x in g.elements} == {0, 2}
    # invariant lattice spanned (over Q) by K and f
    inv = gaction.invariant_sublattice(g).tolist()
    M = sympy.Matrix(inv + [list(l.canonical), list(l.f)])
    assert M.rank() == 2


def test_iskovskikh_cohomology_finding():
    e = census.iskovskikh_bundle()
    table = e.metadata["subgroup_h1"]
    assert len(table) == len(census.z4z2_subgroups()) == 8
    proper = [d for d in table if len(d["elements"]) < 8]
    assert all(not d["invariant_factors"] for d in proper)
    whole = [d for d in table if len(d["elements"]) == 8][0]
    assert whole["invariant_factors"] == [2]
    # inflation: the abstract group's H^1 equals the image's
    assert cohomology.h1(e.group).invariant_factors == (2,)
    assert e.metadata["images_found"] == 12
    assert e.metadata["faithful_z4z2_with_valid_swaps"] == 0


def test_s4_g2():
    e = census.s4_bundle(2)
    g = e.group
    l = g.lattice
    assert g.order == 24 and l.fiber_count == 6 and l.section_param == 3
    assert gaction.invariant_rank(g) == 2
    assert second_section(l) in gaction.orbit_of(g, l.s)
    assert cohomology.h1_trivial_all_subgroups(g)[0]
    assert sorted(weyl.element_orders(g)) == [1, 2, 3, 4]


@pytest.mark.heavy
@pytest.mark.parametrize("g", [5, 8])
def test_s4_large(g):
    e = census.s4_bundle(g)
    G = e.group
    assert G.order == 24 and G.lattice.fiber_count == 2 * g + 2
    assert gaction.invariant_rank(G) == 2
    ok, witness = cohomology.h1_trivial_all_subgroups(G)
    assert not ok and witness.order == 4


def test_psi_metadata():
    assert {k: census.psi_degree(k) for k in census.PSI} == {"psi6": 6, "psi8": 8, "psi12": 12}
    for g, names in census.S4_CASES.items():
        assert sum(census.psi_degree(n) for n in names) == 2 * g + 2
    assert census.dihedral_semi_invariant_orbits(7) == {"y1^n - y2^n": 7, "y1^n + y2^n": 7, "y1*y2": 2}
    with pytest.raises(ValueError):
        census.s4_bundle(3)


def test_node_cusp():
    assert census.node_cusp_validator(12, 0)
    assert census.node_cusp_validator(0, 6)
    assert not census.node_cusp_validator(11, 1)
    with pytest.raises(ValueError):
        census.node_cusp_validator(-1, 0)


# ---------------------------------------------------------------- serialization and registry


@pytest.mark.parametrize("name", ["quartic-A", "quartic-minimal", "geiser", "binary-dihedral-3", "iskovskikh", "s4-g2"])
def test_entry_json_roundtrip(name):
    e = census.entry(name)
    d = json.loads(json.dumps(e.to_json()))
    back = census.CensusEntry.from_json(d)
    assert back.id == e.id
    assert np.array_equal(back.group.array, e.group.array)
    assert all(weyl.is_isometry(back.lattice, x) for x in back.group.elements)


def test_unknown_entry():
    with pytest.raises(KeyError):
        census.entry("nope")


def test_verify_unknown_claim(caplog):
    with caplog.at_level(logging.WARNING):
        assert census.verify_all(claim_ids=["no.such.claim"]) == []
    assert "no.such.claim" in caplog.text


def test_verify_default_statuses():
    results = census.verify_all()
    assert [r.claim_id for r in results] == census.CLAIM_IDS
    status = {r.claim_id: r.status for r in results}
    heavy = {c.claim_id for c in census.CLAIMS if c.heavy}
    assert {status[c] for c in heavy} == {"not-run"}
    assert status["dp3.trace_sign"] == "partially-checkable"
    # the only failing default claim is the documented H^1 finding for the abelian bundle
    assert sorted(c for c, s in status.items() if s == "fail") == ["cb.iskovskikh"]
    for r in results:
        d = r.to_json()
        assert set(d) >= {"claim_id", "status", "expected", "actual", "paper_anchor"}
        json.dumps(d)


def test_verify_threads_match_serial(monkeypatch):
    ids = ["dp.root_counts", "dp4.orbits", "h1.tau", "cb.binary_dihedral_3"]
    serial = [r.to_json() for r in census.verify_all(claim_ids=ids)]
    monkeypatch.setenv(census.THREADS_ENV, "4")
    parallel = [r.to_json() for r in census.verify_all(claim_ids=ids)]
    assert serial == parallel


@pytest.mark.heavy
def test_e7_element_orders():
    full, quot = census.e7_element_orders()
    assert sum(full.values()) == 2903040
    assert sorted(quot) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15]
    # counting in the quotient: each coset {w, w gamma} is counted twice
    assert sum(quot.values()) == 2903040
