import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from picardlab import census, gaction, weyl
from picardlab.exactlin import CycloFactorization, char_poly
from picardlab.picard import conic_bundle, del_pezzo
from picardlab.weyl import Isometry


@pytest.fixture(scope="module")
def wd5():
    return census.weyl_of(4)


def test_trace_on_identity():
    assert gaction.trace_on_Q(Isometry.identity(6)) == 5
    assert gaction.predicted_euler(Isometry.identity(6)) == 8


def test_trace_requires_fixed_K():
    x = Isometry(-np.eye(6, dtype=np.int64))
    with pytest.raises(gaction.ActionError):
        gaction.trace_on_Q(x)


def test_tau_traces():
    taus = census.quartic_taus()
    assert [gaction.trace_on_Q(t) for t in taus] == [-3] * 5
    assert {gaction.predicted_euler(t) for t in taus} == {0}
    for i in range(5):
        for j in range(i + 1, 5):
            x = taus[i] @ taus[j]
            assert gaction.trace_on_Q(x) == 1
            assert gaction.predicted_euler(x) == 4


def test_invariant_rank_examples():
    l = del_pezzo(4)
    assert gaction.invariant_rank(weyl.generate(l, [])) == 6
    tau = census.quartic_taus()[0]
    assert gaction.invariant_rank(weyl.generate(l, [tau])) == 2
    assert gaction.invariant_rank(census.quartic_minimal_group().group) == 1


@given(st.lists(st.integers(0, 1919), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_invariant_rank_two_ways(idx):
    W = census.weyl_of(4)
    g = weyl.generate(W.lattice, [W.element(i) for i in idx])
    assert gaction.character_rank(g) == gaction.invariant_sublattice(g).rows
    assert gaction.invariant_rank(g) >= 1


def test_orbits(wd5):
    l = del_pezzo(4)
    triv = weyl.generate(l, [])
    assert gaction.orbit_sizes(triv, l.exceptional) == [1] * 16
    assert gaction.orbit_sizes(wd5, l.exceptional) == [16]
    G = census.quartic_minimal_group().group
    orbits = gaction.orbits_on(G, l.exceptional)
    assert sorted(len(o) for o in orbits) == [4, 12]
    assert sum(len(o) for o in orbits) == 16
    assert [o[0] for o in orbits] == sorted(o[0] for o in orbits)


def test_orbit_escape_detected(wd5):
    l = del_pezzo(4)
    with pytest.raises(gaction.ActionError):
        gaction.orbits_on(wd5, [l.exceptional.classes[0]])


def test_geiser_orbits():
    g = census.geiser().group
    sizes = gaction.orbit_sizes(g, del_pezzo(2).exceptional)
    assert sizes == [2] * 28
    # gamma sends L to -K - L
    l = del_pezzo(2)
    x = census.geiser().metadata["element"]
    for c in l.exceptional:
        assert x.apply(c) == tuple(-k - a for k, a in zip(l.canonical, c))


def test_divisibility():
    assert gaction.minimality_divisibility_check(census.quartic_minimal_group().group) is True
    assert gaction.minimality_divisibility_check(weyl.generate(del_pezzo(4), [])) is None
    assert gaction.minimality_divisibility_check(weyl.generate(del_pezzo(3), [])) is None


def test_rank_one_subgroups_of_a4_have_two_orbits_of_five():
    W = census.weyl_of(5)
    lines = del_pezzo(5).exceptional
    for h in weyl.all_subgroups(W):
        if gaction.invariant_rank(h) != 1:
            continue
        sizes = gaction.orbit_sizes(h, lines)
        assert all(s % 5 == 0 for s in sizes)
        if len(sizes) > 1:
            assert sizes == [5, 5]


def test_profiles_examples():
    assert str(gaction.cyclo_profile(Isometry.identity(6))) == "Phi1^5"
    W = census.weyl_of(3)
    orders = weyl.element_order_array(W)
    profiles = gaction.cyclo_profiles(W)
    assert {str(p) for p, o in zip(profiles, orders) if o == 5} == {"Phi5*Phi1^2"}
    assert {str(p) for p, o in zip(profiles, orders) if o == 9} == {"Phi9"}
    for p in profiles[:200]:
        assert p.degree == 6 and p.remainder == 1


def test_profile_expands_to_char_poly_on_Q(wd5):
    for x in wd5.elements[::37]:
        f = gaction.cyclo_profile(x)
        assert f.expand() == gaction.char_poly_on_Q(x)
        full, rem = char_poly(x.matrix).divmod_monic(f.expand())
        assert rem == 0 and full.degree == 1


def test_cyclo_power_examples():
    for u in range(3):
        for v in range(3):
            for w in range(3):
                f = CycloFactorization.from_dict({4: u, 2: v, 1: w})
                # each -1 eigenvalue squares to one 1-eigenvalue
                assert gaction.cyclo_power(f, 2) == CycloFactorization.from_dict({2: 2 * u, 1: v + w})
    f = CycloFactorization.from_dict({5: 1, 3: 1, 1: 1})
    assert str(gaction.cyclo_power(f, 5)) == "Phi3*Phi1^5"
    g = CycloFactorization.from_dict({12: 1, 6: 2, 1: 1})
    assert gaction.cyclo_power(g, 1) == g


@given(st.integers(0, 1919), st.integers(1, 12))
@settings(max_examples=150, deadline=None)
def test_power_map_coherence_d5(i, k):
    x = census.weyl_of(4).element(i)
    assert gaction.cyclo_power(gaction.cyclo_profile(x), k) == gaction.cyclo_profile(x.power(k))


def test_analyze_report():
    G = census.quartic_minimal_group().group
    rep = gaction.analyze(G)
    assert rep.invariant_rank == 1
    assert rep.orbit_sizes == [4, 12]
    assert rep.trace_multiset() == {-2: 2, -1: 6, 1: 1, 2: 2, 5: 1}
    d = rep.to_json()
    assert d["schema"] == "1" and len(d["elements"]) == 12
    csv_text = rep.to_csv()
    assert csv_text.splitlines()[0] == "index,order,trace_on_Q,predicted_euler,profile"
    assert len(csv_text.splitlines()) == 13


def test_action_classes_conic_bundle():
    l = conic_bundle(4, 2)
    assert len(gaction.action_classes(l)) == 8
