import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from picardlab import weyl
from picardlab.picard import conic_bundle, del_pezzo, pairing
from picardlab.weyl import Isometry, reflection


@pytest.fixture(scope="module")
def wd5():
    return weyl.weyl_group(del_pezzo(4))


@pytest.fixture(scope="module")
def wa4():
    return weyl.weyl_group(del_pezzo(5))


def test_reflection_examples():
    l = del_pezzo(4)
    s = reflection(l, (0, 1, -1, 0, 0, 0))
    expected = np.eye(6, dtype=np.int64)
    expected[[1, 2]] = expected[[2, 1]]
    assert np.array_equal(s.array, expected)
    t = reflection(l, (1, -1, -1, -1, 0, 0))
    assert t.apply(l.h) == (2, -1, -1, -1, 0, 0)
    for a in l.root_system.roots:
        r = reflection(l, a)
        assert (r @ r).is_identity()
        assert weyl.is_isometry(l, r)
    with pytest.raises(weyl.InvalidIsometry):
        reflection(l, (1, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("d,order", [(7, 2), (6, 12), (5, 120), (4, 1920)])
def test_weyl_orders_small(d, order):
    l = del_pezzo(d)
    assert weyl.weyl_group(l).order == order
    assert weyl.group_order_orbit_stabilizer(l, weyl.weyl_generators(l)) == order
    # all root reflections give the same group as the simple ones
    assert weyl.weyl_group(l, simple=False).order == order


def test_weyl_e6_order_and_orders():
    W = weyl.weyl_group(del_pezzo(3))
    assert W.order == 51840
    assert sorted(weyl.element_orders(W)) == [1, 2, 3, 4, 5, 6, 8, 9, 10, 12]


def test_orbit_stabilizer_degree_two():
    l = del_pezzo(2)
    assert weyl.group_order_orbit_stabilizer(l, weyl.weyl_generators(l)) == 2903040


def test_orbit_stabilizer_trivial():
    assert weyl.group_order_orbit_stabilizer(del_pezzo(4), []) == 1


def test_cap_enforced():
    l = del_pezzo(3)
    with pytest.raises(weyl.GroupTooLarge):
        weyl.generate(l, weyl.weyl_generators(l), cap=1000)


def test_invalid_generator_rejected():
    l = del_pezzo(4)
    bad = Isometry(np.diag([1, 1, 1, 1, 1, 2]))
    with pytest.raises(weyl.InvalidIsometry):
        weyl.generate(l, [bad])


def test_generate_is_deterministic(wd5):
    l = del_pezzo(4)
    gens = weyl.weyl_generators(l)
    again = weyl.generate(l, list(reversed(gens)))
    assert np.array_equal(again.array, wd5.array)


def test_every_element_is_isometry_and_permutes_lines(wd5):
    l = del_pezzo(4)
    G = l.gram.to_numpy()
    E = wd5.array
    assert (np.einsum("nji,jk,nkl->nil", E, G, E) == G).all()
    k = np.array(l.canonical)
    assert (E @ k == k).all()
    lines = np.array(l.exceptional.classes).T
    imgs = E @ lines
    line_set = set(l.exceptional.classes)
    for img in imgs:
        assert {tuple(c) for c in img.T.tolist()} == line_set


def test_e6_permutes_lines():
    W = weyl.weyl_group(del_pezzo(3))
    l = del_pezzo(3)
    lines = np.array(l.exceptional.classes).T
    keys = {tuple(c) for c in lines.T.tolist()}
    imgs = W.array @ lines
    assert all({tuple(c) for c in img.T.tolist()} == keys for img in imgs[::97])
    # exhaustive check: line images stay among lines (hash all columns)
    flat = imgs.transpose(0, 2, 1).reshape(-1, 7)
    assert {tuple(r) for r in np.unique(flat, axis=0).tolist()} == keys


@pytest.mark.parametrize("d", [3, 4, 5])
def test_faithful_on_lines(d):
    W = weyl.weyl_group(del_pezzo(d))
    P = np.array(del_pezzo(d).exceptional.classes).T
    assert int(((W.array @ P) == P).all(axis=(1, 2)).sum()) == 1


def test_element_orders_small(wa4):
    assert sorted(weyl.element_orders(wa4)) == [1, 2, 3, 4, 5, 6]
    # cycle type counts in S5
    assert weyl.element_orders(wa4) == Counter({1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20})
    trivial = weyl.generate(del_pezzo(4), [])
    assert weyl.element_orders(trivial) == Counter({1: 1})


def test_d5_structure(wd5):
    normals = weyl.normal_subgroups(wd5, 16)
    assert len(normals) == 1
    A = normals[0]
    assert set(weyl.element_orders(A)) == {1, 2}
    E = A.array
    assert all((a @ b == b @ a).all() for a in E for b in E)


def test_centralizer_and_conjugacy(wd5):
    l = del_pezzo(4)
    ident = Isometry.identity(6)
    assert weyl.centralizer(wd5, ident).order == wd5.order
    r1 = reflection(l, (0, 1, -1, 0, 0, 0))
    r2 = reflection(l, (1, -1, -1, -1, 0, 0))
    assert weyl.conjugacy_test(wd5, r1, r2)
    assert not weyl.conjugacy_test(wd5, r1, ident)
    classes = weyl.conjugacy_classes(wd5)
    assert sum(len(c) for c in classes) == 1920
    assert len(classes) == 18  # class number of W(D5)


def brute_subgroups(elements, mul, identity):
    """Oracle: closures of all subsets of size <= 2 (enough for 2-generated groups) plus unions."""
    n = len(elements)
    idx = range(n)

    def close(gens):
        s = {identity}
        frontier = [identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = mul[x][g]
                if y not in s:
                    s.add(y)
                    frontier.append(y)
        return frozenset(s)

    subs = {close([])}
    changed = True
    subs |= {close([a, b]) for a, b in itertools.combinations_with_replacement(idx, 2)}
    while changed:
        changed = False
        for h in list(subs):
            for a in idx:
                if a not in h:
                    k = close(list(h) + [a])
                    if k not in subs:
                        subs.add(k)
                        changed = True
    return subs


def _as_index_sets(g, subs):
    return {frozenset(h.parent_indices) for h in subs}


def test_subgroups_match_brute_force_small_groups(wa4):
    l = del_pezzo(6)
    W6 = weyl.weyl_group(l)
    for g in (W6,):
        mine = _as_index_sets(g, weyl.all_subgroups(g))
        oracle = brute_subgroups(list(range(g.order)), g.mult_table.tolist(), g.identity_index)
        assert mine == oracle
    # S5: 156 subgroups
    assert len(weyl.all_subgroups(wa4)) == 156


def test_order_two_group_subgroups():
    l = del_pezzo(4)
    g = weyl.generate(l, [reflection(l, (0, 1, -1, 0, 0, 0))])
    subs = weyl.all_subgroups(g)
    assert [h.order for h in subs] == [1, 2]


def test_mult_table_is_group_law(wa4):
    t = wa4.mult_table
    e = wa4.identity_index
    assert (t[e] == np.arange(120)).all() and (t[:, e] == np.arange(120)).all()
    inv = wa4.inverse_indices
    assert all(t[i, inv[i]] == e for i in range(120))
    rng = np.random.default_rng(0)
    for a, b, c in rng.integers(0, 120, size=(200, 3)):
        assert t[t[a, b], c] == t[a, t[b, c]]


@given(st.lists(st.integers(0, 1919), min_size=1, max_size=3))
@settings(max_examples=30, deadline=None)
def test_generated_subgroups_agree_with_orbit_stabilizer(idx):
    W = weyl.weyl_group(del_pezzo(4))
    gens = [W.element(i) for i in idx]
    g = weyl.generate(W.lattice, gens)
    assert W.order % g.order == 0
    assert weyl.group_order_orbit_stabilizer(W.lattice, gens) == g.order


def test_isometry_helpers():
    l = del_pezzo(4)
    r = reflection(l, (0, 1, -1, 0, 0, 0))
    s = reflection(l, (0, 0, 1, -1, 0, 0))
    x = r @ s
    assert x.order() == 3
    assert (x @ x.inverse()).is_identity()
    assert x.power(3).is_identity()
    assert hash(x) == hash(Isometry(x.array.copy()))


def test_group_json(wa4):
    d = wa4.to_json(include_elements=True)
    assert d["order"] == 120 and len(d["elements"]) == 120 and d["lattice"] == "dp5"


def test_conic_bundle_group_generation():
    l = conic_bundle(2, 1)
    m = np.eye(4, dtype=np.int64)
    m[[2, 3]] = m[[3, 2]]
    g = weyl.generate(l, [Isometry(m)])
    assert g.order == 2
    for x in g.elements:
        assert weyl.is_isometry(l, x)
    assert pairing(l, l.s, l.s) == -1
