"""Finite groups of lattice isometries.

Group elements are integer matrices acting on column vectors of lattice
coordinates.  An enumerated :class:`MatrixGroup` keeps its elements as one
``(N, r, r)`` int64 array sorted lexicographically by flattened entries, so
element indices are canonical and reproducible.
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .exactlin import IntMatrix, IntegerOverflow
from .picard import DelPezzoLattice, Lattice, LatticeVector, pairing, simple_roots

log = logging.getLogger(__name__)

DEFAULT_CAP = 200_000
SUBGROUP_LIMIT = 2000
_ENTRY_BOUND = 2**15 - 1


class GroupTooLarge(RuntimeError):
    """Enumeration or subgroup search exceeded its configured bound."""


class NotEnumerated(RuntimeError):
    """Operation needs the full element list."""


class InvalidIsometry(ValueError):
    pass


class Isometry:
    """An integer matrix preserving the form and the canonical class."""

    __slots__ = ("array", "_key")

    def __init__(self, matrix):
        if isinstance(matrix, IntMatrix):
            arr = matrix.to_numpy()
        else:
            arr = np.array(matrix, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("isometry matrix must be square")
        arr.setflags(write=False)
        self.array = arr
        self._key = None

    @property
    def matrix(self) -> IntMatrix:
        return IntMatrix(self.array)

    @property
    def rank(self) -> int:
        return self.array.shape[0]

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = _keys(self.array[None])[0]
        return self._key

    def __matmul__(self, other: Isometry) -> Isometry:
        return Isometry(_checked_matmul(self.array, other.array))

    def __eq__(self, other) -> bool:
        return isinstance(other, Isometry) and np.array_equal(self.array, other.array)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Isometry({self.array.tolist()})"

    def apply(self, v: Sequence[int]) -> LatticeVector:
        return tuple(int(x) for x in self.array @ np.asarray(v, dtype=np.int64))

    def trace(self) -> int:
        return int(np.trace(self.array))

    def is_identity(self) -> bool:
        return np.array_equal(self.array, np.eye(self.rank, dtype=np.int64))

    def power(self, k: int) -> Isometry:
        out = np.eye(self.rank, dtype=np.int64)
        base = self.array
        while k:
            if k & 1:
                out = _checked_matmul(out, base)
            base = _checked_matmul(base, base)
            k >>= 1
        return Isometry(out)

    def order(self, limit: int = 10_000) -> int:
        ident = np.eye(self.rank, dtype=np.int64)
        p = self.array
        for k in range(1, limit + 1):
            if np.array_equal(p, ident):
                return k
            p = _checked_matmul(p, self.array)
        raise ValueError("element has no finite order below the limit")

    def inverse(self) -> Isometry:
        return self.power(self.order() - 1)

    @classmethod
    def identity(cls, n: int) -> Isometry:
        return cls(np.eye(n, dtype=np.int64))


def _checked_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    ma = int(np.abs(a).max(initial=0))
    mb = int(np.abs(b).max(initial=0))
    if n * ma * mb >= 2**62:
        raise IntegerOverflow("matrix product would leave the 64-bit range")
    return a @ b


def _keys(stack: np.ndarray) -> list[bytes]:
    if np.abs(stack).max(initial=0) > _ENTRY_BOUND:
        raise IntegerOverflow("isometry entries too large for canonical keys")
    flat = np.ascontiguousarray(stack.reshape(stack.shape[0], -1).astype(np.int16))
    return flat.view(np.dtype((np.void, flat.shape[1] * 2))).ravel().tolist()


def is_isometry(lattice: Lattice, m) -> bool:
    a = m.array if isinstance(m, Isometry) else np.asarray(m, dtype=np.int64)
    g = lattice.gram.to_numpy()
    k = np.asarray(lattice.canonical, dtype=np.int64)
    return a.shape == g.shape and np.array_equal(a.T @ g @ a, g) and np.array_equal(a @ k, k)


def reflection(l: Lattice, alpha: Sequence[int]) -> Isometry:
    """x -> x + (x.alpha) alpha for a root alpha (alpha^2 = -2, alpha.K = 0)."""
    alpha = tuple(alpha)
    if pairing(l, alpha, alpha) != -2 or pairing(l, alpha, l.canonical) != 0:
        raise InvalidIsometry(f"{alpha} is not a root")
    a = np.asarray(alpha, dtype=np.int64)
    ga = l.gram.to_numpy() @ a
    return Isometry(np.eye(l.rank, dtype=np.int64) + np.outer(a, ga))


class MatrixGroup:
    """A finite group of isometries of ``lattice``.

    ``elements`` is either None (not enumerated) or the canonical sorted stack.
    Subgroups built from an enumerated parent remember their parent indices.
    """

    def __init__(
        self,
        lattice: Lattice,
        generators: Sequence[Isometry],
        elements: np.ndarray | None = None,
        order: int | None = None,
        parent: MatrixGroup | None = None,
        parent_indices: Sequence[int] | None = None,
    ):
        self.lattice = lattice
        self.generators = list(generators)
        if elements is not None:
            elements = np.asarray(elements, dtype=np.int64)
            elements.setflags(write=False)
        self._elements = elements
        self._order = order if order is not None else (None if elements is None else len(elements))
        self.parent = parent
        self.parent_indices = None if parent_indices is None else tuple(parent_indices)

    def __repr__(self) -> str:
        return f"MatrixGroup({self.lattice.lattice_id}, order={self._order})"

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = group_order_orbit_stabilizer(self.lattice, self.generators)
        return self._order

    def __len__(self) -> int:
        return self.order

    @property
    def is_enumerated(self) -> bool:
        return self._elements is not None

    @property
    def array(self) -> np.ndarray:
        if self._elements is None:
            raise NotEnumerated("group elements have not been enumerated")
        return self._elements

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def element(self, i: int) -> Isometry:
        return Isometry(self.array[i])

    @property
    def elements(self) -> list[Isometry]:
        return [Isometry(a) for a in self.array]

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def _index(self) -> dict[bytes, int]:
        return {k: i for i, k in enumerate(_keys(self.array))}

    def index(self, x: Isometry | np.ndarray) -> int:
        key = x.key if isinstance(x, Isometry) else _keys(np.asarray(x)[None])[0]
        return self._index[key]

    def indices(self, stack: np.ndarray) -> list[int]:
        idx = self._index
        return [idx[k] for k in _keys(stack)]

    def __contains__(self, x: Isometry) -> bool:
        return x.key in self._index

    @cached_property
    def identity_index(self) -> int:
        return self.index(np.eye(self.rank, dtype=np.int64))

    @cached_property
    def mult_table(self) -> np.ndarray:
        """table[i, j] = index of element_i @ element_j."""
        n = self.order
        if n > SUBGROUP_LIMIT:
            raise GroupTooLarge(f"multiplication table for order {n} > {SUBGROUP_LIMIT}")
        E = self.array
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            table[i] = self.indices(_checked_matmul(E[i], E))
        return table

    @cached_property
    def inverse_indices(self) -> np.ndarray:
        t = self.mult_table
        e = self.identity_index
        return np.argmax(t == e, axis=1).astype(np.int32)

    @cached_property
    def traces(self) -> np.ndarray:
        return np.trace(self.array, axis1=1, axis2=2)

    def subgroup(self, indices: Iterable[int], generators: Sequence[int] | None = None) -> MatrixGroup:
        idx = sorted(set(int(i) for i in indices))
        gens = [self.element(i) for i in (generators if generators is not None else idx)]
        return MatrixGroup(self.lattice, gens, self.array[idx], parent=self, parent_indices=idx)

    def to_json(self, include_elements: bool = False) -> dict:
        d = {
            "lattice": self.lattice.lattice_id,
            "generators": [g.array.tolist() for g in self.generators],
            "order": self.order,
        }
        if include_elements:
            d["elements"] = self.array.tolist()
        return d


def generate(lattice: Lattice, gens: Sequence[Isometry], cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Breadth-first closure of the generators; raises GroupTooLarge past ``cap``."""
    gens = [g if isinstance(g, Isometry) else Isometry(g) for g in gens]
    for g in gens:
        if not is_isometry(lattice, g):
            raise InvalidIsometry(f"generator does not preserve the form and K: {g}")
    r = lattice.rank
    ident = np.eye(r, dtype=np.int64)
    seen = set(_keys(ident[None]))
    chunks = [ident[None]]
    frontier = ident[None]
    garr = [g.array for g in gens]
    while len(frontier):
        fresh = []
        for g in garr:
            prods = _checked_matmul(frontier, g)
            for k, key in enumerate(_keys(prods)):
                if key not in seen:
                    seen.add(key)
                    fresh.append(prods[k])
            if len(seen) > cap:
                raise GroupTooLarge(f"group closure exceeded cap {cap}")
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, r, r)
        chunks.append(frontier)
    elems = np.concatenate(chunks)
    flat = elems.reshape(len(elems), -1)
    order = np.lexsort(flat.T[::-1])
    return MatrixGroup(lattice, gens, elems[order])


# --------------------------------------------------------------------------
# order without enumeration: Schreier-Sims over a finite invariant point set


def _pmul(a: tuple, b: tuple) -> tuple:
    """Apply b, then a."""
    return tuple(a[i] for i in b)


def _pinv(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def stabilizer_chain(gens: Sequence[tuple], n: int) -> tuple[list[int], list[int]]:
    """Deterministic Schreier-Sims; returns (base, basic orbit sizes)."""
    ident = tuple(range(n))
    gens = [g for g in gens if g != ident]
    base: list[int] = []

    def moved(g):
        return next(i for i in range(n) if g[i] != i)

    for g in gens:
        if all(g[b] == b for b in base):
            base.append(moved(g))
    strong = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))]
    trans: list[dict] = [{} for _ in base]

    def rebuild(i):
        b = base[i]
        t = {b: ident}
        queue = [b]
        for p in queue:
            for s in strong[i]:
                q = s[p]
                if q not in t:
                    t[q] = _pmul(s, t[p])
                    queue.append(q)
        trans[i] = t

    def strip(g, start):
        for i in range(start, len(base)):
            p = g[base[i]]
            if p not in trans[i]:
                return g, i
            g = _pmul(_pinv(trans[i][p]), g)
        return g, len(base)

    for i in range(len(base)):
        rebuild(i)
    i = len(base) - 1
    while i >= 0:
        restart = False
        for beta, u_beta in list(trans[i].items()):
            for s in strong[i]:
                sch = _pmul(_pinv(trans[i][s[beta]]), _pmul(s, u_beta))
                if sch == ident:
                    continue
                h, j = strip(sch, i + 1)
                if j < len(base) or h != ident:
                    if j == len(base):
                        base.append(moved(h))
                        strong.append([])
                        trans.append({})
                    for l in range(i + 1, j + 1):
                        strong[l].append(h)
                        rebuild(l)
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return base, [len(t) for t in trans]


def invariant_points(lattice: Lattice, gens: Sequence[Isometry]) -> list[LatticeVector]:
    """A finite generator-stable point set on which the group acts faithfully.

    Del Pezzo lattices use roots followed by exceptional classes; otherwise the
    orbit closure of the standard basis.
    """
    if isinstance(lattice, DelPezzoLattice):
        seeds = list(lattice.root_system.roots) + list(lattice.exceptional.classes)
    else:
        seeds = [lattice.basis_vector(i) for i in range(lattice.rank)]
    points = list(dict.fromkeys(seeds))
    index = {p: i for i, p in enumerate(points)}
    queue = list(points)
    for p in queue:
        for g in gens:
            q = g.apply(p)
            if q not in index:
                index[q] = len(points)
                points.append(q)
                queue.append(q)
    return points


def permutation_action(points: Sequence[LatticeVector], gens: Sequence[Isometry]) -> list[tuple]:
    index = {p: i for i, p in enumerate(points)}
    P = np.asarray(points, dtype=np.int64).T
    out = []
    for g in gens:
        imgs = (g.array @ P).T
        out.append(tuple(index[tuple(int(x) for x in v)] for v in imgs))
    return out


def group_order_orbit_stabilizer(lattice: Lattice, gens: Sequence[Isometry]) -> int:
    gens = [g if isinstance(g, Isometry) else Isometry(g) for g in gens]
    if not gens:
        return 1
    points = invariant_points(lattice, gens)
    perms = permutation_action(points, gens)
    _, orbits = stabilizer_chain(perms, len(points))
    n = 1
    for o in orbits:
        n *= o
    return n


# --------------------------------------------------------------------------
# Weyl groups


def weyl_generators(l: DelPezzoLattice, simple: bool = True) -> list[Isometry]:
    rs = simple_roots(l) if simple else list(l.root_system.roots)
    return [reflection(l, a) for a in rs]


def weyl_group(l: DelPezzoLattice, cap: int = DEFAULT_CAP, simple: bool = True) -> MatrixGroup:
    return generate(l, weyl_generators(l, simple), cap)


# --------------------------------------------------------------------------
# element-level queries


def element_orders(g: MatrixGroup) -> Counter:
    """Multiset of element orders as a Counter {order: count}."""
    E = g.array
    n = len(E)
    r = g.rank
    ident = np.eye(r, dtype=np.int64)
    orders = np.zeros(n, dtype=np.int64)
    P = E.copy()
    k = 1
    while True:
        done = (P == ident).all(axis=(1, 2)) & (orders == 0)
        orders[done] = k
        if (orders > 0).all():
            break
        k += 1
        if k > 10_000:
            raise ValueError("element of infinite order")
        P = _checked_matmul(P, E)
    return Counter(orders.tolist())


def element_order_array(g: MatrixGroup) -> np.ndarray:
    E = g.array
    ident = np.eye(g.rank, dtype=np.int64)
    orders = np.zeros(len(E), dtype=np.int64)
    P = E.copy()
    k = 1
    while not (orders > 0).all():
        orders[(P == ident).all(axis=(1, 2)) & (orders == 0)] = k
        k += 1
        P = _checked_matmul(P, E)
    return orders


# --------------------------------------------------------------------------
# subgroup machinery on enumerated groups


def _bits(indices: Iterable[int]) -> int:
    b = 0
    for i in indices:
        b |= 1 << int(i)
    return b


def _members(bits: int) -> list[int]:
    out, i = [], 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def _closure_bits(table: np.ndarray, identity: int, gens: Sequence[int], start: Sequence[int] = ()) -> list[int]:
    """Elements of the subgroup generated by ``gens`` (and ``start``)."""
    members = {identity, *start}
    queue = list(members)
    for x in queue:
        row = table[x]
        for s in gens:
            y = int(row[s])
            if y not in members:
                members.add(y)
                queue.append(y)
    return sorted(members)


def subgroups_up_to(g: MatrixGroup, max_order: int) -> list[MatrixGroup]:
    """All subgroups of order <= max_order, each once, sorted by (order, elements)."""
    if g.order > SUBGROUP_LIMIT:
        raise GroupTooLarge(f"subgroup search needs order <= {SUBGROUP_LIMIT}")
    table = g.mult_table
    e = g.identity_index
    n = g.order
    cyclic: dict[int, tuple[list[int], int]] = {}
    for x in range(n):
        mem = _closure_bits(table, e, [x])
        b = _bits(mem)
        if b not in cyclic:
            cyclic[b] = (mem, x)
    found: dict[int, tuple[list[int], list[int]]] = {}
    for b, (mem, x) in cyclic.items():
        if len(mem) <= max_order:
            found[b] = (mem, [] if x == e else [x])
    cyc_reps = [(b, x) for b, (mem, x) in cyclic.items() if x != e]
    frontier = list(found)
    while frontier:
        fresh = []
        for hb in frontier:
            mem, gens = found[hb]
            if 2 * len(mem) > max_order:
                continue
            for cb, x in cyc_reps:
                if cb & ~hb == 0:
                    continue
                new = _closure_bits(table, e, gens + [x], mem)
                if len(new) > max_order:
                    continue
                nb = _bits(new)
                if nb not in found:
                    found[nb] = (new, gens + [x])
                    fresh.append(nb)
        frontier = fresh
    groups = sorted(found.values(), key=lambda t: (len(t[0]), t[0]))
    return [g.subgroup(mem, gens) for mem, gens in groups]


def all_subgroups(g: MatrixGroup) -> list[MatrixGroup]:
    return subgroups_up_to(g, g.order)


def centralizer(g: MatrixGroup, x: Isometry) -> MatrixGroup:
    E = g.array
    a = x.array
    mask = (_checked_matmul(E, a) == _checked_matmul(a, E)).all(axis=(1, 2))
    return g.subgroup(np.nonzero(mask)[0])


def conjugation_permutations(g: MatrixGroup) -> list[np.ndarray]:
    """For each generator s, the index map i -> index(s e_i s^-1)."""
    E = g.array
    out = []
    for s in g.generators:
        sinv = s.inverse().array
        out.append(np.asarray(g.indices(_checked_matmul(_checked_matmul(s.array, E), sinv)), dtype=np.int64))
    return out


def conjugacy_classes(g: MatrixGroup) -> list[list[int]]:
    """Classes as sorted index lists, ordered by smallest member."""
    perms = conjugation_permutations(g)
    n = g.order
    label = np.full(n, -1, dtype=np.int64)
    classes = []
    for start in range(n):
        if label[start] >= 0:
            continue
        cls = [start]
        label[start] = len(classes)
        for x in cls:
            for p in perms:
                y = int(p[x])
                if label[y] < 0:
                    label[y] = len(classes)
                    cls.append(y)
        classes.append(sorted(cls))
    return classes


def conjugacy_test(g: MatrixGroup, h1: Isometry, h2: Isometry) -> bool:
    i, j = g.index(h1), g.index(h2)
    perms = conjugation_permutations(g)
    seen = {i}
    queue = [i]
    for x in queue:
        if x == j:
            return True
        for p in perms:
            y = int(p[x])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return j in seen


def _is_closed(g: MatrixGroup, idx: Sequence[int]) -> bool:
    E = g.array[list(idx)]
    members = set(idx)
    for a in E:
        if not set(g.indices(_checked_matmul(a, E))) <= members:
            return False
    return True


def normal_subgroups(g: MatrixGroup, order: int) -> list[MatrixGroup]:
    """Normal subgroups of the given order, found as unions of conjugacy classes."""
    classes = conjugacy_classes(g)
    e = g.identity_index
    id_cls = next(c for c in classes if c == [e])
    others = [c for c in classes if c != id_cls]
    out = []

    def search(k, chosen, total):
        if total == order:
            idx = sorted(i for c in chosen for i in c)
            if _is_closed(g, idx):
                out.append(idx)
            return
        for j in range(k, len(others)):
            c = others[j]
            if total + len(c) <= order:
                search(j + 1, chosen + [c], total + len(c))

    if g.order % order == 0:
        search(0, [id_cls], 1)
    return [g.subgroup(idx) for idx in sorted(out)]


def subgroup_conjugacy_classes(g: MatrixGroup, subgroups: Sequence[MatrixGroup]) -> list[list[int]]:
    """Partition subgroups (of enumerated ``g``) into conjugacy classes under g.

    Returns lists of positions into ``subgroups``; classes are closed within
    the full conjugacy orbit even if it contains subgroups not listed.
    """
    perms = conjugation_permutations(g)
    key_of = {frozenset(h.parent_indices): k for k, h in enumerate(subgroups)}
    label = {}
    classes = []
    for k, h in enumerate(subgroups):
        start = frozenset(h.parent_indices)
        if start in label:
            continue
        orbit = [start]
        label[start] = len(classes)
        for s in orbit:
            for p in perms:
                t = frozenset(int(p[i]) for i in s)
                if t not in label:
                    label[t] = len(classes)
                    orbit.append(t)
        classes.append(sorted(key_of[s] for s in orbit if s in key_of))
    return classes
