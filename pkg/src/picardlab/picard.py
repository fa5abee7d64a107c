"""Picard lattices of del Pezzo surfaces and conic bundles.

A del Pezzo lattice of degree d uses the blow-up basis (h, e_1, ..., e_r),
r = 9 - d, with form diag(1, -1, ..., -1).  A conic-bundle lattice uses the
basis (f, s, e_1, ..., e_m) of a Hirzebruch surface blown up in m points
lying on distinct fibers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt
from typing import Iterator, Sequence

from .exactlin import IntMatrix

LatticeVector = tuple[int, ...]

ROOT_TYPES = {7: "A1", 6: "A1xA2", 5: "A4", 4: "D5", 3: "E6", 2: "E7", 1: "E8"}


class Lattice:
    """Shared behaviour: a gram matrix plus a canonical class."""

    gram: IntMatrix
    canonical: LatticeVector

    @property
    def rank(self) -> int:
        return self.gram.rows

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        return pairing(self, x, y)

    def basis_vector(self, i: int) -> LatticeVector:
        return tuple(int(j == i) for j in range(self.rank))

    @property
    def lattice_id(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class DelPezzoLattice(Lattice):
    degree: int
    gram: IntMatrix = field(init=False, repr=False)
    canonical: LatticeVector = field(init=False, repr=False)

    def __post_init__(self):
        r = 9 - self.degree
        object.__setattr__(self, "gram", IntMatrix.diag([1] + [-1] * r))
        object.__setattr__(self, "canonical", (-3,) + (1,) * r)

    def __eq__(self, other):
        return isinstance(other, DelPezzoLattice) and other.degree == self.degree

    def __hash__(self):
        return hash(("dP", self.degree))

    @property
    def lattice_id(self) -> str:
        return f"dp{self.degree}"

    @property
    def h(self) -> LatticeVector:
        return self.basis_vector(0)

    def e(self, i: int) -> LatticeVector:
        """Exceptional curve e_i, 1-based."""
        return self.basis_vector(i)

    @cached_property
    def root_system(self) -> RootSystem:
        return roots(self)

    @cached_property
    def exceptional(self) -> ExceptionalSet:
        return exceptional_classes(self)

    def to_json(self) -> dict:
        return {
            "kind": "del_pezzo",
            "degree": self.degree,
            "rank": self.rank,
            "gram": self.gram.tolist(),
            "canonical": list(self.canonical),
        }


@dataclass(frozen=True, eq=False)
class ConicBundleLattice(Lattice):
    fiber_count: int
    section_param: int
    gram: IntMatrix = field(init=False, repr=False)
    canonical: LatticeVector = field(init=False, repr=False)

    def __post_init__(self):
        m, e = self.fiber_count, self.section_param
        n = m + 2
        g = [[0] * n for _ in range(n)]
        g[0][1] = g[1][0] = 1
        g[1][1] = -e
        for i in range(2, n):
            g[i][i] = -1
        object.__setattr__(self, "gram", IntMatrix(g))
        object.__setattr__(self, "canonical", (-(2 + e), -2) + (1,) * m)

    def __eq__(self, other):
        return (
            isinstance(other, ConicBundleLattice)
            and (other.fiber_count, other.section_param) == (self.fiber_count, self.section_param)
        )

    def __hash__(self):
        return hash(("cb", self.fiber_count, self.section_param))

    @property
    def lattice_id(self) -> str:
        return f"cb{self.fiber_count}e{self.section_param}"

    @property
    def f(self) -> LatticeVector:
        return self.basis_vector(0)

    @property
    def s(self) -> LatticeVector:
        return self.basis_vector(1)

    def e(self, i: int) -> LatticeVector:
        """Component e_i of the i-th degenerate fiber, 1-based."""
        return self.basis_vector(i + 1)

    def components(self, i: int) -> tuple[LatticeVector, LatticeVector]:
        """The two components (e_i, f - e_i) of degenerate fiber i."""
        ei = self.e(i)
        return ei, tuple(a - b for a, b in zip(self.f, ei))

    def to_json(self) -> dict:
        return {
            "kind": "conic_bundle",
            "m": self.fiber_count,
            "e": self.section_param,
            "rank": self.rank,
            "gram": self.gram.tolist(),
            "canonical": list(self.canonical),
        }


def pairing(lattice: Lattice, x: Sequence[int], y: Sequence[int]) -> int:
    n = lattice.rank
    if len(x) != n or len(y) != n:
        raise ValueError(f"vectors must have length {n}")
    g = lattice.gram
    return sum(x[i] * g[i, j] * y[j] for i in range(n) for j in range(n) if g[i, j])


def del_pezzo(degree: int) -> DelPezzoLattice:
    if not 1 <= degree <= 7:
        raise ValueError(f"degree must lie in [1, 7], got {degree}")
    return DelPezzoLattice(degree)


def conic_bundle(m: int, e: int) -> ConicBundleLattice:
    if m < 0 or e < 0:
        raise ValueError("fiber count and section parameter must be nonnegative")
    return ConicBundleLattice(m, e)


def second_section(l: ConicBundleLattice) -> LatticeVector:
    """The section s + e*f - sum(e_i) disjoint from s; needs m == 2e."""
    m, e = l.fiber_count, l.section_param
    if m != 2 * e:
        raise ValueError(f"second section needs m = 2e, got m={m}, e={e}")
    return (e, 1) + (-1,) * m


# --------------------------------------------------------------------------
# enumeration of classes with prescribed square and canonical degree


def _tail_vectors(k: int, total: int, squares: int) -> Iterator[tuple[int, ...]]:
    """Integer k-vectors with given coordinate sum and sum of squares."""
    if k == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    if squares < 0 or total * total > k * squares or (squares - total) % 2:
        return
    b = isqrt(squares)
    for x in range(-b, b + 1):
        for rest in _tail_vectors(k - 1, total - x, squares - x * x):
            yield (x,) + rest


def enumerate_classes(lattice: DelPezzoLattice, square: int, kdot: int) -> list[LatticeVector]:
    """All x with x.x = square and x.K = kdot, sorted lexicographically.

    Writing x = a*h + sum x_i e_i, the conditions are sum x_i = -3a - kdot and
    sum x_i^2 = a^2 - square.  Cauchy-Schwarz on the tail gives
    (3a + kdot)^2 <= r (a^2 - square), a convex condition in a, so the admissible
    a form an interval that is scanned outward from its vertex.
    """
    r = 9 - lattice.degree

    def excess(a):
        return (3 * a + kdot) ** 2 - r * (a * a - square)

    # excess is convex in a; walk outward from the vertex until it turns positive
    vertex = (-3 * kdot) // (9 - r)
    candidates = []
    a = vertex + 1
    while excess(a) <= 0:
        candidates.append(a)
        a += 1
    a = vertex
    while excess(a) <= 0:
        candidates.append(a)
        a -= 1
    candidates = [a for a in candidates if a * a >= square]
    out = []
    for a in sorted(candidates):
        for tail in _tail_vectors(r, -3 * a - kdot, a * a - square):
            out.append((a,) + tail)
    out.sort()
    return out


@dataclass(frozen=True)
class RootSystem:
    roots: tuple[LatticeVector, ...]
    type_label: str

    def __len__(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class ExceptionalSet:
    classes: tuple[LatticeVector, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def index(self, x: Sequence[int]) -> int:
        return self.classes.index(tuple(x))


def roots(l: DelPezzoLattice) -> RootSystem:
    return RootSystem(tuple(enumerate_classes(l, -2, 0)), ROOT_TYPES[l.degree])


def exceptional_classes(l: DelPezzoLattice) -> ExceptionalSet:
    return ExceptionalSet(tuple(enumerate_classes(l, -1, -1)))


def simple_roots(l: DelPezzoLattice, rs: RootSystem | None = None) -> list[LatticeVector]:
    """A base of the root system for a generic linear functional."""
    rs = rs or l.root_system
    weights = [1000003] + [-(10 ** (k + 1)) - k for k in range(l.rank - 1)]
    height = {x: sum(w * c for w, c in zip(weights, x)) for x in rs.roots}
    if any(v == 0 for v in height.values()):
        raise RuntimeError("functional is not regular on the roots")
    positive = [x for x in rs.roots if height[x] > 0]
    pos_set = set(positive)
    decomposable = set()
    for a in positive:
        for b in positive:
            c = tuple(p + q for p, q in zip(a, b))
            if c in pos_set:
                decomposable.add(c)
    return sorted(x for x in positive if x not in decomposable)


def dynkin_type(l: DelPezzoLattice, rs: RootSystem | None = None) -> str:
    """Identify the simply-laced type from the Dynkin graph of a base."""
    base = simple_roots(l, rs)
    n = len(base)
    adj = {i: [j for j in range(n) if j != i and pairing(l, base[i], base[j])] for i in range(n)}
    seen, comps = set(), []
    for i in range(n):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(comp)
    labels = []
    for comp in comps:
        k = len(comp)
        branch = [v for v in comp if len(adj[v]) == 3]
        if not branch:
            labels.append((0, k, f"A{k}"))
            continue
        (c,) = branch
        legs = []
        for start in adj[c]:
            length, prev, cur = 1, c, start
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            legs.append(length)
        legs.sort()
        if legs[:2] == [1, 1]:
            labels.append((1, k, f"D{k}"))
        elif legs[:2] == [1, 2] and legs[2] in (2, 3, 4):
            labels.append((2, k, f"E{k}"))
        else:
            raise ValueError(f"not a simply-laced Dynkin diagram: legs {legs}")
    return "x".join(lab for _, _, lab in sorted(labels, key=lambda t: (t[1], t[0])))


def classes_to_json(l: Lattice, classes: Sequence[Sequence[int]]) -> dict:
    d = l.to_json()
    d["classes"] = [list(x) for x in classes]
    return d


def lattice_from_json(d: dict) -> Lattice:
    kind = d.get("kind")
    if kind == "del_pezzo":
        return del_pezzo(int(d["degree"]))
    if kind == "conic_bundle":
        return conic_bundle(int(d["m"]), int(d["e"]))
    raise ValueError(f"unknown lattice kind {kind!r}")


def lattice_from_id(lattice_id: str) -> Lattice:
    """Inverse of ``lattice_id``: 'dp4' or 'cb4e2'."""
    if lattice_id.startswith("dp"):
        return del_pezzo(int(lattice_id[2:]))
    if lattice_id.startswith("cb") and "e" in lattice_id[2:]:
        m, e = lattice_id[2:].split("e")
        return conic_bundle(int(m), int(e))
    raise ValueError(f"unknown lattice id {lattice_id!r}")
