"""First cohomology H^1(G, M) of a finite group acting on a lattice M = Z^r.

Two independent routes: the cyclic formula ker(N)/im(x - 1), and a general
cocycle computation.  A 1-cocycle is determined by its values on generators;
walking a spanning tree of the Cayley graph expresses f(g) for every g in
those values, and every remaining edge (g, s) contributes the equations
f(gs) = f(g) + g f(s).  Coboundaries are then written in coordinates of the
cocycle lattice and the quotient is read off a Smith normal form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import prod

import numpy as np

from .exactlin import IntMatrix, kernel_basis, smith_normal_form
from .picard import ConicBundleLattice, DelPezzoLattice, Lattice, LatticeVector
from .weyl import (
    Isometry,
    MatrixGroup,
    subgroup_conjugacy_classes,
    subgroups_up_to,
    SUBGROUP_LIMIT,
    GroupTooLarge,
)

log = logging.getLogger(__name__)

SIZE_BOUND = 5000


@dataclass(frozen=True)
class H1Result:
    invariant_factors: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors)}

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        parts = {}
        for d in self.invariant_factors:
            parts[d] = parts.get(d, 0) + 1
        return " + ".join(f"(Z/{d})^{k}" if k > 1 else f"Z/{d}" for d, k in parts.items())


def _row_coordinates(basis: list[list[int]], v: list[int]) -> list[int]:
    """Integer c with c @ basis == v, for a basis in row echelon form."""
    v = list(v)
    coords = []
    for row in basis:
        p = next(j for j, x in enumerate(row) if x)
        q, r = divmod(v[p], row[p])
        if r:
            raise ArithmeticError("vector is not in the integer row span")
        coords.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        raise ArithmeticError("vector is not in the integer row span")
    return coords


def _quotient(basis: IntMatrix, vectors: list[list[int]]) -> H1Result:
    """Finite quotient of the lattice spanned by ``basis`` by the span of ``vectors``."""
    t = basis.rows
    if t == 0:
        return H1Result()
    rows = basis.tolist()
    coords = [_row_coordinates(rows, v) for v in vectors]
    if not coords:
        raise ArithmeticError("quotient by the zero lattice is infinite")
    snf = smith_normal_form(IntMatrix(coords, cols=t))
    diag = [d for d in snf.invariants if d]
    if len(diag) != t:
        raise ArithmeticError("quotient has a free part; the group cannot be finite")
    return H1Result(tuple(d for d in diag if d != 1))


def _exact_order(x: Isometry, n: int) -> bool:
    if not x.power(n).is_identity():
        return False
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    return all(not x.power(n // p).is_identity() for p in primes)


def h1_cyclic(x: Isometry, n: int) -> H1Result:
    """H^1 of the cyclic group generated by x (exact order n): ker N / im(x - 1)."""
    if n < 1 or not _exact_order(x, n):
        raise ValueError(f"{n} is not the exact order of the isometry")
    r = x.rank
    a = x.array
    norm = np.zeros((r, r), dtype=np.int64)
    p = np.eye(r, dtype=np.int64)
    for _ in range(n):
        norm += p
        p = p @ a
    ker = kernel_basis(IntMatrix(norm))
    images = (a - np.eye(r, dtype=np.int64)).T.tolist()
    return _quotient(ker, images)


def _cocycle_basis(
    mats: np.ndarray, identity: int, right: list[np.ndarray], gen_mats: list[np.ndarray]
) -> IntMatrix:
    """Z^1 for an action given abstractly.

    ``mats[i]`` is the matrix of group element i, ``right[j][i]`` the index of
    (element i) * (generator j), and ``gen_mats[j]`` the generator matrices.
    Coordinates are the generator values (f(s_1), ..., f(s_k)).
    """
    n, r, _ = mats.shape
    k = len(gen_mats)
    nvar = k * r
    value: dict[int, np.ndarray] = {identity: np.zeros((r, nvar), dtype=np.int64)}
    queue = [identity]
    blocks = []
    for j in range(k):
        b = np.zeros((r, nvar), dtype=np.int64)
        b[:, j * r:(j + 1) * r] = np.eye(r, dtype=np.int64)
        blocks.append(b)
    equations = []
    for i in queue:
        for j in range(k):
            target = int(right[j][i])
            rhs = value[i] + mats[i] @ blocks[j]
            if target not in value:
                value[target] = rhs
                queue.append(target)
            else:
                equations.append(value[target] - rhs)
    if len(value) != n:
        raise RuntimeError("generators do not generate the group")
    if equations:
        eq = np.concatenate(equations)
        eq = np.unique(eq[np.any(eq != 0, axis=1)], axis=0)
    else:
        eq = np.zeros((0, nvar), dtype=np.int64)
    if len(eq) == 0:
        return IntMatrix.identity(nvar)
    return kernel_basis(IntMatrix(eq))


def h1_action(
    mats: np.ndarray, identity: int, right: list[np.ndarray], gen_mats: list[np.ndarray]
) -> H1Result:
    """H^1 of an abstract finite group acting through ``mats`` (not necessarily faithful)."""
    mats = np.asarray(mats, dtype=np.int64)
    n, r, _ = mats.shape
    if n * r > SIZE_BOUND:
        raise GroupTooLarge(f"|G| * rank = {n * r} exceeds the bound {SIZE_BOUND}")
    if not gen_mats:
        return H1Result()
    basis = _cocycle_basis(mats, identity, right, gen_mats)
    ident = np.eye(r, dtype=np.int64)
    # coboundary of the basis vector m = e_c: (s m - m) for each generator s
    d = np.concatenate([np.asarray(s, dtype=np.int64) - ident for s in gen_mats])
    return _quotient(basis, d.T.tolist())


def h1(g: MatrixGroup) -> H1Result:
    """H^1(G, Z^r) by the cocycle method."""
    gens = [s for s in g.generators if not s.is_identity()]
    if g.order * g.rank > SIZE_BOUND:
        raise GroupTooLarge(f"|G| * rank = {g.order * g.rank} exceeds the bound {SIZE_BOUND}")
    if not gens:
        return H1Result()
    E = g.array
    right = [np.asarray(g.indices(E @ s.array), dtype=np.int64) for s in gens]
    return h1_action(E, g.identity_index, right, [s.array for s in gens])


def h1_trivial_all_subgroups(g: MatrixGroup) -> tuple[bool, MatrixGroup | None]:
    """Whether H^1 vanishes on every subgroup; otherwise a smallest offending subgroup.

    One subgroup per conjugacy class is tested, since conjugate subgroups have
    isomorphic cohomology.
    """
    if g.order > SUBGROUP_LIMIT:
        raise GroupTooLarge(f"subgroup enumeration needs |G| <= {SUBGROUP_LIMIT}")
    subs = subgroups_up_to(g, g.order)
    for cls in subgroup_conjugacy_classes(g, subs):
        h = subs[cls[0]]
        if h.order == 1:
            continue
        res = h1(h)
        if not res.is_trivial:
            log.debug("H^1 nonzero on a subgroup of order %d: %s", h.order, res)
            return False, h
    return True, None


# --------------------------------------------------------------------------
# permutation modules


def _candidate_vectors(lattice: Lattice) -> list[LatticeVector]:
    out = [lattice.basis_vector(i) for i in range(lattice.rank)]
    if isinstance(lattice, DelPezzoLattice):
        out += list(lattice.exceptional.classes)
        out.append(tuple(-c for c in lattice.canonical))
    elif isinstance(lattice, ConicBundleLattice):
        for i in range(1, lattice.fiber_count + 1):
            out += list(lattice.components(i))
    return list(dict.fromkeys(out))


def permutation_basis(g: MatrixGroup, max_orbits: int = 12) -> list[LatticeVector] | None:
    """A Z-basis permuted by every generator, built from orbits of small classes.

    This is a sufficient search: it only tries unions of orbits of standard
    basis vectors, exceptional classes, fiber components and -K.
    """
    r = g.rank
    orbits = []
    seen = set()
    for v in _candidate_vectors(g.lattice):
        if v in seen:
            continue
        orb = [v]
        seen.add(v)
        for x in orb:
            for s in g.generators:
                y = s.apply(x)
                if y not in seen:
                    seen.add(y)
                    orb.append(y)
            if len(orb) > r:
                break
        if len(orb) <= r:
            orbits.append(sorted(orb))
    orbits = sorted({tuple(o) for o in orbits}, key=lambda o: (len(o), o))[: max_orbits * 4]

    def search(start, chosen, size):
        if size == r:
            vecs = [v for o in chosen for v in o]
            if abs(IntMatrix(vecs).det()) == 1:
                return vecs
            return None
        for i in range(start, len(orbits)):
            o = orbits[i]
            if size + len(o) <= r:
                found = search(i + 1, chosen + [o], size + len(o))
                if found:
                    return found
        return None

    return search(0, [], 0)


def is_permutation_module(g: MatrixGroup) -> bool:
    return permutation_basis(g) is not None
