"""Invariants of a finite group acting on a Picard lattice.

Traces are reported on the orthogonal complement Q of the canonical class.
Since K spans a rational eigenline with eigenvalue 1, the trace on Q is the
full trace minus one, so no basis of Q is ever built.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .exactlin import (
    CycloFactorization,
    IntMatrix,
    IntPolynomial,
    char_poly,
    char_poly_batch,
    cyclo_factorize,
    divisors,
    kernel_basis,
    totient,
)
from .picard import ConicBundleLattice, DelPezzoLattice, Lattice, LatticeVector
from .weyl import Isometry, MatrixGroup, element_order_array

SCHEMA = "1"


class ActionError(ValueError):
    pass


def _canonical_for(x: Isometry, lattice: Lattice | None) -> LatticeVector:
    if lattice is not None:
        return lattice.canonical
    # without a lattice, read the matrix as a del Pezzo isometry of its rank
    return (-3,) + (1,) * (x.rank - 1)


def _check_fixes_K(x: Isometry, lattice: Lattice | None) -> None:
    k = _canonical_for(x, lattice)
    if x.apply(k) != tuple(k):
        raise ActionError("isometry does not fix the canonical class")


def trace_on_Q(x: Isometry, lattice: Lattice | None = None) -> int:
    _check_fixes_K(x, lattice)
    return x.trace() - 1


def predicted_euler(x: Isometry, lattice: Lattice | None = None) -> int:
    """Lefschetz prediction for the Euler number of the fixed locus."""
    return trace_on_Q(x, lattice) + 3


def invariant_sublattice(g: MatrixGroup) -> IntMatrix:
    """Saturated basis (rows) of the vectors fixed by every generator."""
    r = g.rank
    ident = np.eye(r, dtype=np.int64)
    gens = [s.array for s in g.generators if not s.is_identity()]
    if not gens:
        return IntMatrix.identity(r)
    stack = np.concatenate([a - ident for a in gens])
    return kernel_basis(IntMatrix(stack))


def character_rank(g: MatrixGroup) -> int:
    """(1/|G|) * sum of full traces, the dimension of the invariant subspace."""
    total = int(g.traces.sum())
    n = g.order
    if total % n:
        raise ArithmeticError(f"character sum {total} is not divisible by |G| = {n}")
    return total // n


def invariant_rank(g: MatrixGroup) -> int:
    """Rank of the invariant lattice, by the character formula and by a kernel computation."""
    by_char = character_rank(g)
    by_kernel = invariant_sublattice(g).rows
    if by_char != by_kernel:
        raise ArithmeticError(f"invariant rank mismatch: character {by_char}, kernel {by_kernel}")
    return by_char


def orbits_on(g: MatrixGroup, classes) -> list[list[LatticeVector]]:
    """Orbits of the generated group on a finite set of classes, ordered by smallest member."""
    pool = sorted(tuple(c) for c in classes)
    members = set(pool)
    seen: set = set()
    orbits = []
    for c in pool:
        if c in seen:
            continue
        orbit = [c]
        seen.add(c)
        for x in orbit:
            for s in g.generators:
                y = s.apply(x)
                if y not in members:
                    raise ActionError(f"image {y} of {x} escapes the class set")
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        orbits.append(sorted(orbit))
    return orbits


def orbit_of(g: MatrixGroup, v) -> list[LatticeVector]:
    """Orbit of a single vector under the generated group, sorted."""
    orbit = [tuple(v)]
    seen = {orbit[0]}
    for x in orbit:
        for s in g.generators:
            y = s.apply(x)
            if y not in seen:
                seen.add(y)
                orbit.append(y)
    return sorted(orbit)


def orbit_sizes(g: MatrixGroup, classes) -> list[int]:
    return sorted(len(o) for o in orbits_on(g, classes))


DIVISIBILITY = {4: 4, 5: 5}


def minimality_divisibility_check(g: MatrixGroup, lattice: Lattice | None = None) -> bool | None:
    """For minimal actions on degree 4 (resp. 5) lattices every line orbit has size
    divisible by 4 (resp. 5).  Returns None when not applicable: other degrees,
    or invariant rank different from 1.
    """
    lattice = lattice or g.lattice
    if not isinstance(lattice, DelPezzoLattice) or lattice.degree not in DIVISIBILITY:
        return None
    if invariant_rank(g) != 1:
        return None
    q = DIVISIBILITY[lattice.degree]
    return all(n % q == 0 for n in orbit_sizes(g, lattice.exceptional))


# --------------------------------------------------------------------------
# cyclotomic structure

_T_MINUS_1 = IntPolynomial([-1, 1])


def _profile_from_full(full: IntPolynomial, order: int) -> CycloFactorization:
    q, rem = full.divmod_monic(_T_MINUS_1)
    if rem != 0:
        raise ActionError("characteristic polynomial lacks the eigenvalue 1 of K")
    f = cyclo_factorize(q, divisors(order))
    if f.remainder != 1:
        raise ArithmeticError(f"non-cyclotomic remainder {f.remainder} for an element of order {order}")
    return f


def char_poly_on_Q(x: Isometry, lattice: Lattice | None = None) -> IntPolynomial:
    _check_fixes_K(x, lattice)
    q, rem = char_poly(x.matrix).divmod_monic(_T_MINUS_1)
    assert rem == 0
    return q


def cyclo_profile(x: Isometry, lattice: Lattice | None = None) -> CycloFactorization:
    """Characteristic polynomial on Q factored over Phi_d, d | ord(x)."""
    _check_fixes_K(x, lattice)
    return _profile_from_full(char_poly(x.matrix), x.order())


def cyclo_profiles(g: MatrixGroup) -> list[CycloFactorization]:
    """Profiles of every element of an enumerated group, in element order."""
    coeffs = char_poly_batch(g.array)
    orders = element_order_array(g)
    cache: dict = {}
    out = []
    for row, o in zip(coeffs.tolist(), orders.tolist()):
        key = (tuple(row), o)
        if key not in cache:
            cache[key] = _profile_from_full(IntPolynomial(row), o)
        out.append(cache[key])
    return out


def cyclo_power(f: CycloFactorization, k: int) -> CycloFactorization:
    """Profile of x^k from the profile of x.

    A primitive d-th root of unity raised to the k-th power is a primitive
    d/gcd(d,k)-th root; the phi(d) roots of Phi_d land evenly on the
    phi(d/gcd) roots of the smaller cyclotomic factor.
    """
    if k < 1:
        raise ValueError("power must be positive")
    if f.remainder != 1:
        raise ValueError("cyclo_power needs a complete cyclotomic factorization")
    mult: dict[int, int] = {}
    for d, m in f.factors:
        e = d // gcd(d, k)
        mult[e] = mult.get(e, 0) + m * totient(d) // totient(e)
    return CycloFactorization.from_dict(mult)


def profile_to_json(f: CycloFactorization) -> dict:
    return {str(d): m for d, m in f.factors}


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ElementReport:
    index: int
    order: int
    trace_on_Q: int
    predicted_euler: int
    profile: CycloFactorization


@dataclass
class ActionReport:
    group: MatrixGroup
    per_element: list[ElementReport]
    invariant_rank: int
    orbit_sizes: list[int] = field(default_factory=list)

    def trace_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.per_element:
            out[e.trace_on_Q] = out.get(e.trace_on_Q, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "lattice": self.group.lattice.lattice_id,
            "order": self.group.order,
            "invariant_rank": self.invariant_rank,
            "orbit_sizes": self.orbit_sizes,
            "elements": [
                {
                    "index": e.index,
                    "order": e.order,
                    "trace_on_Q": e.trace_on_Q,
                    "predicted_euler": e.predicted_euler,
                    "profile": str(e.profile),
                }
                for e in self.per_element
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "order", "trace_on_Q", "predicted_euler", "profile"])
        for e in self.per_element:
            w.writerow([e.index, e.order, e.trace_on_Q, e.predicted_euler, str(e.profile)])
        return buf.getvalue()


def action_classes(lattice: Lattice) -> list[LatticeVector]:
    """The finite class set whose orbits are reported: lines, or fiber components."""
    if isinstance(lattice, DelPezzoLattice):
        return list(lattice.exceptional.classes)
    if isinstance(lattice, ConicBundleLattice):
        out = []
        for i in range(1, lattice.fiber_count + 1):
            out.extend(lattice.components(i))
        return out
    return []


def analyze(g: MatrixGroup) -> ActionReport:
    lat = g.lattice
    profiles = cyclo_profiles(g)
    orders = element_order_array(g)
    per = []
    k = np.asarray(lat.canonical, dtype=np.int64)
    if not (g.array @ k == k).all():
        raise ActionError("group does not fix the canonical class")
    for i, (tr, o, prof) in enumerate(zip(g.traces.tolist(), orders.tolist(), profiles)):
        per.append(ElementReport(i, o, tr - 1, tr + 2, prof))
    classes = action_classes(lat)
    sizes = orbit_sizes(g, classes) if classes else []
    return ActionReport(g, per, invariant_rank(g), sizes)
