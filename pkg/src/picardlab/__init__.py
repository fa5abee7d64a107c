"""Exact lattice-side computations for finite group actions on del Pezzo
surfaces and conic bundles: Picard lattices, Weyl groups, traces and
cyclotomic profiles, first cohomology, and a registry of checkable claims.
"""

from .exactlin import (
    CycloFactorization,
    IntMatrix,
    IntPolynomial,
    SmithForm,
    char_poly,
    cyclo_factorize,
    cyclotomic,
    hermite_normal_form,
    kernel_basis,
    smith_normal_form,
    solve_integer,
)
from .picard import (
    ConicBundleLattice,
    DelPezzoLattice,
    conic_bundle,
    del_pezzo,
    dynkin_type,
    exceptional_classes,
    pairing,
    roots,
    second_section,
)
from .weyl import GroupTooLarge, Isometry, MatrixGroup, generate, reflection, weyl_group
from .gaction import (
    analyze,
    cyclo_power,
    cyclo_profile,
    invariant_rank,
    orbits_on,
    predicted_euler,
    trace_on_Q,
)
from .cohomology import H1Result, h1, h1_cyclic, h1_trivial_all_subgroups
from .census import CensusEntry, ClaimResult, verify_all

__version__ = "0.1.0"
