"""Ultracontact algebras over finite Boolean algebras.

Elements are atom bitmasks, families are integers whose bit ``x`` marks the
element ``x``.  Everything is exact and deterministic; there is no randomness
anywhere in the package.
"""

from types import ModuleType as _ModuleType

from ._kernels import BACKEND
from .boolalg import Element, FiniteBooleanAlgebra, make_algebra
from .contact import (
    ContactRelation,
    Hypercontact,
    clique_failure,
    derive_contact,
    derive_hypercontact,
    full_contact,
    k4_violation_witness,
    largest_uc_for,
    overlap,
    smallest_uc_for,
)
from .errors import (
    AlgebraError,
    AxiomViolation,
    CapError,
    NonAtomError,
    NotAGrillError,
    PreconditionError,
    UclabError,
)
from .families import (
    Family,
    Stack,
    classify,
    enumerate_grills,
    enumerate_stacks,
    family,
    grill_partial_meet,
    minkowski_sum,
    principal_stack,
    similar,
    supports,
    up_closure,
)
from .serialize import FormatError, dump, dumps, load, load_file, save_file
from .simplicial import SimplicialComplex, enumerate_complexes, enumerate_ucs, sigma, sigma_inverse
from .stacksys import StackSystem, bruteforce_stack_systems, check_ss, ks_of, sk_of, smax, smin
from .topology import FiniteTopSpace, RegularClosedAlgebra, intersection_uc, make_space, rc_algebra
from .uca import (
    FamilySystem,
    Ultracontact,
    chain_meet,
    extend_by_atoms,
    extend_by_grills,
    extend_by_set,
    kmax,
    kmin,
    meet_oracle,
    uc_from_explicit,
    uc_join,
    uc_meet,
    uc_membership,
    witness_meet_failure,
)

__version__ = "0.1.0"

__all__ = sorted(
    name for name, value in globals().items() if not name.startswith("_") and not isinstance(value, _ModuleType)
)
