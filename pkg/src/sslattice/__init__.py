"""Finite lattices, left-modular elements and supersolvability certificates."""

from .errors import (
    CoverFormatError,
    CycleDetected,
    LatticeError,
    NoBoundedStructure,
    NotACover,
    NotALattice,
    NotClosed,
    NotGraded,
    NotMaximal,
    PreconditionFailed,
    SizeGuard,
)
from .generators import (
    FamilySpec,
    direct_product,
    dual,
    enumerate_lattices,
    make_family,
)
from .io import export_dot, parse_cover_file, serialize_cover_file
from .kernels import BACKEND
from .lattice import (
    FiniteLattice,
    bounds,
    build_from_covers,
    from_leq,
    is_distributive,
    is_graded,
    maximal_chains,
    rank_function,
    sublattice_closure,
)
from .modularity import (
    PentagonWitness,
    fast_chain_modular,
    find_pentagon,
    is_chain_modular,
    is_left_modular,
    is_modular_pair,
    is_rank_modular,
    is_right_chain_modular,
    is_right_modular,
)
from .supersolvable import (
    certify_supersolvable,
    generated_sublattice_two_chains,
    is_chief_chain,
    synthetic_rank,
    verify_birkhoff_identities,
    verify_condition_equivalence,
)

__version__ = "0.1.0"
