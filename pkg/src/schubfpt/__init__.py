"""F-pure threshold and a-invariant of Schubert cycles from the tuple gamma,
with brute-force lattice, chain and poset oracles."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BottomTupleError,
    BudgetExceededError,
    DegenerateLatticeError,
    DegenerateTopTupleError,
    InvalidTupleError,
)
from .tuples import (  # noqa: E402
    BlockGapDecomposition,
    GammaTuple,
    KappaProfile,
    decompose,
    fpt,
    is_gorenstein,
    kappa_profile,
    m_value,
    neg_a_invariant,
    nu_e_predicted,
    twist,
    upper_neighbors,
)
from .lattice import SchubertLattice, principal_chain, principal_chain_direct  # noqa: E402
from .chains import algorithm2_step, decrement_chain, tau  # noqa: E402

__all__ = [
    "BlockGapDecomposition",
    "BottomTupleError",
    "BudgetExceededError",
    "DegenerateLatticeError",
    "DegenerateTopTupleError",
    "GammaTuple",
    "InvalidTupleError",
    "KappaProfile",
    "SchubertLattice",
    "algorithm2_step",
    "decompose",
    "decrement_chain",
    "fpt",
    "is_gorenstein",
    "kappa_profile",
    "m_value",
    "neg_a_invariant",
    "nu_e_predicted",
    "principal_chain",
    "principal_chain_direct",
    "tau",
    "twist",
    "upper_neighbors",
]
