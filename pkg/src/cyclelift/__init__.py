"""cyclelift: exact symbolic calculus for deforming algebraic cycles.

Koszul classes of deformed regular sequences, their Chern-character
representatives as generalized fractions, the boundary map toward the
origin, cycle-membership tests and the obstruction-elimination pipeline,
all over exact rational arithmetic.
"""

from .errors import (
    CycleLiftError,
    InvalidFractionError,
    MissingKeyError,
    NonUnitError,
    NotApplicableError,
    NotRegularError,
    PolynomialParseError,
    ScenarioError,
    ScenarioInvariantError,
    ScenarioParseError,
    UnknownVariableError,
    UnrecognizedLocusError,
    UnsupportedBaseError,
    UnsupportedNumeratorError,
)
from .poly import Polynomial, Rational, parse_fraction, parse_polynomial
from .groebner import (
    IdealBasis,
    groebner_basis,
    ideal_member,
    ideal_quotient,
    is_regular_sequence,
)
from .localring import (
    EpsElement,
    LocalFraction,
    PrimePoint,
    eps_invert,
    local_ideal_member,
)
from .koszul import (
    DeformedKoszul,
    KoszulComplex,
    PermutationChainMap,
    build_koszul,
    multiplicity,
    permutation_chain_map,
    permutation_sign,
    verify_complex,
)
from .cohomology import (
    CohClass,
    FormNumerator,
    TrivialityVerdict,
    boundary,
    ch_representative,
    class_equal,
    class_is_trivial,
    reorder_class,
)
from .cycles import (
    CycleElement,
    MilnorVerdict,
    Scenario,
    auxiliary_cycle,
    classify_obstruction,
    combined_cycle,
    eliminate_obstruction,
    is_milnor_cycle,
    lift_target_cycle,
    restrict,
    target_cycle,
    undeformed_target,
    verify_unobstructed,
)

__version__ = "0.1.0"

__all__ = [
    "CycleLiftError",
    "PolynomialParseError",
    "UnknownVariableError",
    "NonUnitError",
    "InvalidFractionError",
    "NotRegularError",
    "UnsupportedBaseError",
    "UnsupportedNumeratorError",
    "UnrecognizedLocusError",
    "NotApplicableError",
    "ScenarioError",
    "MissingKeyError",
    "ScenarioParseError",
    "ScenarioInvariantError",
    "Polynomial",
    "Rational",
    "parse_polynomial",
    "parse_fraction",
    "IdealBasis",
    "groebner_basis",
    "ideal_member",
    "ideal_quotient",
    "is_regular_sequence",
    "PrimePoint",
    "LocalFraction",
    "EpsElement",
    "eps_invert",
    "local_ideal_member",
    "DeformedKoszul",
    "KoszulComplex",
    "PermutationChainMap",
    "build_koszul",
    "verify_complex",
    "permutation_chain_map",
    "permutation_sign",
    "multiplicity",
    "CohClass",
    "FormNumerator",
    "TrivialityVerdict",
    "ch_representative",
    "class_is_trivial",
    "class_equal",
    "boundary",
    "reorder_class",
    "CycleElement",
    "Scenario",
    "MilnorVerdict",
    "target_cycle",
    "undeformed_target",
    "auxiliary_cycle",
    "combined_cycle",
    "lift_target_cycle",
    "restrict",
    "is_milnor_cycle",
    "classify_obstruction",
    "verify_unobstructed",
    "eliminate_obstruction",
    "__version__",
]
