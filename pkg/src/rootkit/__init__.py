"""Exact-arithmetic toolkit for reduced irreducible root systems.

Builds the classical and exceptional irreducible root systems over exact
rationals, enumerates Weyl and Levi-Weyl orbits, reduces vectors to their
dominant representatives, classifies special and co-special simple roots,
decides quasi-constancy of weights, and produces explicit Weyl words
witnessing dominant conjugation.
"""

from .classify import (
    ClassificationRow,
    MultiplicityProfile,
    TheoremReport,
    descent_blockers,
    fundamental_weight,
    height,
    highest_roots,
    is_cospecial,
    is_quasi_constant,
    is_special,
    levi_orbit_multiplicity_violations,
    multiplicities,
    theorem_row,
    verify_theorem,
)
from .core import (
    CartanType,
    LengthClass,
    RootSystem,
    admissible_types,
    build_system,
    cartan_matrix,
    closure_system,
    coroot,
    dual_system,
    length_class,
    pairing,
    symmetrizer,
)
from .errors import (
    BadIndex,
    InadmissibleRank,
    MultiplicityZero,
    NeitherSpecialNorCospecial,
    NonIntegralSolution,
    NotARoot,
    NotLong,
    NotPositiveRoot,
    NotSpecial,
    ParseError,
    RootSystemError,
)
from .weyl import (
    Orbit,
    WeylWord,
    apply_word,
    dominant_rep,
    full_base,
    is_dominant,
    levi_subset,
    orbit,
    reflect,
)
from .witness import WitnessResult, dominant_witness, levi_conjugator

__version__ = "0.1.0"

__all__ = [
    "BadIndex",
    "CartanType",
    "ClassificationRow",
    "InadmissibleRank",
    "LengthClass",
    "MultiplicityProfile",
    "MultiplicityZero",
    "NeitherSpecialNorCospecial",
    "NonIntegralSolution",
    "NotARoot",
    "NotLong",
    "NotPositiveRoot",
    "NotSpecial",
    "Orbit",
    "ParseError",
    "RootSystem",
    "RootSystemError",
    "TheoremReport",
    "WeylWord",
    "WitnessResult",
    "admissible_types",
    "apply_word",
    "build_system",
    "cartan_matrix",
    "closure_system",
    "coroot",
    "descent_blockers",
    "dominant_rep",
    "dominant_witness",
    "dual_system",
    "fundamental_weight",
    "full_base",
    "height",
    "highest_roots",
    "is_cospecial",
    "is_dominant",
    "is_quasi_constant",
    "is_special",
    "length_class",
    "levi_conjugator",
    "levi_orbit_multiplicity_violations",
    "levi_subset",
    "multiplicities",
    "orbit",
    "pairing",
    "reflect",
    "symmetrizer",
    "theorem_row",
    "verify_theorem",
]
