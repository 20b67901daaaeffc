"""Exact stringy and orbifold E-functions of Calabi-Yau hypersurfaces in
weighted projective space, and verification of the mirror-duality identity

    E_str(mirror; u, v) = (-u)^(d-1) E_orb(X; 1/u, v).

All arithmetic is exact (integers and fractions); nothing is floated.
"""

from .errors import (
    DivisionNotExact,
    EmptyInput,
    NegativeExponent,
    NonIntegerCoefficient,
    NonIntegerMilnor,
    NotIP,
    NotPolynomial,
    NotWellFormed,
    OutOfRange,
    PoleAtOne,
    ReconstructionFailure,
    SignPatternViolation,
    StringyMirrorError,
    SubsetTooSmall,
)
from .exact_arith import (
    BiPoly,
    FracPoly,
    RationalT,
    integral_project,
    limit_at_one,
    mirror_transform,
    rational_from_counts,
    reynolds_factor_property,
)
from .face_epoly import FaceEPolynomial, face_e, psi
from .mirror_verify import VerificationReport, per_l_check, verify
from .orbifold import (
    OrbifoldEResult,
    mirror_orbifold_e,
    q_identity_check,
    vafa_euler,
    vafa_poincare,
)
from .stringy import (
    EFunction,
    HodgeTable,
    bracket,
    hodge_table,
    is_polynomial,
    stringy_e,
    stringy_e_per_l,
    stringy_euler,
    stringy_terms,
    to_polynomial,
)
from .weights import (
    FaceSubgroup,
    OrbifoldElement,
    WeightVector,
    census,
    element,
    ip_property,
    lattice_counts,
    milnor_number,
    poincare_series,
    subgroup,
    transverse,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "StringyMirrorError",
    "EmptyInput",
    "NotWellFormed",
    "OutOfRange",
    "ReconstructionFailure",
    "PoleAtOne",
    "NegativeExponent",
    "DivisionNotExact",
    "SubsetTooSmall",
    "NotIP",
    "NotPolynomial",
    "SignPatternViolation",
    "NonIntegerMilnor",
    "NonIntegerCoefficient",
    "FracPoly",
    "RationalT",
    "BiPoly",
    "integral_project",
    "reynolds_factor_property",
    "rational_from_counts",
    "limit_at_one",
    "mirror_transform",
    "WeightVector",
    "OrbifoldElement",
    "FaceSubgroup",
    "validate",
    "element",
    "census",
    "subgroup",
    "ip_property",
    "transverse",
    "milnor_number",
    "poincare_series",
    "lattice_counts",
    "FaceEPolynomial",
    "face_e",
    "psi",
    "EFunction",
    "HodgeTable",
    "bracket",
    "stringy_terms",
    "stringy_e",
    "stringy_e_per_l",
    "is_polynomial",
    "to_polynomial",
    "stringy_euler",
    "hodge_table",
    "OrbifoldEResult",
    "vafa_euler",
    "vafa_poincare",
    "mirror_orbifold_e",
    "q_identity_check",
    "VerificationReport",
    "verify",
    "per_l_check",
    "__version__",
]
