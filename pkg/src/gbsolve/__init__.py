"""Exact computer-algebra kernel: Groebner bases over fields and over K[x1],
finite-field towers, and a constructive point-or-certificate solver."""

from .errors import (
    InvariantViolation,
    KernelError,
    ParseError,
    SpecializationError,
    UsageError,
    ZeroPolynomialError,
)
from .euclidean import (
    certify_strong_basis,
    from_coeff_view,
    gpoly,
    specialization_locus,
    specialize_basis,
    spoly,
    strong_buchberger,
    strong_normal_form,
    strong_reduce,
    to_coeff_view,
)
from .fields import (
    GF,
    QQ,
    FFElement,
    FieldTower,
    UnivariatePolyDomain,
    adjoin_root,
    enumerate_elements,
    extended_gcd,
    factor_univariate,
)
from .groebner import (
    Ideal,
    StrongBasis,
    Triviality,
    buchberger,
    certify_basis,
    eliminate_to_x1,
    is_trivial,
    member,
    normal_form,
    reduce,
)
from .parser import ProblemFile, parse_polynomial, parse_problem
from .poly import Monomial, Polynomial, TermOrder, to_text
from .solver import (
    BranchStep,
    CoprimeSplitProof,
    Point,
    Trivial,
    coprime_split_identity,
    find_branch_root,
    good_specialization_point,
    ideal_intersect,
    radical_member,
    radical_witness,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BranchStep",
    "CoprimeSplitProof",
    "FFElement",
    "FieldTower",
    "GF",
    "Ideal",
    "InvariantViolation",
    "KernelError",
    "Monomial",
    "ParseError",
    "Point",
    "Polynomial",
    "ProblemFile",
    "QQ",
    "SpecializationError",
    "StrongBasis",
    "TermOrder",
    "Trivial",
    "Triviality",
    "UnivariatePolyDomain",
    "UsageError",
    "ZeroPolynomialError",
    "adjoin_root",
    "buchberger",
    "certify_basis",
    "certify_strong_basis",
    "coprime_split_identity",
    "eliminate_to_x1",
    "enumerate_elements",
    "extended_gcd",
    "factor_univariate",
    "find_branch_root",
    "from_coeff_view",
    "good_specialization_point",
    "gpoly",
    "ideal_intersect",
    "is_trivial",
    "member",
    "normal_form",
    "parse_polynomial",
    "parse_problem",
    "radical_member",
    "radical_witness",
    "reduce",
    "solve",
    "specialization_locus",
    "specialize_basis",
    "spoly",
    "strong_buchberger",
    "strong_normal_form",
    "strong_reduce",
    "to_coeff_view",
    "to_text",
]
