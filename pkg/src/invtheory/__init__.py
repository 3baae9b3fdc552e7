"""Exact computation of generators for rings of invariants.

Three kinds of group actions on polynomial rings are supported: finite
matrix groups (Reynolds averaging, Molien series, King's algorithm and a
pure linear-algebra variant), diagonal torus x finite-abelian actions
(monomial Hilbert bases, optionally literal invariance over a finite
field), and linearly reductive groups presented by equations (Hilbert
ideal by elimination, invariants degree by degree).  All arithmetic is
exact, over Q or a prime field.
"""

from .errors import (
    ClosureCapExceeded,
    DimensionMismatch,
    DivisorNotInvertible,
    IncompleteGeneration,
    InexactDivision,
    InhomogeneousTruncation,
    InvariantTheoryError,
    MalformedExpression,
    MissingDegreeBound,
    ModularCaseUnsupported,
    NegativeExponent,
    NonHomogeneousResult,
    NonZeroCharacteristic,
    NotAPermutation,
    OrderMismatch,
    RingMismatch,
    RootOfUnityUnavailable,
    UnknownVariable,
    ZeroDenominator,
)
from .fields import Field, QQ, prime_field
from .orders import TermOrder
from .poly import (
    Monomial,
    Polynomial,
    PolynomialRing,
    format_polynomial,
    monomial_basis,
    polynomial_ring,
    substitute,
)
from .parsing import parse_polynomial
from .ratfunc import RationalFunction, UniPoly, rational_function_sum
from .groebner import (
    GroebnerBasis,
    buchberger,
    elimination_ideal,
    normal_form,
)
from .finite import (
    FiniteGroupAction,
    act_on,
    invariant_space_basis,
    invariants_king,
    invariants_linear_algebra,
    molien_series,
    permutation_matrix,
    reynolds,
)
from .diagonal import (
    DiagonalAction,
    abelian_generators,
    diagonal_invariants,
    diagonal_invariants_literal,
    is_invariant_exponent,
    reynolds_diagonal,
    torus_hilbert_basis,
)
from .reductive import (
    LinearlyReductiveAction,
    hilbert_ideal,
    reductive_invariant_basis,
    reductive_invariants,
)
from .rings import (
    DegreeCheck,
    RingOfInvariants,
    defining_ideal,
    hilbert_series_rewrite,
    invariant_ring,
    verify_generators,
)

__version__ = "0.1.0"

__all__ = [
    "Field",
    "QQ",
    "prime_field",
    "TermOrder",
    "Monomial",
    "Polynomial",
    "PolynomialRing",
    "polynomial_ring",
    "monomial_basis",
    "parse_polynomial",
    "format_polynomial",
    "substitute",
    "UniPoly",
    "RationalFunction",
    "rational_function_sum",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "elimination_ideal",
    "FiniteGroupAction",
    "permutation_matrix",
    "act_on",
    "reynolds",
    "molien_series",
    "invariant_space_basis",
    "invariants_king",
    "invariants_linear_algebra",
    "DiagonalAction",
    "is_invariant_exponent",
    "abelian_generators",
    "torus_hilbert_basis",
    "diagonal_invariants",
    "diagonal_invariants_literal",
    "reynolds_diagonal",
    "LinearlyReductiveAction",
    "hilbert_ideal",
    "reductive_invariant_basis",
    "reductive_invariants",
    "RingOfInvariants",
    "DegreeCheck",
    "invariant_ring",
    "defining_ideal",
    "hilbert_series_rewrite",
    "verify_generators",
    "InvariantTheoryError",
    "MalformedExpression",
    "UnknownVariable",
    "NegativeExponent",
    "DivisorNotInvertible",
    "RingMismatch",
    "OrderMismatch",
    "InhomogeneousTruncation",
    "NotAPermutation",
    "ClosureCapExceeded",
    "DimensionMismatch",
    "ModularCaseUnsupported",
    "NonZeroCharacteristic",
    "MissingDegreeBound",
    "RootOfUnityUnavailable",
    "NonHomogeneousResult",
    "IncompleteGeneration",
    "InexactDivision",
    "ZeroDenominator",
]
