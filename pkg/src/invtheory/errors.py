"""Error types raised across the toolkit.

Every domain failure maps to one of these, so callers (and the CLI) can
distinguish bad input from bad mathematics by class name.
"""


class InvariantTheoryError(Exception):
    """Base class for all domain errors in this package."""


# ---- parsing -------------------------------------------------------------

class MalformedExpression(InvariantTheoryError):
    """Input text does not match the polynomial grammar."""


class UnknownVariable(InvariantTheoryError):
    """An identifier in the input is not a variable of the target ring."""


class NegativeExponent(InvariantTheoryError):
    """An exponent in the input is negative."""


class DivisorNotInvertible(InvariantTheoryError):
    """A coefficient denominator is zero in the coefficient field."""


# ---- rings and orders ----------------------------------------------------

class RingMismatch(InvariantTheoryError):
    """Operands live in different polynomial rings."""


class OrderMismatch(InvariantTheoryError):
    """A polynomial's term order differs from the basis it is reduced by."""


class InhomogeneousTruncation(InvariantTheoryError):
    """Degree-truncated Groebner bases require homogeneous input."""


# ---- group actions -------------------------------------------------------

class NotAPermutation(InvariantTheoryError):
    """One-line permutation text is not a permutation of 1..n."""


class ClosureCapExceeded(InvariantTheoryError):
    """Group closure grew past the configured element cap."""


class DimensionMismatch(InvariantTheoryError):
    """A matrix or weight row has the wrong shape for the ring."""


class ModularCaseUnsupported(InvariantTheoryError):
    """The field characteristic divides the group order."""


class NonZeroCharacteristic(InvariantTheoryError):
    """The operation needs characteristic zero (e.g. Molien series)."""


class MissingDegreeBound(InvariantTheoryError):
    """No degree bound given and none can be derived from the group."""


class RootOfUnityUnavailable(InvariantTheoryError):
    """The coefficient field has no root of unity of the needed order."""


class NonHomogeneousResult(InvariantTheoryError):
    """An elimination produced inhomogeneous generators; the action matrix
    does not define a degree-preserving action."""


class IncompleteGeneration(InvariantTheoryError):
    """The degree sweep ended before the accepted invariants generated the
    Hilbert ideal."""


# ---- rational functions --------------------------------------------------

class InexactDivision(InvariantTheoryError):
    """A polynomial division that had to be exact left a remainder."""


class ZeroDenominator(InvariantTheoryError):
    """A rational function was built with denominator zero."""
