"""Exception hierarchy.

Every error raised by the library derives from ShiftLabError so callers
(and the CLI) can distinguish domain failures from genuine bugs.
"""


class ShiftLabError(Exception):
    """Base class for all library errors."""


class InvalidParameters(ShiftLabError):
    """Arguments outside an operation's documented domain."""


class OverlappingGroundSets(ShiftLabError):
    """Join of complexes whose ground sets intersect."""


class FaceNotInComplex(ShiftLabError):
    """A face argument is not a face of the complex."""


class VertexNotPresent(ShiftLabError):
    """A vertex argument is not a vertex of the complex."""


class LinkConditionViolated(ShiftLabError):
    """Operation requires the Link condition and it fails."""


class WrongCardinality(ShiftLabError):
    """A set argument has the wrong number of elements."""


class DegreeTooLarge(ShiftLabError):
    """Monomial degree outside the allowed range."""


class SupportOutOfRange(ShiftLabError):
    """Monomial mentions a variable outside the allowed range."""


class InvalidOrderIdeal(ShiftLabError):
    """Set of monomials is not a shifted order ideal of the required shape."""


class NotAPseudomanifoldWithBoundary(ShiftLabError):
    """Boundary extraction on a complex with a ridge in three or more facets."""


class SingularMatrix(ShiftLabError):
    """A matrix that must be invertible is singular."""


class RandomnessSuspect(ShiftLabError):
    """Randomized trials disagreed, or certificates failed, after retries."""


class GinUnavailable(ShiftLabError):
    """A generic initial ideal could not be computed."""


class NonTerminating(ShiftLabError):
    """An extraction loop exceeded its proven degree cap."""


class DegreeBoundTooSmall(ShiftLabError):
    """Initial-ideal truncation provably misses generators (Hilbert mismatch)."""


class SquarefreeImageOutOfRange(ShiftLabError):
    """The squarefree stretch of a monomial leaves the ambient variable range."""


class DimensionMismatch(ShiftLabError):
    """Artinian quotient dimensions disagree with the expected h-numbers."""


class IdentityViolated(ShiftLabError):
    """A proven identity failed on concrete data (indicates a bug or bad seed)."""


class HypothesesViolated(ShiftLabError):
    """Input does not satisfy the hypotheses of the requested construction."""
