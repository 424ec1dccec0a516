"""Exception types shared across the library.

Exit-code mapping used by the CLI:
  InvalidInput and subclasses -> 2
  LimitExceeded and subclasses -> 3
  IdentityViolation and subclasses -> 4 (an internal cross-check failed,
  which means a bug, not bad user data)
"""


class StringyHodgeError(Exception):
    """Base class for all library errors."""


class InvalidInput(StringyHodgeError):
    """Input violates a documented precondition."""


class LimitExceeded(StringyHodgeError):
    """A configured resource cap was hit."""


class IdentityViolation(StringyHodgeError):
    """Two independent computations of the same quantity disagreed."""


# -- exactpoly ---------------------------------------------------------------

class ZeroAtNegativeExponent(InvalidInput):
    """Evaluation of a genuinely Laurent term at zero."""


# -- polytope ----------------------------------------------------------------

class DegenerateInput(InvalidInput):
    """Point set is not a valid vertex description of a polytope."""


class NotReflexive(InvalidInput):
    """Operation requires a reflexive polytope."""


class NotSimplex(InvalidInput):
    """Operation requires a simplex."""


# -- quotient ----------------------------------------------------------------

class DegreeMismatch(InvalidInput):
    """Group elements of different degrees were combined."""


class NotSpecialLinear(InvalidInput):
    """Monomial matrix has determinant != 1."""


class CapExceeded(LimitExceeded):
    """Group closure grew past the configured cap."""


class NonIntegralWeight(InvalidInput):
    """A conjugacy class has non-integral weight, so the integer grading
    of the S-polynomial is undefined."""


class NotAbelianDiagonal(InvalidInput):
    """Group is not abelian with trivial permutation parts."""


class PreconditionViolated(InvalidInput):
    """Generic precondition failure (argument ranges etc.)."""


# -- triangulation -----------------------------------------------------------

class NotUnimodular(InvalidInput):
    """Triangulation has a cell of normalized volume > 1; the fiber
    cohomology identity is only valid for unimodular triangulations."""


# -- stringy -----------------------------------------------------------------

class InconsistentStratification(IdentityViolation):
    """The two evaluation forms of a stratified invariant disagree, or the
    stratification data violates its own consistency relations."""


class NonPolynomialResult(IdentityViolation):
    """Laurent terms failed to cancel where a genuine polynomial was
    expected; signals an implementation bug."""


class OutOfRange(InvalidInput):
    """Index argument outside the admissible range."""


# -- orbifold ----------------------------------------------------------------

class NonIntegralShift(InvalidInput):
    """Fermion shift is not an integer; the shifted bigrading is undefined."""


class ShiftOutOfRange(InvalidInput):
    """A shifted Hodge index falls outside the [0, n] x [0, n] square."""
