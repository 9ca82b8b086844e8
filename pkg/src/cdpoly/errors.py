"""Exception hierarchy for cdpoly."""


class CDPolyError(Exception):
    """Base class for all cdpoly errors."""


class ZeroGamma(CDPolyError):
    """A doubling parameter gamma is zero."""


class DegenerateMu(CDPolyError):
    """The quadratic-extension parameter mu satisfies 4*mu + 1 = 0."""


class BadLength(CDPolyError):
    """A coefficient or parameter list has the wrong length."""


class ParamsMismatch(CDPolyError):
    """Two operands live in different algebras."""


class NotInvertible(CDPolyError):
    """Element has isotropic (zero) norm and admits no inverse."""


class NotLocallyComplex(CDPolyError):
    """Operation requires a locally-complex (main-sequence) algebra."""


class NonCentralResult(CDPolyError):
    """A product that must be central came out with nonscalar coefficients.

    This signals an internal arithmetic bug: the norm of a polynomial always
    has central coefficients.
    """


class NotDivisionAlgebra(CDPolyError):
    """Operation is only valid over a division algebra (main sequence, level <= 3)."""


class NoConvergence(CDPolyError):
    """The simultaneous root iteration did not converge.

    Carries the partial result in ``self.partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DegreeZero(CDPolyError):
    """Root and critical-point bounds need degree >= 1."""


class NonMonicHighLevel(CDPolyError):
    """Coefficient bounds for non-monic input are only valid up to level 3.

    At dimension 16 and above a non-monic polynomial may have an unbounded
    root set (e.g. a*x with a zero divisor a), so there is no honest bound
    to return.
    """


class NonRealCoefficients(CDPolyError):
    """Jensen sphere containment for the polynomial's own roots needs real coefficients."""
