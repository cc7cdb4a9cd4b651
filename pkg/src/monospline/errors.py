"""Exception types raised by the library."""


class SplineError(Exception):
    """Base class for all errors raised by this package."""


class NonIncreasingAbscissae(SplineError):
    """Breakpoints are not strictly increasing."""


class TooFewPoints(SplineError):
    """Not enough data points for the requested operation."""


class LengthMismatch(SplineError):
    """Paired arrays have inconsistent lengths."""


class OutOfDomain(SplineError):
    """Evaluation point lies outside the spline's breakpoint range."""


class NotInterior(SplineError):
    """Node index does not refer to an interior node."""


class SingularPivot(SplineError):
    """Tridiagonal elimination hit a pivot too close to zero."""


class FixedAtBoundary(SplineError):
    """A fixed-node index refers to a boundary node."""


class EmptyWindow(SplineError):
    """An error window resolved to an empty index set."""


class ZeroError(SplineError):
    """An error norm is exactly zero, so no convergence order can be formed."""
