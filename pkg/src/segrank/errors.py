"""Exception hierarchy.

Degenerate* and *Ambiguous* exceptions mark individual trials that a Monte
Carlo caller should reject and tally; they never indicate a bug.
"""


class SegrankError(Exception):
    """Base class for all library errors."""


class OutOfRange(SegrankError, ValueError):
    """Input outside the supported exact-arithmetic range."""


class UnsupportedFormat(SegrankError, ValueError):
    """Tensor format outside the implemented classification cases."""


class TrialRejected(SegrankError):
    """A single randomized trial must be discarded (measure-zero or
    numerically unresolvable sample)."""


class DegenerateSpan(TrialRejected):
    """Slice stack numerically rank-deficient."""


class DegenerateSystem(TrialRejected):
    """Polynomial system degenerate (identically zero determinant or
    dependent equations)."""


class DegeneratePosition(TrialRejected):
    """Constraint vectors not in general position."""


class DegenerateSurface(TrialRejected):
    """Matrix span of a determinantal surface has deficient dimension."""


class TrialAmbiguous(TrialRejected):
    """Numerical certification failed; real/complex status undecidable."""


class AmbiguousRoots(TrialAmbiguous):
    """Univariate root classification inconsistent or in the dead zone."""


class AmbiguousSystem(TrialAmbiguous):
    """Polynomial-system solve could not certify the full solution set."""
