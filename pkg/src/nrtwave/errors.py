"""Exception hierarchy shared across the package.

Numerical routines raise these instead of returning NaN/Inf so that
callers (quadrature, CLI checks) always see a clean failure signal.
"""


class NrtError(Exception):
    """Base class for all package errors."""


class BranchPointError(NrtError):
    """A fractional power was requested at its branch point (base = 0)."""


class PathThroughOriginError(NrtError):
    """A complex straight-line path crosses the origin, so no continuous
    argument exists across the crossing time."""


class DegenerateInitialError(NrtError):
    """Initial coefficients are degenerate for the requested solution
    family (e.g. a(0) = 0 for the generic free packet)."""


class DegenerateInputError(NrtError):
    """Input lies on an excluded degenerate locus (fixed point, zero
    constant, ...)."""


class SingularTimeError(NrtError):
    """Evaluation time lies at or beyond a finite-time singularity of the
    solution's norm."""


class StiffnessError(NrtError):
    """Adaptive ODE step size collapsed below the minimum, usually because
    the trajectory approaches a coefficient singularity.

    Attributes:
        t: time at which the step collapse occurred.
    """

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t


class StabilityError(NrtError):
    """PDE evolution produced non-finite or explosively large field values."""


class DivergentNormError(NrtError):
    """The requested norm integral does not converge."""


class DomainError(NrtError):
    """Arguments outside the validity range of a closed-form expression."""


class NonInvertibleError(NrtError):
    """A generator derivative is not strictly monotone on the sampled
    interval, so no inverse function exists there."""


class ConfigError(NrtError):
    """Invalid run configuration (bad key, missing value, failed
    precondition)."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key
