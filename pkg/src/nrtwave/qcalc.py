"""q-deformed complex arithmetic.

Three primitives underpin every solution family in this package:

  * the q-exponential  e_q(z) = [1 + (1-q) z]^(1/(1-q)),  e_1(z) = exp(z),
  * principal-branch fractional powers taken directly from a quadratic
    base value (one branch decision per point),
  * analytically unwrapped arguments along straight-line complex
    trajectories z(t) = z0 + v t, which make fractional powers of the
    packet denominator continuous in time instead of jumping at the
    principal branch cut.

The argument of a straight line that avoids the origin is monotone in t
(d(arg)/dt = Im(v conj(z)) / |z|^2 has the sign of the constant
Im(v conj(z0))), and the total sweep between the two asymptotes is less
than pi.  The continuous argument over [0, t] is therefore Arg(z0) plus
the principal angle between z0 and z(t) -- no step-by-step unwrapping is
required.

All functions are pure; magnitudes above OVERFLOW_LIMIT raise
OverflowError rather than returning Inf.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BranchPointError, PathThroughOriginError

# Below this distance from q = 1 the power form is ill-conditioned and the
# analytic exp(z) limit is used instead.
Q_ONE_EPS = 1e-9

# Magnitude ceiling for every result.
OVERFLOW_LIMIT = 1e300

_LOG_OVERFLOW = math.log(OVERFLOW_LIMIT)


@dataclass(frozen=True)
class LinearPath:
    """Straight-line trajectory z(t) = z0 + v*t in the complex plane.

    z0 must be nonzero: the path origin is the branch point reference and
    fractional powers along the path are anchored to the principal value
    at t = 0.
    """

    z0: complex
    v: complex

    def __post_init__(self):
        if self.z0 == 0:
            raise PathThroughOriginError("path starts at the branch point z0 = 0")

    def at(self, t: float) -> complex:
        return self.z0 + self.v * t


def _guard_overflow(w: complex) -> complex:
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise OverflowError("complex power overflowed to non-finite value")
    if abs(w.real) > OVERFLOW_LIMIT or abs(w.imag) > OVERFLOW_LIMIT:
        raise OverflowError("complex power magnitude exceeds 1e300")
    return w


def qpow_from_base(base: complex, s: float) -> complex:
    """Principal-branch power base**s = exp(s*(ln|base| + i*Arg base)).

    Arg is taken in (-pi, pi].  Raises BranchPointError at base = 0 with a
    negative exponent; 0**0 is defined as 1.
    """
    base = complex(base)
    if base == 0:
        if s < 0:
            raise BranchPointError("0 raised to negative power %g" % s)
        return 1.0 + 0j if s == 0 else 0j
    if s == 0:
        return 1.0 + 0j
    if s == 1:
        return base
    log_mag = s * math.log(abs(base))
    if log_mag > _LOG_OVERFLOW:
        raise OverflowError("|base|**s exceeds 1e300")
    return _guard_overflow(cmath.exp(complex(log_mag, s * cmath.phase(base))))


def qexp(q: float, z: complex) -> complex:
    """q-exponential [1 + (1-q) z]^(1/(1-q)), principal branch.

    Reduces to exp(z) within Q_ONE_EPS of q = 1, where the power form
    loses all precision.  Continuous in q across q = 1 on the principal
    domain.
    """
    z = complex(z)
    if abs(q - 1.0) < Q_ONE_EPS:
        if z.real > _LOG_OVERFLOW:
            raise OverflowError("exp(z) exceeds 1e300")
        return cmath.exp(z)
    return qpow_from_base(1.0 + (1.0 - q) * z, 1.0 / (1.0 - q))


def path_arg_unwrapped(path: LinearPath, t: float) -> float:
    """Continuous argument of z(t) = z0 + v*t with theta(0) = Arg(z0).

    Monotone in t for any straight line avoiding the origin.  Raises
    PathThroughOriginError if the segment [z(0), z(t)] contains 0, which
    can only happen when v is a real multiple of z0.
    """
    z0 = path.z0
    zt = path.at(t)
    theta0 = cmath.phase(z0)
    if t == 0:
        return theta0
    cross = (path.v * z0.conjugate()).imag
    if cross == 0.0:
        # Path collinear with z0: z(t) = z0 * (1 + kappa*t), kappa real.
        kappa = (path.v * z0.conjugate()).real / abs(z0) ** 2
        scale = 1.0 + kappa * t
        if scale <= 0.0 or (kappa != 0.0 and min(t, 0.0) <= -1.0 / kappa <= max(t, 0.0)):
            raise PathThroughOriginError(
                "segment [z(0), z(%g)] passes through the origin" % t
            )
        return theta0
    if zt == 0:
        raise PathThroughOriginError("z(%g) = 0" % t)
    # Sweep from z0 to z(t); bounded by the asymptote gap (< pi), so the
    # principal angle between the endpoints is exact.
    return theta0 + cmath.phase(zt * z0.conjugate())


def cpow_along_path(path: LinearPath, s: float, t: float) -> complex:
    """z(t)**s with the branch fixed by continuity from the principal value
    at t = 0:  |z(t)|^s * exp(i*s*theta_unwrapped(t))."""
    theta = path_arg_unwrapped(path, t)
    r = abs(path.at(t))
    if r == 0.0:
        raise PathThroughOriginError("z(%g) = 0" % t)
    log_mag = s * math.log(r)
    if log_mag > _LOG_OVERFLOW:
        raise OverflowError("|z(t)|**s exceeds 1e300")
    return _guard_overflow(cmath.exp(complex(log_mag, s * theta)))
