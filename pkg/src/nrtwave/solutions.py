"""Closed-form solution families of the NRT nonlinear Schrodinger equation.

The free equation for psi(x, t) = Phi/Phi_0 is

    i hbar d/dt psi = -(1/(2-q)) (hbar^2/2m) d^2/dx^2 [psi^(2-q)],

and with a harmonic trap an extra V(x) psi^q term appears on the right,
V(x) = K x^2 / 2.  Every family here is an exact solution built on the
q-Gaussian ansatz

    psi(x, t) = [1 - (1-q) (a(t) x^2 + b(t) x + c(t))]^(1/(1-q)),

whose complex coefficients obey

    i da/dt = (hbar/m) (3-q) a^2          [- K/(2 hbar) with the trap]
    i db/dt = (hbar/m) (3-q) a b
    i dc/dt = (hbar/m) ((1-q) a c - a + b^2/2),

plus two exact solutions that fall outside the ansatz: the frozen profile
(b x + i c)^(1/(2-q)) and the q = 1 Gaussian packet of the linear limit.

Fractional powers of the flow denominator (3-q) i hbar t / m + alpha are
taken branch-continuous in t from the principal value at t = 0 (see
qcalc); the pointwise power of the quadratic base is always principal, so
each space-time point makes exactly one branch decision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import qcalc
from .errors import (
    BranchPointError,
    DegenerateInitialError,
    DegenerateInputError,
    DomainError,
)
from .qcalc import LinearPath, Q_ONE_EPS, cpow_along_path, qexp, qpow_from_base


@dataclass(frozen=True)
class ModelParams:
    """Physical constants: entropic index q, action scale hbar, mass m and
    optional spring constant K (None = free particle).

    Defaults are the dimensionless units hbar = m = 1; the field scaling
    constant Phi_0 is fixed to 1 throughout the package.
    """

    q: float = 1.0
    hbar: float = 1.0
    m: float = 1.0
    K: float | None = None

    def __post_init__(self):
        if not (self.hbar > 0 and math.isfinite(self.hbar)):
            raise DomainError("hbar must be positive and finite")
        if not (self.m > 0 and math.isfinite(self.m)):
            raise DomainError("m must be positive and finite")
        if not math.isfinite(self.q):
            raise DomainError("q must be finite")
        if self.K is not None and not (self.K >= 0 and math.isfinite(self.K)):
            raise DomainError("K must be nonnegative and finite")


@dataclass(frozen=True)
class CoefficientState:
    """Ansatz coefficients (a, b, c) at time t.

    Units: a ~ 1/length^2, b ~ 1/length, c dimensionless.
    """

    t: float
    a: complex
    b: complex
    c: complex


@dataclass(frozen=True)
class PacketConstants:
    """Integration constants of the free coefficient flow.

    alpha = 1/a(0), beta = b(0)/a(0); gamma fixes the additive part of c.
    alpha = 0 would put the flow denominator at its pole for t = 0.
    """

    alpha: complex
    beta: complex
    gamma: complex

    def __post_init__(self):
        if self.alpha == 0:
            raise DegenerateInitialError("alpha = 1/a(0) must be nonzero")


@dataclass(frozen=True)
class PlaneWaveMode:
    """Wave number, frequency, energy and momentum of a q-plane wave.

    The de Broglie relations E = hbar*w, p = hbar*k and the dispersion
    w = hbar k^2 / 2m hold by construction; use plane_wave_mode().
    """

    k: float
    w: float
    E: float
    p: float

    def __post_init__(self):
        if not math.isclose(self.E, self.w * (self.p / self.k) if self.k else 0.0,
                            rel_tol=1e-12, abs_tol=1e-300) and self.k != 0:
            pass  # E = hbar*w with hbar = p/k; full check below
        hbar = self.p / self.k if self.k != 0 else None
        if hbar is not None:
            ok = (
                math.isclose(self.E, hbar * self.w, rel_tol=1e-12)
                and math.isclose(self.w, hbar * self.k ** 2 / (2 * self.E / self.w)
                                 if self.w else 0.0, rel_tol=1e-12)
                if self.w else True
            )
            if not ok:
                raise DomainError("inconsistent plane-wave mode quantities")


def plane_wave_mode(k: float, params: ModelParams) -> PlaneWaveMode:
    """Mode with w = hbar k^2/2m, E = hbar w, p = hbar k (so E = p^2/2m)."""
    w = params.hbar * k * k / (2.0 * params.m)
    return PlaneWaveMode(k=k, w=w, E=params.hbar * w, p=params.hbar * k)


# ---------------------------------------------------------------------------
# Pointwise ansatz evaluation
# ---------------------------------------------------------------------------

def eval_ansatz(state: CoefficientState, q: float, x: float) -> complex:
    """psi = [1 - (1-q) (a x^2 + b x + c)]^(1/(1-q)), principal branch.

    Within Q_ONE_EPS of q = 1 returns exp(-(a x^2 + b x + c)).
    """
    w = (state.a * x + state.b) * x + state.c
    return qexp(q, -w)


def abs2_from_state(state: CoefficientState, q: float, x: float) -> float:
    """|psi|^2 from the real closed form

        [1 - 2(1-q) Re W + (1-q)^2 |W|^2]^(1/(1-q)),   W = a x^2 + b x + c,

    which equals |P|^(2/(1-q)) for the complex base P = 1 - (1-q) W."""
    w = (state.a * x + state.b) * x + state.c
    if abs(q - 1.0) < Q_ONE_EPS:
        return math.exp(-2.0 * w.real)
    omq = 1.0 - q
    p2 = 1.0 - 2.0 * omq * w.real + omq * omq * (w.real ** 2 + w.imag ** 2)
    if p2 == 0.0:
        if 1.0 / omq < 0:
            raise BranchPointError("|psi|^2 pole: base polynomial vanishes")
        return 0.0
    return p2 ** (1.0 / omq)


# ---------------------------------------------------------------------------
# Free q-Gaussian packet: integration constants and coefficient flow
# ---------------------------------------------------------------------------

def _check_free_q(q: float):
    if abs(q - 1.0) < Q_ONE_EPS:
        raise DomainError("free packet closed forms need q != 1; "
                          "use the Gaussian limit family at q = 1")
    if abs(q - 3.0) < 1e-12:
        raise DomainError("free packet closed forms need q != 3; "
                          "use the pulsating q = 3 family")


def constants_from_initial(a0: complex, b0: complex, c0: complex,
                           q: float) -> PacketConstants:
    """Integration constants (alpha, beta, gamma) from initial coefficients.

    alpha = 1/a0, beta = b0/a0 and

        gamma = a0^((q-1)/(3-q)) * (c0 - 1/(1-q) - b0^2/(4 a0)) + 1/(1-q)

    with the principal branch of the a0 power.  a0 = 0 is degenerate
    (plane-wave / singular-packet coefficients cover that case).
    """
    _check_free_q(q)
    a0, b0, c0 = complex(a0), complex(b0), complex(c0)
    if a0 == 0:
        raise DegenerateInitialError(
            "a(0) = 0: use plane_wave_coeffs / singular_packet_coeffs")
    inv = 1.0 / (1.0 - q)
    gamma = qpow_from_base(a0, (q - 1.0) / (3.0 - q)) * (
        c0 - inv - b0 * b0 / (4.0 * a0)) + inv
    return PacketConstants(alpha=1.0 / a0, beta=b0 / a0, gamma=gamma)


def _free_path(constants: PacketConstants, params: ModelParams) -> LinearPath:
    v = (3.0 - params.q) * 1j * params.hbar / params.m
    return LinearPath(constants.alpha, v)


def free_coeffs(t: float, constants: PacketConstants,
                params: ModelParams) -> CoefficientState:
    """Coefficients of the free packet at time t:

        a(t) = 1 / Z(t),      Z(t) = (3-q) i hbar t / m + alpha,
        b(t) = beta * a(t),
        c(t) = 1/(1-q) + (beta^2/4) a(t) + (gamma - 1/(1-q)) Z(t)^((q-1)/(3-q)),

    with the Z power branch-continuous from its principal value at t = 0.
    Raises PathThroughOriginError when Z hits its pole on [0, t].
    """
    q = params.q
    _check_free_q(q)
    path = _free_path(constants, params)
    zpow = cpow_along_path(path, (q - 1.0) / (3.0 - q), t)
    a = 1.0 / path.at(t)
    inv = 1.0 / (1.0 - q)
    beta, gamma = constants.beta, constants.gamma
    c = inv + 0.25 * beta * beta * a + (gamma - inv) * zpow
    return CoefficientState(t=t, a=a, b=beta * a, c=c)


def free_coeff_rates(t: float, constants: PacketConstants,
                     params: ModelParams) -> tuple[complex, complex, complex]:
    """Exact time derivatives (da/dt, db/dt, dc/dt) of free_coeffs."""
    q = params.q
    _check_free_q(q)
    path = _free_path(constants, params)
    s = (q - 1.0) / (3.0 - q)
    zpow = cpow_along_path(path, s, t)
    a = 1.0 / path.at(t)
    v = path.v
    beta, gamma = constants.beta, constants.gamma
    inv = 1.0 / (1.0 - q)
    da = -v * a * a
    db = beta * da
    dc = 0.25 * beta * beta * da + (gamma - inv) * s * zpow * v * a
    return da, db, dc


# ---------------------------------------------------------------------------
# a = 0 coefficient families
# ---------------------------------------------------------------------------

def plane_wave_coeffs(k: float, t: float, params: ModelParams) -> CoefficientState:
    """q-plane wave coefficients a = 0, b = -ik, c = i hbar k^2 t / 2m.

    Feeding these to eval_ansatz reproduces
    [1 + (1-q) i (k x - w t)]^(1/(1-q)) with w = hbar k^2 / 2m.
    """
    w = params.hbar * k * k / (2.0 * params.m)
    return CoefficientState(t=t, a=0j, b=-1j * k, c=1j * w * t)


def singular_packet_coeffs(b_c: float, t0: float, t: float,
                           params: ModelParams) -> CoefficientState:
    """Real-slope a = 0 packet: a = 0, b = b_c,
    c = -i hbar b_c^2 (t + t0) / 2m.

    Its norm blows up at the past time t = -t0; pointwise values stay
    finite for t > -t0 (norm routines flag the singular side).
    """
    c = -1j * params.hbar * b_c * b_c * (t + t0) / (2.0 * params.m)
    return CoefficientState(t=t, a=0j, b=complex(b_c), c=c)


# ---------------------------------------------------------------------------
# q = 3 pulsating family, frozen profiles, Gaussian limit, harmonic trap
# ---------------------------------------------------------------------------

def q3_pulsating(a_c: complex, b_c: complex, c_1: complex, t: float, x: float,
                 params: ModelParams) -> complex:
    """Exact q = 3 solution

        psi = (1/sqrt 2) [a_c x^2 + b_c x + b_c^2/(4 a_c)
                          + c_1 exp(2 i hbar a_c t / m)]^(-1/2).

    For real a_c it is periodic with period pi in tbar = hbar a_c t / m;
    c_1 = 0 freezes the pulsation entirely.
    """
    if a_c == 0:
        raise DegenerateInputError("a_c must be nonzero for the q=3 family")
    bracket = (a_c * x + b_c) * x + b_c * b_c / (4.0 * a_c) \
        + c_1 * cmath.exp(2j * params.hbar * a_c * t / params.m)
    return qpow_from_base(2.0 * bracket, -0.5)


def q3_coeffs(a_c: complex, b_c: complex, c_1: complex, t: float,
              params: ModelParams) -> CoefficientState:
    """Ansatz coefficients of the pulsating family: a and b constant,
    c(t) = (b_c^2 - 2 a_c)/(4 a_c) + c_1 exp(2 i hbar a_c t / m)."""
    if a_c == 0:
        raise DegenerateInputError("a_c must be nonzero for the q=3 family")
    c = (b_c * b_c - 2.0 * a_c) / (4.0 * a_c) \
        + c_1 * cmath.exp(2j * params.hbar * a_c * t / params.m)
    return CoefficientState(t=t, a=complex(a_c), b=complex(b_c), c=c)


def frozen_psi(b: float, c: float, q: float, x: float) -> complex:
    """Stationary solution psi = (b x + i c)^(1/(2-q)), b, c real nonzero.

    Not of the q-Gaussian ansatz form: the profile is a q-exponential with
    deformation index q - 1 instead of q.  |psi|^2 = (b^2 x^2 + c^2)^(1/(2-q)),
    normalizable for 2 < q < 4.
    """
    if b == 0 or c == 0:
        raise DegenerateInputError("frozen solutions need b != 0 and c != 0")
    if abs(q - 2.0) < 1e-12:
        raise DomainError("frozen solutions need q != 2")
    return qpow_from_base(b * x + 1j * c, 1.0 / (2.0 - q))


def gaussian_limit_psi(k0: float, alpha: float, t: float, x: float,
                       params: ModelParams) -> complex:
    """Normalized free Gaussian packet of the linear (q = 1) equation:

        psi = (2 alpha/pi / (4 hbar^2 t^2/m^2 + alpha^2))^(1/4)
              * exp(-i (theta + hbar k0^2 t / 2m)) * exp(i k0 x)
              * exp(-(x - hbar k0 t/m)^2 / (2 i hbar t/m + alpha)),

    with tan(2 theta) = 2 hbar t / (m alpha).  Unit norm for all t.
    """
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    hbar, m = params.hbar, params.m
    d = complex(alpha, 2.0 * hbar * t / m)
    theta = 0.5 * math.atan2(2.0 * hbar * t / m, alpha)
    pref = (2.0 * alpha / math.pi) ** 0.25 / math.sqrt(abs(d))
    vt = hbar * k0 * t / m
    return pref * cmath.exp(
        complex(0.0, -(theta + hbar * k0 * k0 * t / (2.0 * m)) + k0 * x)
        - (x - vt) ** 2 / d)


def harmonic_ac(params: ModelParams) -> float:
    """Fixed point a_c = (1/hbar) sqrt(m K / (2 (3-q))) of the trapped
    a-flow; real only for q < 3 and K > 0."""
    if params.K is None or params.K <= 0:
        raise DomainError("harmonic solutions need a positive spring constant K")
    if params.q >= 3:
        raise DomainError("harmonic fixed point is real only for q < 3")
    return math.sqrt(params.m * params.K / (2.0 * (3.0 - params.q))) / params.hbar


def harmonic_quasistationary_coeffs(t: float, params: ModelParams,
                                    a_c: float | None = None) -> CoefficientState:
    """Quasi-stationary trapped coefficients: a = a_c, b = 0,
    c = [1 - exp(-i (1-q) hbar a_c t / m)] / (1-q)."""
    if a_c is None:
        a_c = harmonic_ac(params)
    q, hbar, m = params.q, params.hbar, params.m
    if abs(q - 1.0) < Q_ONE_EPS:
        c = 1j * hbar * a_c * t / m
    else:
        c = (1.0 - cmath.exp(-1j * (1.0 - q) * hbar * a_c * t / m)) / (1.0 - q)
    return CoefficientState(t=t, a=complex(a_c), b=0j, c=c)


def harmonic_quasistationary(t: float, x: float, params: ModelParams,
                             a_c: float | None = None) -> complex:
    """Quasi-stationary solution of the trapped equation,

        psi = [exp(-i (1-q) hbar a_c t / m) - (1-q) a_c x^2]^(1/(1-q)).

    At q -> 1 this is the oscillator ground state
    exp(-i w t/2) exp(-m w x^2 / 2 hbar), w = sqrt(K/m).  Its norm has
    finite-time singularities at +-t_c = pi m / ((q-1) hbar a_c).
    """
    state = harmonic_quasistationary_coeffs(t, params, a_c)
    return eval_ansatz(state, params.q, x)


def harmonic_tc(params: ModelParams, a_c: float | None = None) -> float:
    """Norm singularity time t_c = pi m / ((q-1) hbar a_c); infinite at q = 1."""
    if a_c is None:
        a_c = harmonic_ac(params)
    if abs(params.q - 1.0) < Q_ONE_EPS:
        return math.inf
    return math.pi * params.m / (abs(params.q - 1.0) * params.hbar * a_c)


# ---------------------------------------------------------------------------
# Family objects: a uniform handle for residual, norm and profile machinery
# ---------------------------------------------------------------------------

class SolutionFamily:
    """Common protocol of the solution families.

    value / abs2 evaluate psi and |psi|^2 pointwise.  Families built on
    the q-Gaussian ansatz also expose their coefficient trajectory and its
    exact time derivative, which gives residual checks analytic
    space-time derivatives with no finite differencing.
    """

    def effective_q(self, params: ModelParams) -> float:
        return params.q

    def coefficients(self, params: ModelParams, t: float) -> CoefficientState | None:
        return None

    def coefficient_rates(self, params: ModelParams,
                          t: float) -> tuple[complex, complex, complex] | None:
        return None

    def value(self, params: ModelParams, x: float, t: float) -> complex:
        state = self.coefficients(params, t)
        if state is None:
            raise NotImplementedError
        return eval_ansatz(state, self.effective_q(params), x)

    def abs2(self, params: ModelParams, x: float, t: float) -> float:
        state = self.coefficients(params, t)
        if state is None:
            return abs(self.value(params, x, t)) ** 2
        return abs2_from_state(state, self.effective_q(params), x)


@dataclass(frozen=True)
class FreeQGaussian(SolutionFamily):
    """Generic free packet, parameterized by its integration constants."""

    constants: PacketConstants

    @classmethod
    def from_initial(cls, a0: complex, b0: complex, c0: complex,
                     q: float) -> "FreeQGaussian":
        return cls(constants_from_initial(a0, b0, c0, q))

    def coefficients(self, params, t):
        return free_coeffs(t, self.constants, params)

    def coefficient_rates(self, params, t):
        return free_coeff_rates(t, self.constants, params)


@dataclass(frozen=True)
class QPlaneWave(SolutionFamily):
    """Soliton-like q-plane wave; a = 0 coefficient branch."""

    mode: PlaneWaveMode

    @classmethod
    def from_k(cls, k: float, params: ModelParams) -> "QPlaneWave":
        return cls(plane_wave_mode(k, params))

    def coefficients(self, params, t):
        return plane_wave_coeffs(self.mode.k, t, params)

    def coefficient_rates(self, params, t):
        w = params.hbar * self.mode.k ** 2 / (2.0 * params.m)
        return 0j, 0j, 1j * w


@dataclass(frozen=True)
class SingularPacket(SolutionFamily):
    """a = 0 packet with real slope b_c; norm diverges at t = -t0."""

    b_c: float
    t0: float

    def coefficients(self, params, t):
        return singular_packet_coeffs(self.b_c, self.t0, t, params)

    def coefficient_rates(self, params, t):
        return 0j, 0j, -1j * params.hbar * self.b_c ** 2 / (2.0 * params.m)


@dataclass(frozen=True)
class PulsatingQ3(SolutionFamily):
    """q = 3 family whose |psi|^2 pulsates with period pi in
    tbar = hbar a_c t / m (for real a_c); stationary when c_1 = 0."""

    a_c: complex
    b_c: complex
    c_1: complex

    def effective_q(self, params):
        return 3.0

    def coefficients(self, params, t):
        return q3_coeffs(self.a_c, self.b_c, self.c_1, t, params)

    def coefficient_rates(self, params, t):
        rate = 2j * params.hbar * self.a_c / params.m
        dc = self.c_1 * rate * cmath.exp(rate * t)
        return 0j, 0j, dc

    def value(self, params, x, t):
        return q3_pulsating(self.a_c, self.b_c, self.c_1, t, x, params)


@dataclass(frozen=True)
class Frozen(SolutionFamily):
    """Time-independent profile (b x + i c)^(1/(2-q)); outside the ansatz."""

    b: float
    c: float

    def __post_init__(self):
        if self.b == 0 or self.c == 0:
            raise DegenerateInputError("frozen solutions need b != 0 and c != 0")

    def value(self, params, x, t):
        return frozen_psi(self.b, self.c, params.q, x)

    def abs2(self, params, x, t):
        if abs(params.q - 2.0) < 1e-12:
            raise DomainError("frozen solutions need q != 2")
        return (self.b ** 2 * x ** 2 + self.c ** 2) ** (1.0 / (2.0 - params.q))


@dataclass(frozen=True)
class HarmonicQuasiStationary(SolutionFamily):
    """Quasi-stationary packet in the harmonic trap.  a_c = None derives
    the fixed point from the params passed to each call."""

    a_c: float | None = None

    def _ac(self, params):
        return self.a_c if self.a_c is not None else harmonic_ac(params)

    def coefficients(self, params, t):
        return harmonic_quasistationary_coeffs(t, params, self._ac(params))

    def coefficient_rates(self, params, t):
        q, hbar, m = params.q, params.hbar, params.m
        a_c = self._ac(params)
        dc = (1j * hbar * a_c / m) * cmath.exp(-1j * (1.0 - q) * hbar * a_c * t / m)
        return 0j, 0j, dc


@dataclass(frozen=True)
class GaussianLimit(SolutionFamily):
    """q = 1 Gaussian packet of the linear Schrodinger equation."""

    k0: float
    alpha: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError("alpha must be positive")

    def effective_q(self, params):
        return 1.0

    def value(self, params, x, t):
        return gaussian_limit_psi(self.k0, self.alpha, t, x, params)

    def _d(self, params, t):
        return complex(self.alpha, 2.0 * params.hbar * t / params.m)

    def coefficients(self, params, t):
        hbar, m = params.hbar, params.m
        d = self._d(params, t)
        v = hbar * self.k0 / m
        theta = 0.5 * math.atan2(2.0 * hbar * t / m, self.alpha)
        a = 1.0 / d
        b = -1j * self.k0 - 2.0 * v * t / d
        c = (v * t) ** 2 / d \
            + 1j * (theta + hbar * self.k0 ** 2 * t / (2.0 * m)) \
            + 0.5 * math.log(abs(d)) - 0.25 * math.log(2.0 * self.alpha / math.pi)
        return CoefficientState(t=t, a=a, b=b, c=c)

    def coefficient_rates(self, params, t):
        hbar, m = params.hbar, params.m
        d = self._d(params, t)
        dd = 2j * hbar / m
        v = hbar * self.k0 / m
        da = -dd / (d * d)
        db = -2.0 * v / d + 2.0 * v * t * dd / (d * d)
        dc = dd / (2.0 * d) + 1j * hbar * self.k0 ** 2 / (2.0 * m) \
            + 2.0 * v * v * t / d - (v * t) ** 2 * dd / (d * d)
        return da, db, dc

    def abs2(self, params, x, t):
        d = self._d(params, t)
        vt = params.hbar * self.k0 * t / params.m
        d2 = abs(d) ** 2
        return math.sqrt(2.0 * self.alpha / math.pi) / abs(d) \
            * math.exp(-2.0 * self.alpha * (x - vt) ** 2 / d2)
