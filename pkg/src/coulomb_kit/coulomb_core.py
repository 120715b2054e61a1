"""Closed-form Coulomb scattering quantities.

For a particle of reduced mass mu scattering off the potential -kappa/r
(kappa > 0 attractive, kappa < 0 repulsive) at energy E > 0, the problem
is fixed by two numbers:

    k    = sqrt(2 mu E) / hbar          wavenumber,
    beta = kappa / (hbar v)             dimensionless Coulomb strength,

with v = sqrt(2 E / mu) the incident velocity.  The l-th partial wave is
scattered by the unimodular S-matrix element

    S_l = exp(2 i delta_l) = Gamma(l+1 - i beta) / Gamma(l+1 + i beta),

and the full amplitude has the closed form

    f(theta) = Gamma(1 - i beta) / (i Gamma(i beta))
               * exp(i beta ln sin^2(theta/2)) / (2 k sin^2(theta/2)),

valid for every theta except the forward direction, with the Rutherford
cross section |f|^2 = beta^2 / (4 k^2 sin^4(theta/2)).

The same amplitude can be reached through the auxiliary function

    G(x) = -2 S_0 exp[i beta ln((1-x)/2)] + S_0,        x = cos(theta) < 1,

which satisfies (1-x) G'(x) + i beta G(x) = i beta S_0 with boundary value
G(-1) = -S_0.  Its derivative

    g(x) = G'(x) = 2 i beta S_0 exp[i beta ln((1-x)/2)] / (1-x)

is the value the (divergent) partial-wave sum sum_l (2l+1) S_l P_l(x)
regularizes to, and f(theta) = g(cos theta) / (2ik).  The numerical
realization of that sum lives in :mod:`coulomb_kit.summation`; this module
is the analytic reference it is checked against.

All functions are pure; beta = 0 short-circuits to the exact free-particle
values (S_l = 1, f = 0) instead of probing the Gamma pole at 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .special_functions import gamma_ratio, log_gamma

# amplitude provenance tags
CLOSED_FORM = "closed_form"
REGULARIZED_SERIES = "regularized_series"

# angles closer to the forward direction than this are rejected, not clamped
MIN_THETA = 1e-9

# slack for theta == pi given in decimal (e.g. 3.14159265359 on the CLI)
_THETA_MAX_SLACK = 1e-9


@dataclass(frozen=True)
class PhysicalParams:
    """Wavenumber k > 0 and dimensionless Coulomb strength beta.

    beta > 0 is attractive, beta < 0 repulsive, beta = 0 free.
    """

    k: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.k) and self.k > 0.0):
            raise DomainError(f"wavenumber k must be finite and > 0, got {self.k!r}")
        if not math.isfinite(self.beta):
            raise DomainError(f"beta must be finite, got {self.beta!r}")


@dataclass(frozen=True)
class PartialWave:
    """One partial wave: index l, S-matrix element S, phase shift delta.

    |S| = 1 and S = exp(2 i delta), with delta reported as the principal
    value in (-pi, pi].
    """

    l: int
    S: complex
    delta: float


@dataclass(frozen=True)
class AmplitudeResult:
    """Scattering amplitude f at angle theta (units of length).

    method is either CLOSED_FORM or REGULARIZED_SERIES; error_estimate is
    an absolute uncertainty on |f| (zero for the closed form, which is
    exact up to rounding).
    """

    theta: float
    f: complex
    method: str
    error_estimate: float

    def __post_init__(self):
        if not self.theta > 0.0:
            raise DomainError(f"theta must be strictly positive, got {self.theta!r}")


def params_from_physical(mu: float, kappa: float, E: float, hbar: float = 1.0) -> PhysicalParams:
    """Derive (k, beta) from reduced mass, coupling, energy and hbar.

    k = sqrt(2 mu E) / hbar, v = sqrt(2 E / mu), beta = kappa / (hbar v).

    Raises
    ------
    DomainError
        If mu, E or hbar is not strictly positive (or kappa not finite).
    """
    for name, value in (("mu", mu), ("E", E), ("hbar", hbar)):
        if not (math.isfinite(value) and value > 0.0):
            raise DomainError(f"{name} must be finite and > 0, got {value!r}")
    if not math.isfinite(kappa):
        raise DomainError(f"kappa must be finite, got {kappa!r}")
    k = math.sqrt(2.0 * mu * E) / hbar
    v = math.sqrt(2.0 * E / mu)
    return PhysicalParams(k=k, beta=kappa / (hbar * v))


def _principal_angle(angle: float) -> float:
    """Reduce an angle to the principal interval (-pi, pi]."""
    wrapped = math.remainder(angle, math.tau)
    return math.pi if wrapped == -math.pi else wrapped


def s_matrix(l: int, p: PhysicalParams) -> PartialWave:
    """S-matrix element and phase shift of the l-th partial wave.

    S_l = Gamma(l+1 - i beta) / Gamma(l+1 + i beta) evaluated through the
    log-domain ratio, so |S_l| = 1 to machine precision.  The phase shift
    delta_l = arg Gamma(l+1 - i beta) is reduced to (-pi, pi]; reducing by
    full turns leaves exp(2 i delta_l) = S_l intact.
    """
    l = int(l)
    if l < 0:
        raise DomainError(f"partial-wave index must be >= 0, got l={l}")
    beta = p.beta
    if beta == 0.0:
        return PartialWave(l=l, S=1.0 + 0.0j, delta=0.0)
    a = complex(l + 1, -beta)
    S = gamma_ratio(a, a.conjugate())
    delta = _principal_angle(log_gamma(a).imag)
    return PartialWave(l=l, S=S, delta=delta)


def _validate_cosine(x: float) -> float:
    x = float(x)
    if not -1.0 <= x < 1.0:
        raise DomainError(
            f"cos(theta) must lie in [-1, 1), got {x!r}; "
            "x = 1 is the forward-direction branch point"
        )
    return x


def closed_auxiliary_sum(x: float, p: PhysicalParams) -> complex:
    """Closed form of the auxiliary series sum_l S_l [P_{l+1}(x) - P_{l-1}(x)].

    G(x) = -2 S_0 exp[i beta ln((1-x)/2)] + S_0 for x in [-1, 1); in
    particular G(-1) = -S_0, and G = -1 identically for beta = 0.
    """
    x = _validate_cosine(x)
    beta = p.beta
    if beta == 0.0:
        return -1.0 + 0.0j
    S0 = s_matrix(0, p).S
    phase = cmath.exp(1j * beta * math.log((1.0 - x) / 2.0))
    return S0 * (1.0 - 2.0 * phase)


def closed_partial_wave_sum(x: float, p: PhysicalParams) -> complex:
    """Closed form of the regularized sum g(x) = sum_l (2l+1) S_l P_l(x).

    g is the derivative of the auxiliary function:

        g(x) = 2 i beta S_0 exp[i beta ln((1-x)/2)] / (1-x),

    and the scattering amplitude is g(cos theta) / (2ik).  Identically 0
    for beta = 0 away from x = 1.
    """
    x = _validate_cosine(x)
    beta = p.beta
    if beta == 0.0:
        return 0.0 + 0.0j
    S0 = s_matrix(0, p).S
    phase = cmath.exp(1j * beta * math.log((1.0 - x) / 2.0))
    return 2j * beta * S0 * phase / (1.0 - x)


def _validate_theta(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta):
        raise DomainError(f"theta must be finite, got {theta!r}")
    if theta < MIN_THETA:
        raise DomainError(
            f"theta = {theta!r} is too close to the forward direction; "
            f"the amplitude is undefined at theta = 0 (minimum {MIN_THETA:g})"
        )
    if theta > math.pi + _THETA_MAX_SLACK:
        raise DomainError(f"theta must not exceed pi, got {theta!r}")
    return theta


def closed_amplitude(theta: float, p: PhysicalParams) -> AmplitudeResult:
    """Closed-form Coulomb scattering amplitude at angle theta in (0, pi].

    f(theta) = Gamma(1 - i beta)/(i Gamma(i beta))
               * exp(i beta ln sin^2(theta/2)) / (2 k sin^2(theta/2)),

    with the Gamma ratio formed in log space.  The beta -> 0 limit is
    taken exactly: 1/Gamma(i beta) vanishes, so f = 0.

    Raises
    ------
    DomainError
        If theta is within 1e-9 of the forward direction, or beyond pi.
    """
    theta = _validate_theta(theta)
    beta = p.beta
    if beta == 0.0:
        return AmplitudeResult(theta=theta, f=0.0 + 0.0j, method=CLOSED_FORM, error_estimate=0.0)
    sin_half_sq = math.sin(theta / 2.0) ** 2
    ratio = gamma_ratio(complex(1.0, -beta), complex(0.0, beta))
    f = (ratio / 1j) * cmath.exp(1j * beta * math.log(sin_half_sq)) / (2.0 * p.k * sin_half_sq)
    return AmplitudeResult(theta=theta, f=f, method=CLOSED_FORM, error_estimate=0.0)


def differential_cross_section(theta: float, p: PhysicalParams) -> float:
    """|f(theta)|^2, the Rutherford differential cross section.

    Analytically equal to beta^2 / (4 k^2 sin^4(theta/2)).
    """
    return abs(closed_amplitude(theta, p).f) ** 2


def ode_residual(x: float, p: PhysicalParams, h: float) -> float:
    """Finite-difference residual of (1-x) G'(x) + i beta G(x) = i beta S_0.

    G' is replaced by the second-order central difference with step h, so
    the residual is (1-x) h^2 |G'''(x)| / 6 + O(h^4): it vanishes like
    h^2 and is exactly zero for beta = 0 (G constant).

    Raises
    ------
    DomainError
        If h <= 0 or the stencil [x-h, x+h] leaves (-1, 1).
    """
    x = float(x)
    h = float(h)
    if not h > 0.0:
        raise DomainError(f"step h must be > 0, got {h!r}")
    if not (-1.0 < x - h and x + h < 1.0):
        raise DomainError(
            f"stencil [{x - h!r}, {x + h!r}] must stay inside (-1, 1)"
        )
    beta = p.beta
    g_plus = closed_auxiliary_sum(x + h, p)
    g_minus = closed_auxiliary_sum(x - h, p)
    g_mid = closed_auxiliary_sum(x, p)
    S0 = s_matrix(0, p).S
    derivative = (g_plus - g_minus) / (2.0 * h)
    return abs((1.0 - x) * derivative + 1j * beta * g_mid - 1j * beta * S0)
