"""Exact secrecy outage probability for the proposed RI model.

Each user's SOP is a mixture of an imperfect-SIC term and a perfect-SIC term
weighted by the probability that stage-1 decoding falls short of gamma_th.
The imperfect term reduces, for a fixed interfering gain y, to a quadratic
inequality in the user's own gain; integrating the exponential CDF at the
positive root against the density of y gives the SOP.
"""

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import integrate

from .errors import ConsistencyError, NumericalError
from .sinr_models import PerfectSic, Proposed

EPSREL = 1e-8
EPSABS = 1e-12
LIMIT = 10_000


@dataclass(frozen=True)
class QuadCoeffs:
    a: float
    b: float
    c: float
    k: float


@dataclass(frozen=True)
class SopEstimate:
    user: int
    value: float
    method: str
    model: object
    std_error: Optional[float] = None
    samples: Optional[int] = None

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ConsistencyError(f"SOP {self.value} outside [0,1]")
        if (self.std_error is not None) != (self.method == "monte-carlo"):
            raise ConsistencyError("std_error must be present iff method is monte-carlo")


def _imperfect_probability(gth, z, mean):
    # z <= 0 only at the boundary alpha == 1/(1+gamma_th); take the limit value 1
    if z <= 0:
        return 1.0
    return -math.expm1(-gth / (z * mean))


def imperfect_sic_probability_u1(config):
    """P{gamma_21 < gamma_th}: strong user's stage-1 decoding falls short."""
    a, gth = config.alpha, config.gamma_th
    if a > 1.0 / (1.0 + gth):
        return 1.0
    z1 = ((1 - a) - a * gth) * config.transmit_snr
    return _imperfect_probability(gth, z1, config.lambda1)


def imperfect_sic_probability_u2(config):
    """P{gamma_12 < gamma_th}: weak user's stage-1 decoding falls short."""
    a, gth = config.alpha, config.gamma_th
    if a < gth / (1.0 + gth):
        return 1.0
    z2 = (a - (1 - a) * gth) * config.transmit_snr
    return _imperfect_probability(gth, z2, config.lambda2)


def _coeffs(own, other, y, pi, gth, zeta, rho):
    k = other * y * rho + 1
    pm1 = pi - 1
    a = own**2 * rho**2 * k
    b = ((own + pm1 * other * zeta * rho - pm1 * gth * own * zeta * rho - pm1 * own) * k * rho
         + (other * zeta * rho - own * gth * zeta * rho - own) * pi * y * own * rho**2)
    c = ((-pm1 * gth * zeta * rho - pm1) * k
         - pi * y * own * gth * zeta * rho**2 - pi * y * own * rho)
    return a, b, c, k


def _check(a, c):
    if np.any(a <= 0) or np.any(c > 0):
        raise ConsistencyError("quadratic coefficients violate a > 0, c <= 0")


def quad_coeffs_u1(y, config, zeta):
    """Coefficients of A x^2 + B x + C < 0 in x = |h1|^2 given |h2|^2 = y."""
    a, b, c, k = _coeffs(config.alpha, 1 - config.alpha, y, config.pi1,
                         config.gamma_th, zeta, config.transmit_snr)
    _check(a, c)
    return QuadCoeffs(a, b, c, k)


def quad_coeffs_u2(y, config, zeta):
    """Coefficients of the weak user's quadratic in x = |h2|^2 given |h1|^2 = y."""
    a, b, c, k = _coeffs(1 - config.alpha, config.alpha, y, config.pi2,
                         config.gamma_th, zeta, config.transmit_snr)
    _check(a, c)
    return QuadCoeffs(a, b, c, k)


def root_window(coeffs):
    """Return the roots (v, w), v <= w, of a x^2 + b x + c.

    Uses the cancellation-free form q = -(b + sign(b) sqrt(disc)) / 2.
    """
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    disc = b * b - 4 * a * c
    if np.any(disc < 0):
        raise ConsistencyError("negative discriminant")
    q = -0.5 * (b + np.copysign(np.sqrt(disc), b))
    r1 = q / a
    with np.errstate(divide="ignore", invalid="ignore"):
        r2 = np.where(q != 0, c / np.where(q != 0, q, 1.0), 0.0)
    v, w = np.minimum(r1, r2), np.maximum(r1, r2)
    if np.ndim(v) == 0:
        return float(v), float(w)
    return v, w


def integrate_unit(func, what):
    """Adaptive quadrature of a bounded integrand over u in [0, 1]."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, err = integrate.quad(func, 0.0, 1.0, epsabs=EPSABS, epsrel=EPSREL,
                                      limit=LIMIT)
        except integrate.IntegrationWarning as exc:
            raise NumericalError(f"{what}: quadrature did not converge ({exc})") from None
    if not math.isfinite(val):
        raise NumericalError(f"{what}: non-finite quadrature result")
    return min(max(val, 0.0), 1.0)


def _averaged_outage(window, own_mean, other_mean, what):
    # substitute y = -other_mean * ln(u); the exponential weight becomes du
    def f(u):
        if u <= 0.0:
            y = math.inf
        else:
            y = -other_mean * math.log(u)
        return -math.expm1(-window(y) / own_mean)
    return integrate_unit(f, what)


def _window_imperfect(coeff_fn, config, zeta):
    def w(y):
        if math.isinf(y):
            return _asymptotic_window(coeff_fn, config, zeta)
        return root_window(coeff_fn(y, config, zeta))[1]
    return w


def _asymptotic_window(coeff_fn, config, zeta):
    # y -> infinity limit; the coefficients are affine in y, so divide by y
    big = coeff_fn(1.0, config, zeta)
    zero = coeff_fn(0.0, config, zeta)
    slope = QuadCoeffs(big.a - zero.a, big.b - zero.b, big.c - zero.c, 0.0)
    return root_window(slope)[1]


def sop_imperfect_u1(config, zeta):
    return _averaged_outage(_window_imperfect(quad_coeffs_u1, config, zeta),
                            config.lambda1, config.lambda2, "S1 imperfect")


def sop_imperfect_u2(config, zeta):
    return _averaged_outage(_window_imperfect(quad_coeffs_u2, config, zeta),
                            config.lambda2, config.lambda1, "S2 imperfect")


def perfect_window_u1(y, config):
    """Largest |h1|^2 in outage under perfect SIC, given |h2|^2 = y."""
    a, rho = config.alpha, config.transmit_snr
    if math.isinf(y):
        gamma_12 = a / (1 - a)
    else:
        gamma_12 = a * y / ((1 - a) * y + 1 / rho)
    return max(config.pi1 * (1 + gamma_12) - 1, 0.0) / (a * rho)


def perfect_window_u2(y, config):
    """Largest |h2|^2 in outage under perfect SIC, given |h1|^2 = y."""
    a, rho = config.alpha, config.transmit_snr
    if math.isinf(y):
        gamma_21 = (1 - a) / a
    else:
        gamma_21 = (1 - a) * y / (a * y + 1 / rho)
    return max(config.pi2 * (1 + gamma_21) - 1, 0.0) / ((1 - a) * rho)


def sop_perfect_u1(config):
    return _averaged_outage(lambda y: perfect_window_u1(y, config),
                            config.lambda1, config.lambda2, "S1 perfect")


def sop_perfect_u2(config):
    return _averaged_outage(lambda y: perfect_window_u2(y, config),
                            config.lambda2, config.lambda1, "S2 perfect")


def _mix(p_imp, imperfect, perfect):
    if p_imp == 1.0:
        return imperfect()
    return p_imp * imperfect() + (1 - p_imp) * perfect()


def sop_exact(config, zeta=None):
    """Exact (S1, S2) for the proposed model with sensitivity ``zeta``."""
    if zeta is None:
        zeta = config.zeta
    model = Proposed(zeta)
    s1 = _mix(imperfect_sic_probability_u1(config),
              lambda: sop_imperfect_u1(config, zeta), lambda: sop_perfect_u1(config))
    s2 = _mix(imperfect_sic_probability_u2(config),
              lambda: sop_imperfect_u2(config, zeta), lambda: sop_perfect_u2(config))
    return (SopEstimate(1, min(max(s1, 0.0), 1.0), "exact", model),
            SopEstimate(2, min(max(s2, 0.0), 1.0), "exact", model))


def sop_exact_perfect(config):
    """Exact (S1, S2) when SIC is always perfect."""
    model = PerfectSic()
    return (SopEstimate(1, sop_perfect_u1(config), "exact", model),
            SopEstimate(2, sop_perfect_u2(config), "exact", model))
