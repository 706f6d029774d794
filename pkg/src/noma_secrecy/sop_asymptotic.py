"""High-SNR closed-form SOP approximations.

Replacing K = (other power) * y * rho_t + 1 by its leading term makes every
quadratic coefficient proportional to y, so the outage window no longer
depends on the interfering gain and the averaging integral disappears.
"""

import math
from dataclasses import dataclass

from .errors import ConsistencyError
from .sinr_models import PerfectSic, Proposed
from .sop_exact import (QuadCoeffs, SopEstimate, imperfect_sic_probability_u1,
                        imperfect_sic_probability_u2, root_window)


@dataclass(frozen=True)
class AsymptoticCoeffs:
    a_hat: float
    b_hat: float
    c_hat: float
    w_hat: float


def _asy_coeffs(own, other, pi, gth, zeta, rho):
    pm1 = pi - 1
    a = own**2 * rho**3 * other
    b = ((own + pm1 * other * zeta * rho - pm1 * gth * own * zeta * rho - pm1 * own)
         * other * rho**2
         + (other * zeta * rho - own * gth * zeta * rho - own) * pi * own * rho**2)
    c = ((-pm1 * gth * zeta * rho - pm1) * other * rho
         - pi * own * gth * zeta * rho**2 - pi * own * rho)
    if not (a > 0 and c < 0):
        raise ConsistencyError("asymptotic coefficients violate a > 0, c < 0")
    w = root_window(QuadCoeffs(a, b, c, 0.0))[1]
    return AsymptoticCoeffs(a, b, c, w)


def asymptotic_coeffs_u1(config, zeta):
    return _asy_coeffs(config.alpha, 1 - config.alpha, config.pi1, config.gamma_th,
                       zeta, config.transmit_snr)


def asymptotic_coeffs_u2(config, zeta):
    return _asy_coeffs(1 - config.alpha, config.alpha, config.pi2, config.gamma_th,
                       zeta, config.transmit_snr)


def sop_asymptotic_imperfect_u1(config, zeta):
    w = asymptotic_coeffs_u1(config, zeta).w_hat
    return -math.expm1(-w / config.lambda1)


def sop_asymptotic_imperfect_u2(config, zeta):
    w = asymptotic_coeffs_u2(config, zeta).w_hat
    return -math.expm1(-w / config.lambda2)


def sop_asymptotic_perfect_u1(config):
    # gamma_12 saturates at alpha/(1-alpha), so 1 + gamma_12 -> 1/(1-alpha)
    a, rho = config.alpha, config.transmit_snr
    w = max(config.pi1 / (1 - a) - 1, 0.0) / (a * rho)
    return -math.expm1(-w / config.lambda1)


def sop_asymptotic_perfect_u2(config):
    a, rho = config.alpha, config.transmit_snr
    w = max(config.pi2 / a - 1, 0.0) / ((1 - a) * rho)
    return -math.expm1(-w / config.lambda2)


def _mix(p_imp, imperfect, perfect):
    if p_imp == 1.0:
        return imperfect
    return p_imp * imperfect + (1 - p_imp) * perfect


def sop_asymptotic(config, zeta=None):
    """High-SNR (S1, S2) for the proposed model; case weights are kept exact."""
    if zeta is None:
        zeta = config.zeta
    model = Proposed(zeta)
    s1 = _mix(imperfect_sic_probability_u1(config),
              sop_asymptotic_imperfect_u1(config, zeta), sop_asymptotic_perfect_u1(config))
    s2 = _mix(imperfect_sic_probability_u2(config),
              sop_asymptotic_imperfect_u2(config, zeta), sop_asymptotic_perfect_u2(config))
    return (SopEstimate(1, min(max(s1, 0.0), 1.0), "asymptotic", model),
            SopEstimate(2, min(max(s2, 0.0), 1.0), "asymptotic", model))


def sop_asymptotic_perfect(config):
    model = PerfectSic()
    return (SopEstimate(1, sop_asymptotic_perfect_u1(config), "asymptotic", model),
            SopEstimate(2, sop_asymptotic_perfect_u2(config), "asymptotic", model))
