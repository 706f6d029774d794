"""System configuration and the Rayleigh-fading channel power-gain model.

All quantities are linear (watts, metres, linear SNR). dB conversion lives in
the CLI layer only.
"""

import dataclasses
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError


def mean_gain(distance_m, pathloss_const, pathloss_exp):
    """Mean channel power gain ``L_c * d**(-e)``."""
    for name, v in (("distance_m", distance_m), ("pathloss_const", pathloss_const),
                    ("pathloss_exp", pathloss_exp)):
        if not (math.isfinite(v) and v > 0):
            raise ConfigError(f"{name} must be positive and finite, got {v!r}")
    return pathloss_const * distance_m ** (-pathloss_exp)


def db_to_linear(db):
    return 10.0 ** (db / 10.0)


def linear_to_db(x):
    return 10.0 * math.log10(x)


@dataclass(frozen=True)
class SystemConfig:
    total_power_watts: float = 1e-5
    noise_power_watts: float = 1e-12
    alpha: float = 0.5
    d1_m: float = 50.0
    d2_m: float = 100.0
    pathloss_const: float = 1.0
    pathloss_exp: float = 3.0
    gamma_th: float = 1.0
    target_secrecy_rate_1: float = 0.1
    target_secrecy_rate_2: float = 0.1
    # default sensitivity for the proposed RI model; not used by the channel itself
    zeta: float = 1e-10
    lambda1: float = field(init=False)
    lambda2: float = field(init=False)

    def __post_init__(self):
        for name in ("total_power_watts", "noise_power_watts", "d1_m", "d2_m",
                     "pathloss_const", "pathloss_exp", "gamma_th"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ConfigError(f"{name} must be positive and finite, got {v!r}")
        if not 0.0 < self.alpha < 1.0:
            raise ConfigError("alpha must lie in (0,1)")
        for name in ("target_secrecy_rate_1", "target_secrecy_rate_2", "zeta"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ConfigError(f"{name} must be non-negative and finite, got {v!r}")
        object.__setattr__(self, "lambda1",
                           mean_gain(self.d1_m, self.pathloss_const, self.pathloss_exp))
        object.__setattr__(self, "lambda2",
                           mean_gain(self.d2_m, self.pathloss_const, self.pathloss_exp))

    @property
    def transmit_snr(self):
        return self.total_power_watts / self.noise_power_watts

    @property
    def received_snr(self):
        """Mean received SNR at the weak user, ``rho_t * lambda2``."""
        return self.transmit_snr * self.lambda2

    @property
    def pi1(self):
        return 2.0 ** self.target_secrecy_rate_1

    @property
    def pi2(self):
        return 2.0 ** self.target_secrecy_rate_2

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def with_transmit_snr(self, snr):
        """Copy with ``total_power_watts`` set so that ``transmit_snr == snr``."""
        return self.replace(total_power_watts=snr * self.noise_power_watts)

    def with_received_snr(self, snr):
        return self.with_transmit_snr(snr / self.lambda2)

    def with_lambda1(self, lam1):
        """Copy whose d1 is moved so the strong user's mean gain equals ``lam1``."""
        d1 = (self.pathloss_const / lam1) ** (1.0 / self.pathloss_exp)
        return self.replace(d1_m=d1)


@dataclass(frozen=True)
class ChannelSample:
    """Channel power gains |h1|^2, |h2|^2; scalars or equally shaped arrays."""

    g1: float
    g2: float


def gains_from_uniforms(u1, u2, config):
    """Inverse-CDF exponential draws; ``u`` must lie in (0, 1]."""
    return ChannelSample(-config.lambda1 * np.log(u1), -config.lambda2 * np.log(u2))


def sample_channel(config, rng):
    """Draw one independent pair of exponential gains from ``rng``."""
    u = 1.0 - rng.random(2)
    s = gains_from_uniforms(u[0], u[1], config)
    return ChannelSample(float(s.g1), float(s.g2))


def sample_channels(config, rng, n):
    """Vectorised version of :func:`sample_channel` returning ``n`` samples.

    Uniforms are consumed interleaved (g1, g2, g1, g2, ...) so the first ``k``
    samples do not depend on ``n``.
    """
    u = 1.0 - rng.random((n, 2))
    return gains_from_uniforms(u[:, 0], u[:, 1], config)
