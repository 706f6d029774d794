"""Per-stage SINRs, rates and secrecy rates under decoding order D2 = [2,1;1,2].

Each user first decodes the other user's message (stage 1) and then its own
(stage 2). The residual interference (RI) left over by stage 1 is set by one
of the models below. Every function accepts scalars or numpy arrays.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ConsistencyError


@dataclass(frozen=True)
class Constant:
    gamma_cap_21: float = 0.0
    gamma_cap_12: float = 0.0

    def __post_init__(self):
        if self.gamma_cap_21 < 0 or self.gamma_cap_12 < 0:
            raise ConfigError("constant RI values must be non-negative")

    @property
    def label(self):
        return f"constant:{self.gamma_cap_21:g}:{self.gamma_cap_12:g}"


@dataclass(frozen=True)
class Fixed:
    beta: float

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ConfigError("beta must lie in [0,1]")

    @property
    def label(self):
        return f"fixed:{self.beta:g}"


@dataclass(frozen=True)
class Proposed:
    """SINR-gap model: RI = (gamma_th - stage-1 SINR) * zeta when stage 1 fails."""

    zeta: float

    def __post_init__(self):
        if not self.zeta >= 0:
            raise ConfigError("zeta must be non-negative")

    @property
    def label(self):
        return f"proposed:{self.zeta:g}"


@dataclass(frozen=True)
class PerfectSic:
    @property
    def label(self):
        return "perfect"


RiModel = Constant | Fixed | Proposed | PerfectSic


def parse_model(text, default_zeta=None):
    """Parse ``proposed[:zeta]``, ``fixed:beta``, ``constant:G21[:G12]``, ``perfect``."""
    parts = text.strip().lower().split(":")
    kind, args = parts[0], parts[1:]
    try:
        vals = [float(a) for a in args]
    except ValueError:
        raise ConfigError(f"bad model parameters in {text!r}") from None
    if kind == "perfect" and not vals:
        return PerfectSic()
    if kind == "proposed" and len(vals) <= 1:
        if vals:
            return Proposed(vals[0])
        if default_zeta is None:
            raise ConfigError("proposed model needs a zeta value")
        return Proposed(default_zeta)
    if kind == "fixed" and len(vals) == 1:
        return Fixed(vals[0])
    if kind == "constant" and len(vals) in (1, 2):
        return Constant(vals[0], vals[-1])
    raise ConfigError(f"unknown RI model {text!r}")


@dataclass(frozen=True)
class SinrReport:
    gamma_21: np.ndarray
    gamma_12: np.ndarray
    gamma_11: np.ndarray
    gamma_22: np.ndarray
    sic_perfect_at_u1: np.ndarray
    sic_perfect_at_u2: np.ndarray
    rate_11: np.ndarray
    rate_22: np.ndarray
    rate_21: np.ndarray
    rate_12: np.ndarray
    secrecy_rate_1: np.ndarray
    secrecy_rate_2: np.ndarray


def stage1_sinrs(sample, config):
    """SINRs of each user decoding the *other* user's message."""
    a = config.alpha
    inv_snr = 1.0 / config.transmit_snr
    g1, g2 = sample.g1, sample.g2
    gamma_21 = (1 - a) * g1 / (a * g1 + inv_snr)
    gamma_12 = a * g2 / ((1 - a) * g2 + inv_snr)
    return gamma_21, gamma_12


def _stage2(own_power, gain, stage1, other_power, config, model, cap):
    # All models share the form own/(RI + 1/rho_t) so that zero RI is
    # bit-identical across models.
    inv_snr = 1.0 / config.transmit_snr
    signal = own_power * gain
    if isinstance(model, PerfectSic):
        ri = np.zeros_like(np.asarray(gain, dtype=float))
        perfect = np.ones_like(ri, dtype=bool)
    elif isinstance(model, Constant):
        ri = np.full_like(np.asarray(gain, dtype=float), cap(model))
        perfect = np.full(ri.shape, cap(model) == 0)
    elif isinstance(model, Fixed):
        ri = np.asarray(model.beta * other_power * gain, dtype=float)
        perfect = np.full(ri.shape, model.beta == 0)
    elif isinstance(model, Proposed):
        perfect = np.asarray(stage1 >= config.gamma_th)
        gap = np.where(perfect, 0.0, config.gamma_th - stage1)
        if np.any(gap < 0):
            raise ConsistencyError("negative SINR gap on the imperfect branch")
        ri = gap * model.zeta
        ri = np.where(perfect, 0.0, ri)
    else:
        raise TypeError(f"unknown RI model {model!r}")
    gamma = signal / (ri + inv_snr)
    if np.ndim(gamma) == 0:
        return float(gamma), bool(perfect)
    return gamma, perfect


def stage2_sinr_u1(sample, config, model):
    """SINR of the strong user decoding its own message, and the SIC-perfect flag."""
    g21, _ = stage1_sinrs(sample, config)
    a = config.alpha
    return _stage2(a, sample.g1, g21, 1 - a, config, model,
                   lambda m: m.gamma_cap_21)


def stage2_sinr_u2(sample, config, model):
    """SINR of the weak user decoding its own message, and the SIC-perfect flag."""
    _, g12 = stage1_sinrs(sample, config)
    a = config.alpha
    return _stage2(1 - a, sample.g2, g12, a, config, model,
                   lambda m: m.gamma_cap_12)


def full_report(sample, config, model):
    g21, g12 = stage1_sinrs(sample, config)
    g11, p1 = stage2_sinr_u1(sample, config, model)
    g22, p2 = stage2_sinr_u2(sample, config, model)
    r11, r22 = np.log2(1 + g11), np.log2(1 + g22)
    r21, r12 = np.log2(1 + g21), np.log2(1 + g12)
    return SinrReport(
        gamma_21=g21, gamma_12=g12, gamma_11=g11, gamma_22=g22,
        sic_perfect_at_u1=p1, sic_perfect_at_u2=p2,
        rate_11=r11, rate_22=r22, rate_21=r21, rate_12=r12,
        secrecy_rate_1=r11 - r12, secrecy_rate_2=r22 - r21,
    )
