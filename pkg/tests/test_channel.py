import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from noma_secrecy.channel import (ChannelSample, SystemConfig, mean_gain, sample_channel,
                                  sample_channels)
from noma_secrecy.errors import ConfigError
from noma_secrecy.montecarlo import stream_generator


@pytest.mark.parametrize("d, expected", [(50, 8.0e-6), (1, 1.0), (100, 1.0e-6)])
def test_mean_gain_examples(d, expected):
    assert mean_gain(d, 1, 3) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("args", [(0, 1, 3), (-5, 1, 3), (50, 0, 3), (50, 1, -1),
                                  (math.inf, 1, 3), (math.nan, 1, 3)])
def test_mean_gain_rejects_bad_input(args):
    with pytest.raises(ConfigError):
        mean_gain(*args)


@given(st.floats(1.01, 1e4), st.floats(1.01, 1e4), st.floats(0.5, 6))
def test_mean_gain_decreasing_in_distance(d_a, d_b, e):
    lo, hi = sorted((d_a, d_b))
    if hi > lo * (1 + 1e-9):
        assert mean_gain(hi, 1, e) < mean_gain(lo, 1, e)


@given(st.floats(1.01, 1e4), st.floats(0.5, 6), st.floats(0.01, 1))
def test_mean_gain_decreasing_in_exponent(d, e, de):
    assert mean_gain(d, 1, e + de) < mean_gain(d, 1, e)


def test_default_config_values(paper_config):
    c = paper_config
    assert c.transmit_snr == pytest.approx(1e7, rel=1e-12)
    assert c.lambda1 == pytest.approx(8e-6)
    assert c.lambda2 == pytest.approx(1e-6)
    assert c.lambda1 >= c.lambda2
    assert c.pi1 == 2 ** 0.1 and c.pi2 == 2 ** 0.1
    assert c.transmit_snr == c.total_power_watts / c.noise_power_watts


@pytest.mark.parametrize("kw", [dict(alpha=0.0), dict(alpha=1.0), dict(alpha=1.2),
                                dict(d1_m=0.0), dict(noise_power_watts=-1.0),
                                dict(gamma_th=0.0), dict(target_secrecy_rate_1=-0.1)])
def test_config_invariants(kw):
    with pytest.raises(ConfigError):
        SystemConfig(**kw)


def test_config_helpers(paper_config):
    c = paper_config.with_received_snr(1e3)
    assert c.received_snr == pytest.approx(1e3)
    c = paper_config.with_lambda1(5e-6)
    assert c.lambda1 == pytest.approx(5e-6)
    assert c.lambda2 == paper_config.lambda2


def test_sample_channel_deterministic(paper_config):
    a = [sample_channel(paper_config, stream_generator(7, 0)) for _ in range(3)]
    b = [sample_channel(paper_config, stream_generator(7, 0)) for _ in range(3)]
    assert a == b
    s = a[0]
    assert isinstance(s, ChannelSample) and s.g1 >= 0 and s.g2 >= 0


def test_sample_channel_matches_vectorised_prefix(paper_config):
    one = sample_channel(paper_config, stream_generator(3, 1))
    many = sample_channels(paper_config, stream_generator(3, 1), 5)
    assert one.g1 == many.g1[0] and one.g2 == many.g2[0]


def test_exponential_moments(paper_config):
    n = 10**6
    s = sample_channels(paper_config, stream_generator(11, 0), n)
    for g, lam in ((s.g1, paper_config.lambda1), (s.g2, paper_config.lambda2)):
        assert np.all(np.isfinite(g)) and np.all(g >= 0)
        # mean: se = lam/sqrt(n); variance of exp has se ~ sqrt(8) lam^2 / sqrt(n)
        assert abs(g.mean() - lam) < 3 * lam / math.sqrt(n)
        assert abs(g.var() - lam**2) < 3 * math.sqrt(8) * lam**2 / math.sqrt(n)
    assert abs(s.g1.mean() - 8e-6) < 0.01 * 8e-6


def test_equal_means_symmetric(paper_config):
    c = paper_config.replace(d1_m=100.0)
    n = 10**6
    s = sample_channels(c, stream_generator(5, 0), n)
    p = np.mean(s.g1 > s.g2)
    assert abs(p - 0.5) < 3 * math.sqrt(0.25 / n)


def test_distinct_streams_differ(paper_config):
    a = sample_channels(paper_config, stream_generator(1, 0), 1000)
    b = sample_channels(paper_config, stream_generator(1, 1), 1000)
    assert not np.intersect1d(a.g1, b.g1).size
