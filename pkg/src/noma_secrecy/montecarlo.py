"""Monte Carlo SOP estimation with counter-based, partition-invariant sampling.

Sample ``i`` is drawn from block ``i // BLOCK_SIZE``, whose generator is keyed
only by ``(master_seed, block)``. Blocks are dealt round-robin to streams and
the per-block outage counts are integers, so the merged estimate does not
depend on how many streams (threads) were used.
"""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .channel import gains_from_uniforms
from .sinr_models import full_report, stage1_sinrs
from .sop_exact import SopEstimate

BLOCK_SIZE = 1 << 16
DEFAULT_SAMPLES = 1_000_000


def block_generator(master_seed, block):
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(block,))
    return np.random.Generator(np.random.Philox(ss))


def stream_generator(master_seed, stream_index):
    """Independent generator for ad-hoc use, e.g. with ``sample_channel``."""
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(1 << 32, stream_index))
    return np.random.Generator(np.random.Philox(ss))


def block_samples(config, master_seed, block, n):
    """First ``n`` channel samples of ``block``."""
    u = 1.0 - block_generator(master_seed, block).random((n, 2))
    return gains_from_uniforms(u[:, 0], u[:, 1], config)


def _blocks(n_samples):
    nb = -(-n_samples // BLOCK_SIZE)
    return [(b, min(BLOCK_SIZE, n_samples - b * BLOCK_SIZE)) for b in range(nb)]


def _run(count_block, n_samples, master_seed, n_streams):
    blocks = _blocks(n_samples)

    def work(stream):
        return [count_block(master_seed, b, n) for b, n in blocks[stream::n_streams]]

    if n_streams == 1:
        parts = [work(0)]
    else:
        with ThreadPoolExecutor(max_workers=n_streams) as pool:
            parts = list(pool.map(work, range(n_streams)))
    total = None
    for part in parts:
        for counts in part:
            total = counts if total is None else tuple(t + c for t, c in zip(total, counts))
    return total


def _check_args(n_samples, n_streams):
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    if n_streams < 1:
        raise ValueError("n_streams must be >= 1")


def outage_counts(config, model, n_samples, master_seed=0, n_streams=1):
    """Integer outage counts ``(k1, k2)`` over ``n_samples`` draws."""
    _check_args(n_samples, n_streams)

    def count(seed, block, n):
        r = full_report(block_samples(config, seed, block, n), config, model)
        return (int(np.count_nonzero(r.secrecy_rate_1 < config.target_secrecy_rate_1)),
                int(np.count_nonzero(r.secrecy_rate_2 < config.target_secrecy_rate_2)))

    return _run(count, n_samples, master_seed, n_streams)


def _estimate(user, k, n, model):
    p = k / n
    return SopEstimate(user, p, "monte-carlo", model,
                       std_error=math.sqrt(p * (1 - p) / n), samples=n)


def sop_monte_carlo(config, model, n_samples=DEFAULT_SAMPLES, master_seed=0, n_streams=1):
    k1, k2 = outage_counts(config, model, n_samples, master_seed, n_streams)
    return _estimate(1, k1, n_samples, model), _estimate(2, k2, n_samples, model)


def branch_occupancy(config, n_samples=DEFAULT_SAMPLES, seed=0, n_streams=1):
    """Empirical P{gamma_21 < gamma_th} and P{gamma_12 < gamma_th}."""
    _check_args(n_samples, n_streams)

    def count(s, block, n):
        g21, g12 = stage1_sinrs(block_samples(config, s, block, n), config)
        return (int(np.count_nonzero(g21 < config.gamma_th)),
                int(np.count_nonzero(g12 < config.gamma_th)))

    k1, k2 = _run(count, n_samples, seed, n_streams)
    return k1 / n_samples, k2 / n_samples
