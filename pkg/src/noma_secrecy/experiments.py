"""Config files, parameter sweeps and CSV/JSON emission."""

import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field, fields

import numpy as np

from .channel import SystemConfig, db_to_linear
from .errors import ConfigError
from .montecarlo import DEFAULT_SAMPLES, sop_monte_carlo
from .sinr_models import PerfectSic, Proposed, parse_model
from .sop_asymptotic import sop_asymptotic, sop_asymptotic_perfect
from .sop_exact import sop_exact, sop_exact_perfect

AXES = ("alpha", "transmit_snr_db", "received_snr_db", "zeta", "gamma_th",
        "target_rate_1", "target_rate_2", "d2_m", "gain_ratio")
METHODS = ("exact", "asymptotic", "monte-carlo")
METHOD_ALIASES = {"exact": "exact", "ana": "exact",
                  "asymptotic": "asymptotic", "asy": "asymptotic",
                  "monte-carlo": "monte-carlo", "mc": "monte-carlo", "sim": "monte-carlo"}

_CONFIG_FIELDS = {f.name for f in fields(SystemConfig) if f.init}


_SNR_KEYS = ("transmit_snr_db", "transmit_snr", "total_power_watts")
_NOISE_KEYS = ("noise_power_dbm", "noise_power_watts")


def parse_config_pairs(text, source="<config>"):
    """Parse flat ``key = value`` text (``#`` comments) into a dict of floats."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key = value, got {raw.strip()!r}")
        key, _, val = (s.strip() for s in line.partition("="))
        if key not in _CONFIG_FIELDS and key not in _SNR_KEYS + _NOISE_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        try:
            num = float(val)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: {key}: not a number: {val!r}") from None
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        values[key] = num
    return values


def merge_pairs(base, overrides):
    """Overlay ``overrides``; an SNR or noise key replaces any alternative spelling."""
    out = dict(base)
    for group in (_SNR_KEYS, _NOISE_KEYS):
        if any(k in overrides for k in group):
            for k in group:
                out.pop(k, None)
    out.update(overrides)
    return out


def parse_config_text(text, source="<config>"):
    return config_from_mapping(parse_config_pairs(text, source))


def config_from_mapping(values):
    values = dict(values)
    given = [k for k in _SNR_KEYS if k in values]
    if len(given) > 1:
        raise ConfigError(f"give only one of {', '.join(given)}")
    if "noise_power_dbm" in values:
        if "noise_power_watts" in values:
            raise ConfigError("give only one of noise_power_dbm, noise_power_watts")
        values["noise_power_watts"] = db_to_linear(values.pop("noise_power_dbm") - 30.0)
    snr = None
    if "transmit_snr_db" in values:
        snr = db_to_linear(values.pop("transmit_snr_db"))
    elif "transmit_snr" in values:
        snr = values.pop("transmit_snr")
    kwargs = {k: v for k, v in values.items() if k in _CONFIG_FIELDS}
    cfg = SystemConfig(**kwargs)
    if snr is None and "total_power_watts" not in kwargs:
        snr = db_to_linear(70.0)
    if snr is not None:
        if not (math.isfinite(snr) and snr > 0):
            raise ConfigError("transmit_snr must be positive")
        cfg = cfg.with_transmit_snr(snr)
    return cfg


def read_config_pairs(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    return parse_config_pairs(text, source=str(path))


def load_config(path):
    """Validated SystemConfig from a config file; absent keys take the defaults."""
    return config_from_mapping(read_config_pairs(path))


def apply_axis(base, axis, value):
    """Return ``base`` with the swept quantity set to ``value``."""
    if axis == "alpha":
        return base.replace(alpha=value)
    if axis == "transmit_snr_db":
        return base.with_transmit_snr(db_to_linear(value))
    if axis == "received_snr_db":
        return base.with_received_snr(db_to_linear(value))
    if axis == "zeta":
        return base.replace(zeta=value)
    if axis == "gamma_th":
        return base.replace(gamma_th=value)
    if axis == "target_rate_1":
        return base.replace(target_secrecy_rate_1=value)
    if axis == "target_rate_2":
        return base.replace(target_secrecy_rate_2=value)
    if axis == "d2_m":
        return base.replace(d2_m=value)
    if axis == "gain_ratio":
        return base.with_lambda1(value * base.lambda2)
    raise ConfigError(f"unknown sweep axis {axis!r}")


@dataclass(frozen=True)
class SweepSpec:
    axis: str
    start: float
    stop: float
    points: int
    scale: str = "linear"
    methods: tuple = ("exact",)
    models: tuple = (Proposed(1e-10),)
    mc_samples: int = DEFAULT_SAMPLES
    seed: int = 42
    threads: int = 1

    def __post_init__(self):
        if self.axis not in AXES:
            raise ConfigError(f"axis must be one of {', '.join(AXES)}")
        if not self.start < self.stop:
            raise ConfigError("start must be < stop")
        if self.points < 2:
            raise ConfigError("points must be >= 2")
        if self.scale not in ("linear", "log"):
            raise ConfigError("scale must be linear or log")
        if self.scale == "log" and self.start <= 0:
            raise ConfigError("log scale requires start > 0")
        if not self.methods or not self.models:
            raise ConfigError("at least one method and one model required")
        for m in self.methods:
            if m not in METHODS:
                raise ConfigError(f"unknown method {m!r}")
        check_combinations(self.methods, self.models)
        if self.mc_samples < 1 or self.threads < 1:
            raise ConfigError("mc_samples and threads must be >= 1")

    def values(self):
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


def supported(model, method):
    """Fixed and constant models have no analytic SOP; they are simulated only."""
    return method == "monte-carlo" or isinstance(model, (Proposed, PerfectSic))


def check_combinations(methods, models):
    for model in models:
        if not any(supported(model, m) for m in methods):
            raise ConfigError(f"{model.label}: only the monte-carlo method is available")


@dataclass
class SweepRow:
    axis_value: float
    values: dict = field(default_factory=dict)


def column_label(model, axis=None):
    if axis == "zeta" and isinstance(model, Proposed):
        return "proposed"
    return model.label


def columns(methods, models, axis=None):
    cols = []
    for model in models:
        for method in methods:
            if not supported(model, method):
                continue
            stem = f"{column_label(model, axis)}.{method}"
            for user in (1, 2):
                cols.append(f"{stem}.S{user}")
                if method == "monte-carlo":
                    cols.append(f"{stem}.S{user}_se")
    return cols


def evaluate(config, methods, models, mc_samples=DEFAULT_SAMPLES, seed=42, threads=1,
             axis=None):
    """Evaluate every (model, method) pair at one configuration."""
    out = {}
    for model in models:
        if axis == "zeta" and isinstance(model, Proposed):
            model = Proposed(config.zeta)
        for method in methods:
            if not supported(model, method):
                continue
            if method == "monte-carlo":
                est = sop_monte_carlo(config, model, mc_samples, seed, threads)
            elif isinstance(model, PerfectSic):
                est = (sop_exact_perfect if method == "exact" else sop_asymptotic_perfect)(config)
            else:
                est = (sop_asymptotic if method == "asymptotic" else sop_exact)(config, model.zeta)
            stem = f"{column_label(model, axis)}.{method}"
            for e in est:
                out[f"{stem}.S{e.user}"] = e.value
                if e.std_error is not None:
                    out[f"{stem}.S{e.user}_se"] = e.std_error
    return out


class SweepError(Exception):
    def __init__(self, axis_value, cause):
        super().__init__(f"at axis value {axis_value:.12g}: {cause}")
        self.axis_value = axis_value
        self.cause = cause


def run_sweep(spec, base):
    rows = []
    for v in spec.values():
        v = float(v)
        try:
            cfg = apply_axis(base, spec.axis, v)
            vals = evaluate(cfg, spec.methods, spec.models, spec.mc_samples, spec.seed,
                            spec.threads, axis=spec.axis)
        except ConfigError as exc:
            raise ConfigError(f"at {spec.axis}={v:.12g}: {exc}") from exc
        except (ArithmeticError, AssertionError) as exc:
            raise SweepError(v, exc) from exc
        rows.append(SweepRow(v, vals))
    return rows


def _fmt(x):
    return f"{x:.12g}"


def render(rows, fmt="csv", with_axis=True):
    if not rows:
        raise ValueError("no rows to emit")
    keys = list(rows[0].values)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow((["axis"] if with_axis else []) + keys)
        for r in rows:
            w.writerow(([_fmt(r.axis_value)] if with_axis else [])
                       + [_fmt(r.values[k]) for k in keys])
        return buf.getvalue()
    if fmt == "json":
        objs = []
        for r in rows:
            o = {"axis": r.axis_value} if with_axis else {}
            o.update((k, r.values[k]) for k in keys)
            objs.append(o)
        return json.dumps(objs, indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit(rows, fmt="csv", path=None, with_axis=True):
    """Write rows to ``path`` (or stdout when ``path`` is None or ``-``)."""
    text = render(rows, fmt, with_axis)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {os.fspath(path)}: {exc.strerror}") from exc


def rows_from_json(text):
    return [SweepRow(o.pop("axis"), o) for o in json.loads(text)]


def parse_methods(text):
    out = []
    for m in text.split(","):
        m = m.strip().lower()
        if m not in METHOD_ALIASES:
            raise ConfigError(f"unknown method {m!r}")
        if METHOD_ALIASES[m] not in out:
            out.append(METHOD_ALIASES[m])
    return tuple(out)


def parse_models(text, default_zeta):
    return tuple(parse_model(m, default_zeta) for m in text.split(",") if m.strip())
