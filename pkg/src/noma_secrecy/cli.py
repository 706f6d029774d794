"""``noma-secrecy`` command line entry point.

Exit codes: 0 success, 1 configuration error, 2 numerical error.
"""

import argparse
import sys

from .errors import ConfigError
from .experiments import (AXES, SweepError, SweepRow, SweepSpec, check_combinations,
                          config_from_mapping, emit, evaluate, merge_pairs,
                          parse_config_pairs, parse_methods, parse_models,
                          read_config_pairs, run_sweep)
from .montecarlo import DEFAULT_SAMPLES

EXIT_CONFIG = 1
EXIT_NUMERICAL = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _common(p):
    p.add_argument("--config", help="key=value config file; missing keys use defaults")
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                   help="override a config key (repeatable)")
    p.add_argument("--methods", default="exact",
                   help="comma list of exact, asy, mc (default: exact)")
    p.add_argument("--models", default="proposed",
                   help="comma list: proposed[:zeta], fixed:beta, constant:G21:G12, perfect")
    p.add_argument("--mc-samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--threads", type=int, default=1,
                   help="Monte Carlo worker threads; results do not depend on it")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-", help="output path (default: stdout)")


def build_parser():
    parser = _Parser(prog="noma-secrecy",
                     description="Secrecy outage probability of two-user untrusted NOMA "
                                 "under imperfect SIC.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sw = sub.add_parser("sweep", help="sweep one parameter and tabulate SOPs")
    _common(sw)
    sw.add_argument("--axis", required=True, choices=AXES)
    sw.add_argument("--start", type=float, required=True)
    sw.add_argument("--stop", type=float, required=True)
    sw.add_argument("--points", type=int, required=True)
    sw.add_argument("--log", action="store_true", help="logarithmic axis spacing")

    pt = sub.add_parser("point", help="evaluate SOPs at a single configuration")
    _common(pt)
    return parser


def _base_config(args):
    pairs = read_config_pairs(args.config) if args.config else {}
    if args.set:
        pairs = merge_pairs(pairs, parse_config_pairs("\n".join(args.set), source="--set"))
    return config_from_mapping(pairs)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        base = _base_config(args)
        methods = parse_methods(args.methods)
        models = parse_models(args.models, base.zeta)
        if args.command == "sweep":
            spec = SweepSpec(axis=args.axis, start=args.start, stop=args.stop,
                             points=args.points, scale="log" if args.log else "linear",
                             methods=methods, models=models, mc_samples=args.mc_samples,
                             seed=args.seed, threads=args.threads)
            rows = run_sweep(spec, base)
            emit(rows, args.format, args.out)
        else:
            check_combinations(methods, models)
            vals = evaluate(base, methods, models, args.mc_samples, args.seed, args.threads)
            emit([SweepRow(float("nan"), vals)], args.format, args.out, with_axis=False)
    except ConfigError as exc:
        print(f"noma-secrecy: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SweepError as exc:
        print(f"noma-secrecy: numerical error {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ArithmeticError, AssertionError) as exc:
        print(f"noma-secrecy: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"noma-secrecy: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return 0


if __name__ == "__main__":
    sys.exit(main())
