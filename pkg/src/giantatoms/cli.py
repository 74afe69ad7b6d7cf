"""
Command-line front end.

    giantatoms coeffs  --config case.ini --out out/
    giantatoms evolve  --config case.ini --out out/
    giantatoms steady  --config case.ini --out out/ --override physics.eta=0.01
    giantatoms sweep   --config sweep.ini --out out/ --threads 4
    giantatoms preset fig5 --out out/

Exit codes: 0 success, 2 configuration error, 3 numerical-invariant failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .dynamics import InvariantViolation
from .scenarios import (PRESETS, ConfigError, apply_overrides, load_config, run_preset,
                        run_scenario, write_coefficients)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

log = logging.getLogger("giantatoms")


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, default=None,
                        help="output directory (default: the config's output entry)")
    common.add_argument("--override", action="append", default=[], metavar="KEY=VALUE",
                        help="override a config entry, e.g. physics.eta=0.004 (repeatable)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for sweeps")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="giantatoms",
        description="Waveguide-coupled giant/small atom arrays: couplings, dynamics, "
                    "steady-state entanglement.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("coeffs", "dump pair coefficients, h and Gamma as CSV"),
                       ("evolve", "time-evolve the configured state"),
                       ("steady", "solve for the steady state"),
                       ("sweep", "steady-state metrics along a parameter axis")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--config", type=Path, required=True,
                       help="INI config, or a JSON run manifest to replay")
    p = sub.add_parser("preset", parents=[common], help="run a figure preset")
    p.add_argument("name", choices=sorted(PRESETS))
    return parser


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.command == "preset":
            out = args.out or Path("out") / args.name
            results = run_preset(args.name, out, args.override, args.threads)
            log.info("preset %s: %d scenario(s) written to %s", args.name, len(results), out)
            return EXIT_OK

        cfg = apply_overrides(load_config(args.config), args.override)
        out = args.out or Path(cfg.output)
        if args.command == "coeffs":
            write_coefficients(cfg, out)
            return EXIT_OK
        if cfg.run.mode != args.command:
            cfg = apply_overrides(cfg, [f"run.mode={args.command}"])
        _, man = run_scenario(cfg, out, threads=args.threads)
        if man["status"] != "ok":
            print(f"error: {man.get('detail', man['status'])}", file=sys.stderr)
            return EXIT_NUMERICAL
        return EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InvariantViolation as exc:
        print(f"numerical invariant violated: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
