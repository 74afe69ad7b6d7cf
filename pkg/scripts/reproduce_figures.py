"""
Run the figure presets and print a one-line summary per scenario.

    python scripts/reproduce_figures.py --out out/ fig5 fig7
    python scripts/reproduce_figures.py --out out/ --threads 4      # all presets
"""
import argparse
import time
from pathlib import Path

import numpy as np

from giantatoms.scenarios import PRESETS, EvolveResult, SteadyResult, SweepResult, run_preset


def summarize(name, result):
    if isinstance(result, SweepResult):
        bad = sum(s != "ok" for s in result.status)
        parts = []
        for col in result.columns:
            v = result.column(col)
            if np.all(np.isnan(v)):
                parts.append(f"{col} n/a")
                continue
            k = int(np.nanargmax(v))
            parts.append(f"max {col} = {v[k]:.4f} at {result.axis} = {result.values[k]:.4g}")
        tail = f" ({bad} point(s) without a unique steady state)" if bad else ""
        return f"{name}: " + "; ".join(parts) + tail
    if isinstance(result, EvolveResult):
        last = dict(zip(result.columns, result.rows[-1]))
        return f"{name}: t = {result.times[-1]:g}, P_e = {last.get('P_e', float('nan')):.4f}"
    if isinstance(result, SteadyResult):
        if result.status != "ok":
            return f"{name}: {result.status}"
        vals = dict(zip(result.columns, result.values))
        shown = {k: v for k, v in vals.items() if k == "P_e" or k.startswith("C_")}
        return f"{name}: " + ", ".join(f"{k} = {v:.4f}" for k, v in shown.items())
    return f"{name}: {result!r}"


def main():
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("presets", nargs="*", default=sorted(PRESETS),
                        help="preset names (default: all)")
    parser.add_argument("--out", type=Path, default=Path("out"))
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--override", action="append", default=[], metavar="KEY=VALUE")
    args = parser.parse_args()

    for preset in args.presets:
        start = time.perf_counter()
        results = run_preset(preset, args.out / preset, args.override, args.threads)
        print(f"== {preset} ({time.perf_counter() - start:.1f} s) -> {args.out / preset}")
        for name, result in results.items():
            print("  " + summarize(name, result))


if __name__ == "__main__":
    main()
