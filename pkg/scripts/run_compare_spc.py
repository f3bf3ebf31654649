#!/usr/bin/env python3
"""Compare the slack-aware scheduler against one-product-per-slice.

Compiles every benchmark circuit on the compact and standard builtin
boards with both schedulers and prints the clock counts side by side.
"""

import argparse

from lscompile import bench
from lscompile.pipeline import CompileOptions, compile_program


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--boards", nargs="+",
                        default=["compact", "standard"])
    args = parser.parse_args()

    header = (f"{'circuit':<14} {'board':<10} {'loose':>7} {'spc':>7} "
              f"{'saved':>7}")
    print(header)
    print("-" * len(header))
    reductions = {style: [] for style in args.boards}
    for name, circ in bench.suite():
        for style in args.boards:
            loose = compile_program(
                circ, CompileOptions(scheduler="loose", board=style))
            spc = compile_program(
                circ, CompileOptions(scheduler="spc", board=style))
            lc = loose.schedule.total_clocks
            sc = spc.schedule.total_clocks
            saved = (sc - lc) / sc
            reductions[style].append(saved)
            print(f"{name:<14} {style:<10} {lc:>7} {sc:>7} {saved:>6.1%}")
    print("-" * len(header))
    for style in args.boards:
        mean = sum(reductions[style]) / len(reductions[style])
        print(f"mean reduction on {style:<10} {mean:>6.1%}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
