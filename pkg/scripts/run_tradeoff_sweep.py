#!/usr/bin/env python3
"""Sweep board width on a fixed 8-qubit workload.

Wider boards shorten the schedule but stretch the measurement buses, so
the estimated logical error rate has an interior minimum.  Prints one
row per width with clocks, mean bus size, and the estimate.
"""

import argparse

from lscompile import bench
from lscompile.ler import default_calibration, estimate_ler
from lscompile.pipeline import CompileOptions, compile_program


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--widths", type=int, nargs=2, default=(5, 12),
                        metavar=("MIN", "MAX"))
    parser.add_argument("--distance", type=int, default=9)
    parser.add_argument("--layers", type=int, default=2,
                        help="interaction layers in the workload circuit")
    args = parser.parse_args()

    circ = bench.star_ising_circuit(8, args.layers)
    calib = default_calibration(args.distance)
    header = (f"{'width':>5} {'tiles':>6} {'clocks':>7} {'mean_bus':>9} "
              f"{'p_total':>12}")
    print(header)
    print("-" * len(header))
    rows = []
    for width in range(args.widths[0], args.widths[1] + 1):
        board = bench.spread_layout(width)
        res = compile_program(circ, CompileOptions(
            board=board, mapping="identity"))
        p = estimate_ler(res.schedule, calib)["p_total"]
        rows.append((width, p))
        print(f"{width:>5} {board.tile_count():>6} "
              f"{res.schedule.total_clocks:>7} "
              f"{res.schedule.mean_bus_tiles():>9.2f} {p:>12.4e}")
    best = min(rows, key=lambda r: r[1])
    print("-" * len(header))
    print(f"best width {best[0]} at p_total {best[1]:.4e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
