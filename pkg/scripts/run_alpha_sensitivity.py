#!/usr/bin/env python3
"""Sweep the layout-search density weight on a 10-qubit benchmark.

The weight trades routing-region size against patch spread during
automatic board design.  Midrange values should land on near-identical
schedules; the extremes are allowed to do worse.
"""

import argparse

from lscompile import bench
from lscompile.layout_search import layout_score
from lscompile.pipeline import CompileOptions, compile_program


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alphas", type=float, nargs="+",
                        default=[0.0, 0.1, 0.2, 0.3, 0.5])
    parser.add_argument("--qubits", type=int, default=10)
    args = parser.parse_args()

    circ = bench.adder_circuit(args.qubits)
    header = (f"{'alpha':>6} {'tiles':>6} {'score':>8} {'clocks':>7} "
              f"{'mean_bus':>9}")
    print(header)
    print("-" * len(header))
    for alpha in args.alphas:
        res = compile_program(circ, CompileOptions(
            board="auto", alpha_e=alpha))
        print(f"{alpha:>6.2f} {res.board.tile_count():>6} "
              f"{layout_score(res.board, alpha):>8.3f} "
              f"{res.schedule.total_clocks:>7} "
              f"{res.schedule.mean_bus_tiles():>9.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
