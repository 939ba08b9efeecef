#!/usr/bin/env python3
"""Exhaustive check of the maximal Randic energy conjecture on small orders.

For every order n the script enumerates all trees (and, for n <= 7, all
connected graphs), finds the graphs of largest Randic energy and compares
them with the sun / balanced double sun of the same order.
"""

import sys

from randic.closed_forms import conjectured_max
from randic.sweep import sweep_connected, sweep_trees


def main(max_tree_n: int = 14) -> None:
    print(f"{'n':>3} {'trees':>6} {'max RE':>12} {'runner-up':>12}  holds")
    for n in range(2, max_tree_n + 1):
        r = sweep_trees(n)
        runner = f"{r.runner_up_RE:12.6f}" if r.runner_up_RE is not None else " " * 12
        print(f"{n:>3} {r.candidates:>6} {r.max_RE:12.6f} {runner}  {r.conjecture_holds}")

    print()
    print("connected graphs, where cycles are allowed:")
    for n in range(2, 8):
        r = sweep_connected(n)
        note = "" if r.unique else f"  tie between {', '.join(r.maximizers)}"
        print(f"{n:>3} {r.candidates:>6} {r.max_RE:12.6f}  {r.conjecture_holds}{note}")

    value, g = conjectured_max(15)
    print()
    print(f"next order: the sun on {g.n} vertices should reach RE = {value:.6f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 14)
