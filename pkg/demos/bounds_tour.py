#!/usr/bin/env python3
"""A walk through the upper bounds on Randic energy for a few graphs."""

from randic.bounds import bound_das, bound_trees_parity, check_all
from randic.families import complete, cycle, path, star, sun


def show(name, g):
    report = check_all(g)
    print(f"{name}: n={g.n}, RE={report.RE:.6f}, all bounds hold: {report.all_hold}")
    for e in report.applicable:
        tight = "  <- tight" if abs(e.margin) < 1e-9 else ""
        print(f"    {e.name:<28} {e.value:10.6f}  margin {e.margin:9.6f}{tight}")


def main() -> None:
    for name, g in [("P4", path(4)), ("K3", complete(3)), ("C6", cycle(6)), ("K1,4", star(5)), ("sun(3)", sun(3))]:
        show(name, g)
        print()

    print("tree bounds that depend on n only")
    for n in (4, 10, 100, 1000):
        print(f"  n={n:<5} parity {bound_trees_parity(n):10.4f}   Das {bound_das(n):10.4f}")


if __name__ == "__main__":
    main()
