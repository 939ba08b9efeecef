#!/usr/bin/env python3
"""Audit of the closed forms for sun and double-sun energies.

The printed double-sun formula for p = q leaves out the eigenvalues 0 and 2
of the normalized Laplacian and falls short of the numeric energy by
exactly 2. The printed q = p - 1 formula is off by a varying amount. The
corrected forms match the eigensolver for both shapes.
"""

import math

from randic.closed_forms import cross_validate, double_sun_quartic, quartic_pairing


def main() -> None:
    print("suns")
    for p in (1, 2, 5, 10, 25):
        r = cross_validate(p)
        print(f"  p={p:<3} n={r.n:<3} closed={r.printed_value:.10f} numeric={r.numeric_value:.10f}")

    print("\ndouble suns (printed formula vs eigensolver)")
    print(f"  {'shape':>8} {'n':>3} {'printed':>12} {'corrected':>12} {'numeric':>12} {'gap':>8}")
    for p, q in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (8, 7), (8, 8)]:
        r = cross_validate(p, q)
        print(
            f"  {f'({p},{q})':>8} {r.n:>3} {r.printed_value:12.6f} {r.corrected_value:12.6f}"
            f" {r.numeric_value:12.6f} {r.discrepancy_printed:8.4f}"
        )

    # the quartic factors over pairs of roots r, 2 - r
    c = double_sun_quartic(2, 2)
    u, v = quartic_pairing(c)
    roots = [1 - math.sqrt(1 - u), 1 + math.sqrt(1 - u), 1 - math.sqrt(1 - v), 1 + math.sqrt(1 - v)]
    print(f"\nquartic for (2,2): {c}")
    print("  roots " + ", ".join(f"{x:.6f}" for x in roots))


if __name__ == "__main__":
    main()
