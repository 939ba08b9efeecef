#!/usr/bin/env python3
"""Counting normalized Laplacian eigenvalues of a tree with exact arithmetic.

Diagonalizing L - xI bottom-up over a rooted tree gives, by Sylvester's law
of inertia, the number of eigenvalues above, at and below x. Repeated
bisection then pins each eigenvalue down without any floating point.
"""

from fractions import Fraction

import numpy as np

from randic.families import double_sun, sun
from randic.inertia import diagonalize, inertia, locate_eigenvalues, nullity_exact
from randic.spectra import eigenvalues, normalized_laplacian


def main() -> None:
    t = sun(3)
    print("sun(3) diagonal of L - I:", [str(v) for v in diagonalize(t, 1).diagonal])
    for x in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)):
        tri = inertia(t, x)
        print(f"  x={str(x):>4}: above={tri.above} equal={tri.equal} below={tri.below}")
    print("nullity of R:", nullity_exact(t))

    g = double_sun(3, 2)
    print(f"\ndouble_sun(3,2), n={g.n}: bracketing intervals of width 1e-8")
    for lo, hi, mult in locate_eigenvalues(g, Fraction(1, 10**8)):
        print(f"  [{float(lo):.8f}, {float(hi):.8f})  x{mult}")
    print("  Jacobi:", np.round(eigenvalues(normalized_laplacian(g)).as_array(), 8))


if __name__ == "__main__":
    main()
