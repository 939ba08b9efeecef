"""Eigenvalue location for normalized Laplacians of trees.

``diagonalize`` eliminates the tree from the leaves up, producing a diagonal
matrix congruent to ``L - xI``. By Sylvester's law of inertia the signs of
that diagonal count the eigenvalues of ``L`` above, at and below ``x``.
Rational shifts are processed exactly with :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .canon import tree_centers
from .graph import Graph, NotATreeError, is_tree, matching_number

__all__ = [
    "InertiaTriple",
    "Diagonalization",
    "RootedTreeOrder",
    "FLOAT_EQUALITY_BAND",
    "rooted_order",
    "diagonalize",
    "inertia",
    "nullity_exact",
    "locate_eigenvalues",
    "parse_shift",
]

FLOAT_EQUALITY_BAND = 1e-9
# all normalized Laplacian eigenvalues lie in [0, 2]
_BRACKET = (Fraction(-1, 10**9), 2 + Fraction(1, 10**9))

Number = Union[Fraction, int, float]


@dataclass(frozen=True)
class InertiaTriple:
    above: int
    equal: int
    below: int

    def as_dict(self) -> dict:
        return {"above": self.above, "equal": self.equal, "below": self.below}


@dataclass(frozen=True)
class RootedTreeOrder:
    root: int
    parent: tuple[int, ...]  # -1 at the root
    order: tuple[int, ...]  # leaves first, root last


@dataclass(frozen=True)
class Diagonalization:
    diagonal: tuple
    triple: InertiaTriple
    exact: bool


def rooted_order(t: Graph, root: int | None = None) -> RootedTreeOrder:
    """Parent pointers and a children-before-parents order (no recursion)."""
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    if root is None:
        root = tree_centers(t)[0]
    parent = [-1] * t.n
    seen = [False] * t.n
    seen[root] = True
    bfs = [root]
    for u in bfs:
        for w in t.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                bfs.append(w)
    return RootedTreeOrder(root, tuple(parent), tuple(reversed(bfs)))


def diagonalize(t: Graph, x: Number, root: int | None = None) -> Diagonalization:
    """Congruent diagonal form of ``L - xI`` and the resulting inertia.

    ``x`` may be an ``int``/``Fraction`` (exact) or a ``float``; in the
    latter case diagonal values within ``FLOAT_EQUALITY_BAND`` of zero count
    as zero and ``exact`` is False.
    """
    ro = rooted_order(t, root)
    exact = isinstance(x, Rational)
    if exact:
        x, one = Fraction(x), Fraction(1)
    else:
        x, one = float(x), 1.0

    def is_zero(val) -> bool:
        return val == 0 if exact else abs(val) < FLOAT_EQUALITY_BAND

    deg = t.degrees

    def weight_sq(u: int, v: int):
        # squared off-diagonal entry of L: 1 / (d_u d_v), rational
        return Fraction(1, deg[u] * deg[v]) if exact else 1.0 / (deg[u] * deg[v])

    a = [one - x] * t.n
    attached = [True] * t.n  # False once a vertex is severed from its parent
    children: dict[int, list[int]] = {v: [] for v in range(t.n)}
    for v in ro.order:
        if ro.parent[v] >= 0:
            children[ro.parent[v]].append(v)

    for v in ro.order:
        kids = [c for c in children[v] if attached[c]]
        zero_kid = next((c for c in kids if is_zero(a[c])), None)
        if zero_kid is None:
            for c in kids:
                a[v] -= weight_sq(c, v) / a[c]
        else:
            # 2x2 exchange: [[0, w], [w, *]] is congruent to diag(2, -w^2/2);
            # the zero child also clears v's edge to its own parent
            a[zero_kid] = 2 * one
            a[v] = -weight_sq(zero_kid, v) / 2
            attached[v] = False

    above = sum(1 for val in a if not is_zero(val) and val > 0)
    below = sum(1 for val in a if not is_zero(val) and val < 0)
    equal = t.n - above - below
    return Diagonalization(tuple(a), InertiaTriple(above, equal, below), exact)


def inertia(t: Graph, x: Number, root: int | None = None) -> InertiaTriple:
    return diagonalize(t, x, root).triple


def nullity_exact(t: Graph) -> int:
    """Nullity of R for a tree: multiplicity of 1 in the normalized Laplacian."""
    k = inertia(t, 1).equal
    expected = t.n - 2 * matching_number(t)
    if k != expected:
        raise AssertionError(
            f"inertia nullity {k} disagrees with matching-based nullity {expected}"
        )
    return k


def locate_eigenvalues(
    t: Graph, precision: Number = Fraction(1, 10**6)
) -> list[tuple[Fraction, Fraction, int]]:
    """Disjoint half-open intervals ``[lo, hi)`` with eigenvalue multiplicities.

    Bisection on the normalized Laplacian bracket using exact inertia counts
    until every interval is narrower than ``precision``. Multiplicities sum
    to ``n``.
    """
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    order = rooted_order(t)
    below_cache: dict[Fraction, int] = {}

    def below(x: Fraction) -> int:
        if x not in below_cache:
            below_cache[x] = inertia(t, x, order.root).below
        return below_cache[x]

    lo, hi = _BRACKET
    stack = [(lo, hi)]
    out = []
    while stack:
        lo, hi = stack.pop()
        count = below(hi) - below(lo)
        if count == 0:
            continue
        if hi - lo < precision:
            out.append((lo, hi, count))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return out


def parse_shift(text: str) -> Fraction:
    """Parse ``"a/b"``, an integer or a decimal string into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational shift: {text!r}") from None
