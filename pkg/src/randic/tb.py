"""TB graphs: bipartite graphs with a side B whose vertices have degree <= 2.

Everything here works on exact rationals so that equality cases such as
``tr R_A^2 == (n + 1) / 4`` are detected exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .closed_forms import sun_energy
from .graph import Bipartition, Graph, is_connected, is_TB
from .spectra import block_traces_exact, nullity, randic_energy, trace_R2_exact

__all__ = [
    "NotTBError",
    "TBDecomposition",
    "TBEnergyBound",
    "tb_decompose",
    "diag_R2_A",
    "diag_R2_A_bounds",
    "trace_RA2_bound",
    "trace_R2_tb_bound",
    "tb_energy_bound",
    "odd_tb_vs_sun",
]

HALF_SQRT2 = math.sqrt(2.0) / 2


class NotTBError(ValueError):
    pass


@dataclass(frozen=True)
class TBDecomposition:
    bipartition: Bipartition
    b1: frozenset  # B-vertices of degree 1
    b2: frozenset  # B-vertices of degree 2

    @property
    def side_a(self) -> frozenset:
        return self.bipartition.side_a

    @property
    def side_b(self) -> frozenset:
        return self.bipartition.side_b


@dataclass(frozen=True)
class TBEnergyBound:
    value: float  # sqrt(n-2-null) sqrt(n-3) sqrt(2)/2 + 2
    nullity_free: float  # same with null = 0
    sun_form: Optional[float]  # (n-3) sqrt(2)/2 + 2, only when null >= 1
    nullity: int
    degenerate: bool  # n - 2 - null < 0 was clamped


def tb_decompose(g: Graph, part: Optional[Bipartition] = None) -> TBDecomposition:
    """Split the B side of a TB graph into its degree-1 and degree-2 vertices."""
    if part is None:
        part = is_TB(g)
        if part is None:
            raise NotTBError("graph is not TB (not bipartite, or no side has all degrees <= 2)")
    elif not part.is_valid_for(g):
        raise NotTBError("given bipartition is not valid for the graph")
    deg = g.degrees
    if any(deg[b] > 2 for b in part.side_b):
        raise NotTBError("some B-vertex has degree greater than 2")
    b1 = frozenset(b for b in part.side_b if deg[b] == 1)
    b2 = frozenset(b for b in part.side_b if deg[b] == 2)
    d = TBDecomposition(part, b1, b2)
    if g.m != len(b1) + 2 * len(b2):
        raise AssertionError("edge count differs from |B1| + 2|B2|")
    if is_connected(g) and g.n >= 2 and len(d.side_a) > len(b2) + 1:
        raise AssertionError("connected TB graph with |A| > |B2| + 1")
    return d


def _require_connected_tb(g: Graph, min_n: int = 3) -> None:
    if not is_connected(g):
        raise ValueError("TB results need a connected graph")
    if g.n < min_n:
        raise ValueError(f"TB results need at least {min_n} vertices, got {g.n}")


def diag_R2_A(g: Graph, d: Optional[TBDecomposition] = None) -> dict[int, Fraction]:
    """Diagonal entries of R^2 on the A side, each checked against its bounds.

    Raises ``AssertionError`` if some entry leaves ``[1/2, 1/2 + |N(a) ∩ B1|/4]``
    or, for deg(a) >= 2, differs from ``|N(a) ∩ B1| / (2 deg(a)) + 1/2``.
    """
    _require_connected_tb(g)
    d = tb_decompose(g) if d is None else d
    deg = g.degrees
    out = {}
    for a in sorted(d.side_a):
        nbrs = g.adjacency[a]
        val = sum((Fraction(1, deg[b] * deg[a]) for b in nbrs), Fraction(0))
        k = sum(1 for b in nbrs if b in d.b1)
        lower, upper = diag_R2_A_bounds(k)
        if not lower <= val <= upper:
            raise AssertionError(f"R^2[{a},{a}] = {val} outside [{lower}, {upper}]")
        if deg[a] == 1 and deg[nbrs[0]] != 2:
            # pendant A-vertex: its neighbour must be a degree-2 B-vertex
            raise AssertionError(f"pendant A-vertex {a} has a neighbour of degree {deg[nbrs[0]]}")
        if deg[a] >= 2 and val != Fraction(k, 2 * deg[a]) + Fraction(1, 2):
            raise AssertionError(f"R^2[{a},{a}] = {val} does not match the closed form")
        out[a] = val
    return out


def diag_R2_A_bounds(b1_neighbours: int) -> tuple[Fraction, Fraction]:
    return Fraction(1, 2), Fraction(1, 2) + Fraction(b1_neighbours, 4)


def trace_RA2_bound(g: Graph, d: Optional[TBDecomposition] = None) -> tuple[Fraction, Fraction]:
    """(tr R_A^2, (n + 1)/4)."""
    d = tb_decompose(g) if d is None else d
    trace = sum(diag_R2_A(g, d).values(), Fraction(0))
    return trace, Fraction(g.n + 1, 4)


def trace_R2_tb_bound(g: Graph, d: Optional[TBDecomposition] = None) -> tuple[Fraction, Fraction]:
    """(tr R^2, (n + 1)/2); also checks tr R^2 = 2 tr R_A^2 = 2 tr R_B^2."""
    if not is_connected(g):
        raise ValueError("TB results need a connected graph")
    d = tb_decompose(g) if d is None else d
    trace = trace_R2_exact(g)
    ta, tb = block_traces_exact(g, d.bipartition)
    if not (ta == tb and trace == 2 * ta):
        raise AssertionError(f"block traces disagree: tr R^2={trace}, tr R_A^2={ta}, tr R_B^2={tb}")
    return trace, Fraction(g.n + 1, 2)


def tb_energy_bound(g: Graph, null: Optional[int] = None) -> TBEnergyBound:
    _require_connected_tb(g)
    if is_TB(g) is None:
        raise NotTBError("graph is not TB")
    n = g.n
    null = nullity(g) if null is None else null
    head = n - 2 - null
    degenerate = head < 0
    root_n3 = math.sqrt(n - 3)
    return TBEnergyBound(
        value=math.sqrt(max(head, 0)) * root_n3 * HALF_SQRT2 + 2,
        nullity_free=math.sqrt(n - 2) * root_n3 * HALF_SQRT2 + 2,
        sun_form=(n - 3) * HALF_SQRT2 + 2 if null >= 1 else None,
        nullity=null,
        degenerate=degenerate,
    )


def odd_tb_vs_sun(g: Graph, tol: float = 1e-9) -> tuple[float, float, bool]:
    """(RE(g), RE of the sun of the same order, RE(g) <= sun + tol) for odd-order TB g."""
    _require_connected_tb(g)
    if g.n % 2 == 0:
        raise ValueError(f"odd order required, got n={g.n}")
    if is_TB(g) is None:
        raise NotTBError("graph is not TB")
    if nullity(g) < 1:
        raise AssertionError("odd-order bipartite graph with trivial null space")
    re = randic_energy(g)
    target = sun_energy((g.n - 1) // 2)
    return re, target, re <= target + tol
