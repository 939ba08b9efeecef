"""Randić / normalized Laplacian matrices, a Jacobi eigensolver and energies.

The eigensolver is cyclic Jacobi in round-robin (parallel) ordering: each
round applies n/2 disjoint plane rotations at once as one orthogonal
similarity, so a stack of equally sized matrices can be diagonalized in a
single batched pass. Exact quantities (R_{-1}, traces of R^2) are computed
with :class:`fractions.Fraction` from the degrees.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import Bipartition, Graph, is_tree, matching_number

__all__ = [
    "DEFAULT_ZERO_TOL",
    "ConvergenceError",
    "IsolatedVertexError",
    "SymMatrix",
    "Spectrum",
    "KnownEigs",
    "default_zero_tol",
    "randic_matrix",
    "normalized_laplacian",
    "adjacency_matrix",
    "laplacian_matrix",
    "jacobi_eigenvalues",
    "eigenvalues",
    "randic_spectrum",
    "randic_spectra",
    "randic_energy",
    "randic_energies",
    "randic_index_minus1_exact",
    "normalized_laplacian_energy",
    "randic_index_minus1",
    "trace_R2",
    "trace_R2_exact",
    "nullity",
    "nullity_by_tolerance",
    "adjacency_energy",
    "laplacian_energy",
    "block_traces",
    "block_traces_exact",
]

DEFAULT_ZERO_TOL = 1e-8
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


class IsolatedVertexError(ValueError):
    """Raised where a result needs a graph without isolated vertices."""


def default_zero_tol() -> float:
    """Zero tolerance, overridable with the RANDIC_ZERO_TOL environment variable."""
    value = os.environ.get("RANDIC_ZERO_TOL")
    return float(value) if value else DEFAULT_ZERO_TOL


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix; ``kind`` names what it represents."""

    entries: np.ndarray
    kind: str = "generic"

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        # upper triangle is authoritative
        a = np.triu(a) + np.triu(a, 1).T
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    source: str
    zero_tol: float = DEFAULT_ZERO_TOL

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(float(x) for x in self.values)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def count_near(self, x: float, tol: Optional[float] = None) -> int:
        tol = self.zero_tol if tol is None else tol
        return sum(1 for v in self.values if abs(v - x) < tol)

    def distance_to(self, x: float) -> float:
        return min(abs(v - x) for v in self.values)

    def energy(self, center: float = 0.0) -> float:
        return float(sum(abs(v - center) for v in self.values))


@dataclass(frozen=True)
class KnownEigs:
    """A multiset of values claimed to be eigenvalues of R."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(x) for x in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def validate(self, spectrum: Spectrum, tol: float = 1e-6) -> None:
        """Raise ``ValueError`` unless the values form a sub-multiset of ``spectrum``."""
        if len(self.values) > len(spectrum):
            raise ValueError("more known eigenvalues than the matrix order")
        available = list(spectrum.values)
        for x in self.values:
            j = min(range(len(available)), key=lambda i: abs(available[i] - x), default=None)
            if j is None or abs(available[j] - x) > tol:
                raise ValueError(f"{x} is not an (unused) eigenvalue of R within {tol}")
            available.pop(j)


# --- matrices ---------------------------------------------------------------


def _randic_array(g: Graph) -> np.ndarray:
    r = np.zeros((g.n, g.n))
    deg = g.degrees
    for u, v in g.edges:
        r[u, v] = r[v, u] = 1.0 / np.sqrt(deg[u] * deg[v])
    return r


def randic_matrix(g: Graph) -> SymMatrix:
    return SymMatrix(_randic_array(g), "randic")


def normalized_laplacian(g: Graph) -> SymMatrix:
    """``I - R``; isolated vertices keep diagonal entry 1."""
    return SymMatrix(np.eye(g.n) - _randic_array(g), "normalized_laplacian")


def adjacency_matrix(g: Graph) -> SymMatrix:
    return SymMatrix(g.adjacency_matrix(), "adjacency")


def laplacian_matrix(g: Graph) -> SymMatrix:
    a = g.adjacency_matrix()
    return SymMatrix(np.diag(a.sum(axis=1)) - a, "laplacian")


# --- Jacobi -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Rounds of disjoint index pairs covering every pair (p, q) once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a < n and b < n]
        rounds.append((np.array([a for a, _ in pairs]), np.array([b for _, b in pairs])))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> np.ndarray:
    # summing the off-diagonal squares directly; ||A||^2 - ||diag||^2 cancels
    off = a * (1.0 - np.eye(a.shape[-1]))
    return np.sqrt((off * off).sum(axis=(-2, -1)))


def jacobi_eigenvalues(matrices: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a symmetric matrix or a stack of them, sorted ascending.

    Stops once every matrix satisfies ``off(A) <= 1e-13 * n * max|a_ij|``
    (off = Frobenius norm of the off-diagonal part of the iterate, max over
    the input), and raises :class:`ConvergenceError` after ``max_sweeps``
    sweeps.
    """
    a = np.array(matrices, dtype=float)
    single = a.ndim == 2
    if single:
        a = a[None]
    if a.ndim != 3 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected (n, n) or (k, n, n), got {a.shape}")
    n = a.shape[-1]
    if n == 0:
        raise ValueError("empty matrix")
    a = 0.5 * (a + np.swapaxes(a, -1, -2))
    tol = 1e-13 * n * np.abs(a).max(axis=(-2, -1))
    batch = np.arange(a.shape[0])[:, None]
    rounds = _round_robin(n)

    sweeps = 0
    while np.any(_off_norm(a) > tol):
        if sweeps == max_sweeps:
            worst = float(np.max(_off_norm(a) - tol))
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (n={n}, excess off-norm {worst:.3e})"
            )
        for p, q in rounds:
            app = a[:, p, p]
            aqq = a[:, q, q]
            apq = a[:, p, q]
            nonzero = apq != 0.0
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = np.where(nonzero, (aqq - app) / (2.0 * apq), 0.0)
                t = np.where(
                    nonzero,
                    np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0)),
                    0.0,
                )
            t = np.nan_to_num(t)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = np.broadcast_to(np.eye(n), a.shape).copy()
            rot[batch, p, p] = c
            rot[batch, q, q] = c
            rot[batch, p, q] = s
            rot[batch, q, p] = -s
            a = np.swapaxes(rot, -1, -2) @ a @ rot
            a[batch, p, q] = 0.0
            a[batch, q, p] = 0.0
        sweeps += 1

    values = np.sort(np.einsum("...ii->...i", a), axis=-1)
    return values[0] if single else values


def eigenvalues(m: SymMatrix, zero_tol: Optional[float] = None) -> Spectrum:
    source = {"normalized_laplacian": "normalized_laplacian"}.get(m.kind, m.kind)
    tol = default_zero_tol() if zero_tol is None else zero_tol
    return Spectrum(tuple(jacobi_eigenvalues(m.entries)), source, tol)


# --- energies and indices ---------------------------------------------------


def randic_spectrum(g: Graph, zero_tol: Optional[float] = None) -> Spectrum:
    return eigenvalues(randic_matrix(g), zero_tol)


def randic_spectra(graphs: Sequence[Graph]) -> list[np.ndarray]:
    """Sorted Randić spectra of many graphs, batching equal orders together."""
    out: list[Optional[np.ndarray]] = [None] * len(graphs)
    by_order: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_order.setdefault(g.n, []).append(i)
    for n, idx in by_order.items():
        stack = np.stack([_randic_array(graphs[i]) for i in idx])
        for i, vals in zip(idx, jacobi_eigenvalues(stack)):
            out[i] = vals
    return out  # type: ignore[return-value]


def randic_energy(g: Graph) -> float:
    return randic_spectrum(g).energy()


def randic_energies(graphs: Iterable[Graph]) -> list[float]:
    graphs = list(graphs)
    return [float(np.abs(vals).sum()) for vals in randic_spectra(graphs)]


def _require_no_isolated(g: Graph, what: str) -> None:
    if 0 in g.degrees:
        v = g.degrees.index(0)
        raise IsolatedVertexError(
            f"{what} requires a graph without isolated vertices (vertex {v} is isolated)"
        )


def normalized_laplacian_energy(g: Graph) -> float:
    """Sum of |mu_i - 1| over the normalized Laplacian spectrum."""
    _require_no_isolated(g, "normalized Laplacian energy")
    return eigenvalues(normalized_laplacian(g)).energy(center=1.0)


def randic_index_minus1_exact(g: Graph) -> Fraction:
    deg = g.degrees
    return sum((Fraction(1, deg[u] * deg[v]) for u, v in g.edges), Fraction(0))


def randic_index_minus1(g: Graph) -> float:
    """R_{-1}(G): sum over edges of 1 / (d_u d_v)."""
    return float(randic_index_minus1_exact(g))


def trace_R2_exact(g: Graph) -> Fraction:
    return 2 * randic_index_minus1_exact(g)


def trace_R2(g: Graph) -> float:
    return float(trace_R2_exact(g))


def nullity_by_tolerance(g: Graph, zero_tol: Optional[float] = None) -> int:
    spec = randic_spectrum(g, zero_tol)
    return spec.count_near(0.0)


def nullity(g: Graph, zero_tol: Optional[float] = None) -> int:
    """Multiplicity of 0 in the Randić spectrum.

    Trees use the exact value n - 2 * matching number (R and the adjacency
    matrix are congruent once isolated vertices are set aside); other graphs
    count eigenvalues within ``zero_tol`` of zero.
    """
    if is_tree(g):
        return g.n - 2 * matching_number(g)
    return nullity_by_tolerance(g, zero_tol)


def adjacency_energy(g: Graph) -> float:
    return eigenvalues(adjacency_matrix(g)).energy()


def laplacian_energy(g: Graph) -> float:
    """Sum of |mu_i - 2m/n| over the combinatorial Laplacian spectrum."""
    return eigenvalues(laplacian_matrix(g)).energy(center=2.0 * g.m / g.n)


def block_traces_exact(g: Graph, b: Bipartition) -> tuple[Fraction, Fraction]:
    """(tr R_A^2, tr R_B^2) from the diagonal of R^2 restricted to each side."""
    if not b.is_valid_for(g):
        raise ValueError("not a valid bipartition of the graph")
    deg = g.degrees

    def side(vertices) -> Fraction:
        return sum(
            (Fraction(1, deg[x] * deg[y]) for x in vertices for y in g.adjacency[x]),
            Fraction(0),
        )

    return side(b.side_a), side(b.side_b)


def block_traces(g: Graph, b: Bipartition) -> tuple[float, float]:
    ta, tb = block_traces_exact(g, b)
    return float(ta), float(tb)
