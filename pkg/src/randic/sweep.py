"""Exhaustive maximum-energy sweeps over families of graphs.

Work is split into chunks that may run in a process pool; the reduction is
an order-independent max keyed by (energy, canonical graph6), so results do
not depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import families
from .canon import canonical_graph6
from .closed_forms import conjectured_max
from .graph import Graph, is_connected, parse_graph6
from .spectra import adjacency_energy, laplacian_energy, randic_energies

__all__ = [
    "SweepResult",
    "ExtremeResult",
    "energies",
    "sweep",
    "sweep_trees",
    "sweep_connected",
    "sweep_graph6_file",
    "tree_extremes",
    "read_graph6_file",
]

TIE_TOL = 1e-8
CHUNK = 2048


@dataclass(frozen=True)
class SweepResult:
    """Outcome of one exhaustive sweep.

    ``maximizers`` lists every canonical graph6 whose energy is within
    ``TIE_TOL`` of the maximum; ``argmax_graph6`` is the smallest of them and
    ``runner_up_RE`` the best energy outside that tie band.
    """

    n: int
    candidates: int
    max_RE: float
    argmax_graph6: str
    maximizers: tuple[str, ...]
    conjectured_graph6: str
    conjectured_RE: float
    conjecture_holds: bool
    runner_up_RE: Optional[float]

    @property
    def unique(self) -> bool:
        return len(self.maximizers) == 1

    def as_dict(self) -> dict:
        d = asdict(self)
        d["maximizers"] = list(self.maximizers)
        d["unique"] = self.unique
        return d


def energies(graphs: Sequence[Graph], matrix: str = "randic") -> list[float]:
    if matrix == "randic":
        return randic_energies(graphs)
    if matrix == "adjacency":
        return [adjacency_energy(g) for g in graphs]
    if matrix == "laplacian":
        return [laplacian_energy(g) for g in graphs]
    raise ValueError(f"unknown matrix {matrix!r}")


def _leaders(chunk: Sequence[Graph]) -> list[tuple[float, str]]:
    """Entries within TIE_TOL of the chunk maximum plus the best one below."""
    values = randic_energies(chunk)
    scored = sorted(((-e, canonical_graph6(g)) for e, g in zip(values, chunk)))
    top = -scored[0][0]
    keep = []
    for neg, code in scored:
        keep.append((-neg, code))
        if -neg < top - TIE_TOL:
            break
    return keep


def _chunks(graphs: Iterable[Graph], size: int) -> Iterable[list[Graph]]:
    buf: list[Graph] = []
    for g in graphs:
        buf.append(g)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def sweep(n: int, graphs: Iterable[Graph], jobs: int = 1) -> SweepResult:
    """Maximum Randić energy over ``graphs`` (all of order n) vs the conjecture."""
    chunks = list(_chunks(graphs, CHUNK))
    if any(g.n != n for c in chunks for g in c):
        raise ValueError(f"sweep over order {n} received a graph of another order")
    if not chunks:
        raise ValueError(f"no graphs of order {n} to sweep")
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partial = list(pool.map(_leaders, chunks))
    else:
        partial = [_leaders(c) for c in chunks]

    pooled: dict[str, float] = {}
    for part in partial:
        for e, code in part:
            pooled[code] = max(e, pooled.get(code, e))
    max_re = max(pooled.values())
    maximizers = tuple(sorted(c for c, e in pooled.items() if e >= max_re - TIE_TOL))
    below = [e for e in pooled.values() if e < max_re - TIE_TOL]
    value, witness = conjectured_max(n)
    conj = canonical_graph6(witness)
    holds = conj in maximizers and abs(max_re - value) < TIE_TOL
    return SweepResult(
        n,
        sum(len(c) for c in chunks),
        max_re,
        maximizers[0],
        maximizers,
        conj,
        value,
        holds,
        max(below) if below else None,
    )


def sweep_trees(n: int, jobs: int = 1) -> SweepResult:
    return sweep(n, families.enumerate_trees(n), jobs)


def sweep_connected(n: int, jobs: int = 1) -> SweepResult:
    return sweep(n, families.enumerate_connected_graphs(n), jobs)


def read_graph6_file(path: str) -> list[Graph]:
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    return graphs


def sweep_graph6_file(path: str, jobs: int = 1, connected_only: bool = True) -> list[SweepResult]:
    by_order: dict[int, list[Graph]] = {}
    for g in read_graph6_file(path):
        if connected_only and not is_connected(g):
            continue
        by_order.setdefault(g.n, []).append(g)
    return [sweep(n, by_order[n], jobs) for n in sorted(by_order)]


@dataclass(frozen=True)
class ExtremeResult:
    """Minimum and maximum of an energy over all trees of one order."""

    n: int
    matrix: str
    min_value: float
    min_graph6: str
    max_value: float
    max_graph6: str
    path_value: float
    star_value: float


def tree_extremes(n: int, matrix: str) -> ExtremeResult:
    trees = list(families.enumerate_trees(n))
    vals = energies(trees, matrix)
    lo = min(range(len(trees)), key=lambda i: (vals[i], canonical_graph6(trees[i])))
    hi = max(range(len(trees)), key=lambda i: (vals[i], canonical_graph6(trees[i])))
    one: Callable[[Graph], float] = lambda g: energies([g], matrix)[0]
    return ExtremeResult(
        n,
        matrix,
        vals[lo],
        canonical_graph6(trees[lo]),
        vals[hi],
        canonical_graph6(trees[hi]),
        one(families.path(n)),
        one(families.star(n)),
    )
