"""Named graph families and exhaustive enumeration of small trees and graphs.

Constructions use a fixed numbering so that graph6 output is reproducible:
the center comes first, then each spoke in order (middle vertex, then its
leaf).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from .canon import canonical_graph6
from .graph import Graph, is_connected

__all__ = [
    "sun",
    "double_sun",
    "balanced_double_sun",
    "balanced_parameters",
    "path",
    "star",
    "cycle",
    "complete",
    "starlike",
    "edge_double_subdivision",
    "enumerate_trees",
    "enumerate_graphs",
    "enumerate_connected_graphs",
    "from_family_spec",
    "CONNECTED_GRAPH_MAX_N",
    "TREE_MAX_N",
]

TREE_MAX_N = 20
CONNECTED_GRAPH_MAX_N = 7


def _sun_edges(p: int, offset: int = 0) -> list[tuple[int, int]]:
    c = offset
    edges = []
    for i in range(p):
        mid, leaf = offset + 1 + 2 * i, offset + 2 + 2 * i
        edges += [(c, mid), (mid, leaf)]
    return edges


def sun(p: int) -> Graph:
    """The p-sun: star on p+1 vertices with every edge subdivided."""
    if p < 0:
        raise ValueError(f"sun needs p >= 0, got {p}")
    return Graph.from_edges(2 * p + 1, _sun_edges(p))


def double_sun(p: int, q: int) -> Graph:
    """Centers of sun(p) (vertex 0) and sun(q) (vertex 2p+1) joined by an edge."""
    if q < 0 or p < q:
        raise ValueError(f"double sun needs p >= q >= 0, got p={p}, q={q}")
    second = 2 * p + 1
    edges = _sun_edges(p) + _sun_edges(q, offset=second) + [(0, second)]
    return Graph.from_edges(2 * (p + q + 1), edges)


def balanced_parameters(n: int) -> tuple[int, int]:
    if n < 2 or n % 2:
        raise ValueError(f"balanced double sun needs an even order n >= 2, got {n}")
    if n % 4 == 2:
        p = (n - 2) // 4
        return p, p
    return n // 4, n // 4 - 1


def balanced_double_sun(n: int) -> Graph:
    return double_sun(*balanced_parameters(n))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """Star on n vertices with center 0."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def starlike(arms: Sequence[int]) -> Graph:
    """Paths of the given lengths glued at a common center (vertex 0)."""
    arms = list(arms)
    if len(arms) < 3:
        raise ValueError(f"starlike tree needs at least 3 arms, got {len(arms)}")
    if any(a < 1 for a in arms):
        raise ValueError(f"arm lengths must be >= 1, got {arms}")
    edges, nxt = [], 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph.from_edges(nxt, edges)


def edge_double_subdivision(g: Graph) -> Graph:
    """Replace every edge uv by a path u - w_e - v through a new vertex.

    New vertices are numbered ``n, n+1, ...`` following ``g.sorted_edges()``.
    """
    edges = []
    for k, (u, v) in enumerate(g.sorted_edges()):
        w = g.n + k
        edges += [(u, w), (v, w)]
    return Graph.from_edges(g.n + g.m, edges)


# --- trees ------------------------------------------------------------------
#
# A rooted tree is stored as its level sequence (depths in preorder) with the
# children of every vertex in non-increasing canonical order. Free trees are
# produced once each by rooting them at their centroid: a unicentroidal tree
# is a root whose branches all have fewer than n/2 vertices, a bicentroidal
# tree is an unordered pair of n/2-vertex rooted trees joined at their roots.


@lru_cache(maxsize=None)
def _rooted_trees(size: int) -> tuple[tuple[int, ...], ...]:
    """All rooted trees with ``size`` vertices, canonical level sequences."""
    if size == 1:
        return ((0,),)
    return tuple(_forests_as_trees(size - 1, size - 1))


def _branch_pool(max_size: int) -> list[tuple[int, ...]]:
    # one fixed total order over branches: larger first, then reverse-lex
    pool = [t for s in range(max_size, 0, -1) for t in _rooted_trees(s)]
    return pool


def _forests_as_trees(total: int, max_branch: int) -> Iterator[tuple[int, ...]]:
    """Roots whose branches (size <= max_branch) have ``total`` vertices."""
    pool = _branch_pool(max_branch)
    sizes = [len(t) for t in pool]

    def pick(remaining: int, start: int, chosen: list[int]):
        if remaining == 0:
            seq = [0]
            for idx in chosen:
                seq.extend(d + 1 for d in pool[idx])
            yield tuple(seq)
            return
        for idx in range(start, len(pool)):
            if sizes[idx] <= remaining:
                chosen.append(idx)
                yield from pick(remaining - sizes[idx], idx, chosen)
                chosen.pop()

    yield from pick(total, 0, [])


def _level_sequence_edges(seq: Sequence[int], offset: int = 0) -> list[tuple[int, int]]:
    edges, stack = [], []
    for i, depth in enumerate(seq):
        del stack[depth:]
        if stack:
            edges.append((offset + stack[-1], offset + i))
        stack.append(i)
    return edges


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, deterministic order.

    Vertex 0 is a centroid of each emitted tree.
    """
    if not 1 <= n <= TREE_MAX_N:
        raise ValueError(f"tree enumeration supports 1 <= n <= {TREE_MAX_N}, got {n}")
    if n == 1:
        yield Graph(1)
        return
    for seq in _forests_as_trees(n - 1, (n - 1) // 2):
        yield Graph.from_edges(n, _level_sequence_edges(seq))
    if n % 2 == 0:
        half = n // 2
        for left, right in combinations_with_replacement(_rooted_trees(half), 2):
            edges = _level_sequence_edges(left) + _level_sequence_edges(right, half)
            edges.append((0, half))
            yield Graph.from_edges(n, edges)


# --- general graphs ---------------------------------------------------------


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all simple graphs on n vertices.

    Every graph on n vertices is some graph on n-1 vertices plus one vertex,
    so extending each representative by every neighbour set and deduplicating
    on canonical form is exhaustive.
    """
    if n == 1:
        return (Graph(1),)
    seen: dict[str, Graph] = {}
    for base in _all_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            extra = [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            g = Graph.from_edges(n, list(base.edges) + extra)
            key = canonical_graph6(g)
            if key not in seen:
                seen[key] = g
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    if not 1 <= n <= CONNECTED_GRAPH_MAX_N:
        raise ValueError(
            f"built-in graph enumeration stops at n={CONNECTED_GRAPH_MAX_N}; "
            "generate larger orders externally (e.g. nauty geng) and read the graph6 file"
        )
    yield from _all_graphs(n)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One connected graph per isomorphism class on ``n`` vertices (n <= 7)."""
    return (g for g in enumerate_graphs(n) if is_connected(g))


# --- family spec strings ----------------------------------------------------

_FAMILIES = {
    "sun": (sun, 1),
    "double-sun": (double_sun, 2),
    "balanced-double-sun": (balanced_double_sun, 1),
    "path": (path, 1),
    "star": (star, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "starlike": (lambda *arms: starlike(arms), None),
}


def from_family_spec(spec: str) -> Graph:
    """Build a graph from ``"name:p1,p2,..."``, e.g. ``"double-sun:3,2"``.

    Underscores are accepted in place of dashes in the name.
    """
    name, sep, params = spec.strip().partition(":")
    name = name.replace("_", "-").lower()
    if name not in _FAMILIES or not sep:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family spec {spec!r}; expected name:params with name in {known}")
    try:
        args = [int(tok) for tok in params.split(",")]
    except ValueError:
        raise ValueError(f"family parameters must be integers, got {params!r}") from None
    build, arity = _FAMILIES[name]
    if arity is not None and len(args) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(args)}")
    return build(*args)
