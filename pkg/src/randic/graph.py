"""Simple undirected graphs, structural predicates and text formats.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable and
hashable, so it can be used as a dictionary key and shared between worker
processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

__all__ = [
    "Graph",
    "Bipartition",
    "GraphFormatError",
    "NotATreeError",
    "parse_graph6",
    "to_graph6",
    "parse_edgelist",
    "to_edgelist",
    "is_connected",
    "is_tree",
    "bipartition",
    "has_suspended_path",
    "is_TB",
    "matching_number",
]

GRAPH6_HEADER = ">>graph6<<"
_SHORT_MAX = 62
_LONG_MAX = 258047


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte offset (graph6) or line number (edge list) where
    the problem was detected, when known.
    """

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as a pair ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuple per vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = list(perm)
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})"

    # Graph holds a cached_property dict; keep pickles to the defining fields.
    def __reduce__(self):
        return (Graph, (self.n, self.edges))


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset
    side_b: frozenset

    def is_valid_for(self, g: Graph) -> bool:
        if self.side_a & self.side_b:
            return False
        if self.side_a | self.side_b != frozenset(range(g.n)):
            return False
        return all((u in self.side_a) != (v in self.side_a) for u, v in g.edges)


# --- graph6 -----------------------------------------------------------------


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)`` for the size prefix of a graph6 body."""
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    for i, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b!r} outside 63..126", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise GraphFormatError("graphs with more than 258047 vertices are not supported", 1)
    if len(data) < 4:
        raise GraphFormatError("truncated long-form vertex count", len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (the ``>>graph6<<`` header is optional)."""
    line = text.strip()
    start = 0
    if line.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
        line = line[start:]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("non-ASCII character", start + exc.start) from None

    n, header = _decode_size(data)
    if n < 1:
        raise GraphFormatError("graph6 encodes zero vertices; n >= 1 required", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[header:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}", start + len(data)
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing junk after graph6 data", start + header + nbytes)

    for j, b in enumerate(body):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b!r} outside 63..126", start + header + j)
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("nonzero padding bits", start + len(data) - 1)

    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 (no header) under its current labeling."""
    n = g.n
    if n <= _SHORT_MAX:
        out = [chr(63 + n)]
    elif n <= _LONG_MAX:
        out = ["~"] + [chr(63 + ((n >> s) & 63)) for s in (12, 6, 0)]
    else:
        raise ValueError(f"n={n} exceeds the graph6 long-form limit {_LONG_MAX}")
    bits = []
    edges = g.edges
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


# --- edge lists -------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, toks) for i, toks in lines if toks and not toks[0].startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge list")

    def ints(lineno, toks):
        if len(toks) != 2:
            raise GraphFormatError(f"expected two integers, got {' '.join(toks)!r}", lineno)
        try:
            return int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {' '.join(toks)!r}", lineno) from None

    lineno, toks = lines[0]
    n, m = ints(lineno, toks)
    if n < 1 or m < 0:
        raise GraphFormatError(f"bad header n={n} m={m}", lineno)
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(lines) - 1}", lineno)
    seen = set()
    for lineno, toks in lines[1:]:
        u, v = ints(lineno, toks)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(e)
    return Graph(n, frozenset(seen))


def to_edgelist(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(rows) + "\n"


# --- predicates -------------------------------------------------------------


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(_components(g)[0]) == g.n


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def _two_coloring(g: Graph) -> Optional[list[int]]:
    """BFS 2-coloring, the smallest vertex of every component gets color 0."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def bipartition(g: Graph) -> Optional[Bipartition]:
    """A 2-coloring of ``g`` or ``None`` when ``g`` has an odd cycle."""
    color = _two_coloring(g)
    if color is None:
        return None
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(a, frozenset(range(g.n)) - a)


def has_suspended_path(g: Graph) -> bool:
    """True iff some pendant vertex is adjacent to a vertex of degree 2."""
    deg = g.degrees
    return any(deg[g.adjacency[u][0]] == 2 for u in range(g.n) if deg[u] == 1)


def is_TB(g: Graph) -> Optional[Bipartition]:
    """Bipartition whose B side has all degrees at most 2, if one exists.

    Each connected component is oriented independently. Where both
    orientations of a component work, the one putting more degree-2
    vertices into B is kept; ties go to the orientation whose A side is
    lexicographically smaller.
    """
    color = _two_coloring(g)
    if color is None:
        return None
    deg = g.degrees
    side_a: set[int] = set()
    for comp in _components(g):
        options = []
        for a_color in (0, 1):
            a = sorted(v for v in comp if color[v] == a_color)
            b = [v for v in comp if color[v] != a_color]
            if all(deg[v] <= 2 for v in b):
                n_b2 = sum(1 for v in b if deg[v] == 2)
                options.append((-n_b2, a))
        if not options:
            return None
        side_a.update(min(options)[1])
    a = frozenset(side_a)
    return Bipartition(a, frozenset(range(g.n)) - a)


# --- matchings --------------------------------------------------------------


def _tree_matching(g: Graph) -> int:
    # Greedy leaf pairing on a leaves-to-root order of each component.
    matched = [False] * g.n
    size = 0
    for comp in _components(g):
        root = comp[0]
        parent = {root: -1}
        order = [root]
        for u in order:
            for w in g.adjacency[u]:
                if w not in parent:
                    parent[w] = u
                    order.append(w)
        for u in reversed(order):
            p = parent[u]
            if p >= 0 and not matched[u] and not matched[p]:
                matched[u] = matched[p] = True
                size += 1
    return size


def _bipartite_matching(g: Graph, part: Bipartition) -> int:
    match_of: dict[int, int] = {}

    def augment(u: int, visited: set) -> bool:
        for w in g.adjacency[u]:
            if w in visited:
                continue
            visited.add(w)
            if w not in match_of or augment(match_of[w], visited):
                match_of[w] = u
                return True
        return False

    return sum(1 for u in sorted(part.side_a) if augment(u, set()))


def _exhaustive_matching(g: Graph) -> int:
    adj = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    memo: dict[int, int] = {}

    def best(free: int) -> int:
        # free: bitmask of still-unmatched vertices that may be matched
        if free == 0:
            return 0
        if free in memo:
            return memo[free]
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        result = best(rest)
        cand = adj[v] & rest
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            result = max(result, 1 + best(rest & ~(1 << w)))
        memo[free] = result
        return result

    return best((1 << g.n) - 1)


def matching_number(g: Graph) -> int:
    """Size of a maximum matching.

    Forests use greedy leaf pairing, bipartite graphs augmenting paths and
    anything else a memoised exhaustive search (intended for n <= 12 or so).
    """
    if g.m == 0:
        return 0
    if g.m == g.n - len(_components(g)):
        return _tree_matching(g)
    part = bipartition(g)
    if part is not None:
        return _bipartite_matching(g, part)
    return _exhaustive_matching(g)
