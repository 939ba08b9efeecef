"""Canonical labelings for small graphs.

Two graphs are isomorphic exactly when their :func:`canonical_graph6`
strings agree. Trees use a center-rooted AHU encoding, which stays
linear-ish even for highly symmetric trees; other graphs use a plain
individualization-refinement search that keeps the lexicographically
smallest adjacency bit string among the discrete leaves.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, is_tree, to_graph6

__all__ = ["canonical_graph6", "canonical_order", "is_isomorphic", "tree_centers"]


def tree_centers(g: Graph) -> list[int]:
    """The one or two central vertices of a tree (leaf peeling)."""
    if g.n <= 2:
        return list(range(g.n))
    deg = list(g.degrees)
    layer = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in g.adjacency[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_encoding(g: Graph, root: int, banned: int = -1) -> tuple[str, list[int]]:
    """AHU string of the subtree at ``root`` plus the induced vertex order."""
    parent = {root: banned}
    order = [root]
    for u in order:
        for w in g.adjacency[u]:
            if w != parent[u] and w != banned:
                parent[w] = u
                order.append(w)
    code: dict[int, str] = {}
    children: dict[int, list[int]] = {v: [] for v in order}
    for v in reversed(order):
        kids = sorted(children[v], key=code.__getitem__)
        children[v] = kids
        code[v] = "(" + "".join(code[c] for c in kids) + ")"
        if v != root:
            children[parent[v]].append(v)
    # preorder, children in code order: equal codes give equivalent subtrees
    seq, stack = [], [root]
    while stack:
        v = stack.pop()
        seq.append(v)
        stack.extend(reversed(children[v]))
    return code[root], seq


def _tree_order(g: Graph) -> list[int]:
    centers = tree_centers(g)
    if len(centers) == 1:
        return _rooted_encoding(g, centers[0])[1]
    a, b = centers
    ca, sa = _rooted_encoding(g, a, banned=b)
    cb, sb = _rooted_encoding(g, b, banned=a)
    return sa + sb if ca <= cb else sb + sa


def _refine(adj: list[frozenset], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; new cell order depends only on invariants."""
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[cell_of[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            for key in sorted(sig):
                new_cells.append(sig[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _bits(adj: list[frozenset], order: list[int]) -> tuple[int, ...]:
    return tuple(
        1 if order[u] in adj[order[v]] else 0 for v in range(1, len(order)) for u in range(v)
    )


def _ir_order(g: Graph) -> list[int]:
    adj = [frozenset(a) for a in g.adjacency]
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(g.degrees[v], []).append(v)
    start = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    best: list = [None, None]

    def search(cells):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = _bits(adj, order)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        cell = cells[target]
        for v in cell:
            split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1 :]
            search(_refine(adj, split))

    search(start)
    return best[1]


def canonical_order(g: Graph) -> list[int]:
    """Vertex sequence; vertex ``order[i]`` receives canonical label ``i``."""
    return _tree_order(g) if is_tree(g) else _ir_order(g)


@lru_cache(maxsize=65536)
def canonical_graph6(g: Graph) -> str:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return to_graph6(g.relabel(perm))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_graph6(g) == canonical_graph6(h)
