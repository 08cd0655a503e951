"""Block decomposition and block-cut-tree structure.

A block is a maximal subgraph without a cut vertex: a maximal 2-connected
subgraph, a bridge, or an isolated vertex.  The block-cut tree has one
node per block and one per cut vertex, a block joined to a cut vertex
exactly when the block contains it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graphs import Graph, GraphError


class BlockCutTree:
    """Blocks, cut vertices, and their incidence for a connected graph."""

    __slots__ = ("blocks", "cut_vertices", "incidence", "_blocks_at")

    def __init__(self, blocks: list[frozenset[int]], cut_vertices: frozenset[int]):
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "cut_vertices", cut_vertices)
        incidence = []
        blocks_at: dict[int, list[int]] = {}
        for i, b in enumerate(self.blocks):
            for v in sorted(b):
                blocks_at.setdefault(v, []).append(i)
                if v in cut_vertices:
                    incidence.append((i, v))
        object.__setattr__(self, "incidence", tuple(incidence))
        object.__setattr__(self, "_blocks_at", {v: tuple(bs) for v, bs in blocks_at.items()})

    def __setattr__(self, name, value):
        raise AttributeError("BlockCutTree is immutable")

    def blocks_at(self, v: int) -> tuple[int, ...]:
        """Indices of the blocks containing vertex ``v``."""
        return self._blocks_at.get(v, ())

    def block_cut_count(self, i: int) -> int:
        """Number of cut vertices inside block ``i`` (its tree degree)."""
        return sum(1 for v in self.blocks[i] if v in self.cut_vertices)

    def end_blocks(self) -> list[int]:
        """Blocks containing at most one cut vertex."""
        return [i for i in range(len(self.blocks)) if self.block_cut_count(i) <= 1]

    def tree_nodes(self) -> list[tuple[str, int]]:
        """Nodes of the block-cut tree: ('B', block index) and ('C', vertex)."""
        nodes: list[tuple[str, int]] = [("B", i) for i in range(len(self.blocks))]
        nodes += [("C", v) for v in sorted(self.cut_vertices)]
        return nodes

    def tree_adj(self) -> dict[tuple[str, int], list[tuple[str, int]]]:
        adj: dict[tuple[str, int], list[tuple[str, int]]] = {n: [] for n in self.tree_nodes()}
        for i, v in self.incidence:
            adj[("B", i)].append(("C", v))
            adj[("C", v)].append(("B", i))
        return adj


@lru_cache(maxsize=65536)
def block_cut_tree(g: Graph) -> BlockCutTree:
    """Decompose a connected graph into blocks via a lowpoint DFS.

    Raises ``GraphError`` naming two separated vertices if the input is
    disconnected.  The single vertex of an order-1 graph is its own block.
    """
    _require_connected(g)
    n = g.n
    if n == 1:
        return BlockCutTree([frozenset({0})], frozenset())

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    # Iterative DFS so deep paths cannot hit the recursion limit.
    stack: list[tuple[int, Iterator]] = []
    v0 = 0
    disc[v0] = low[v0] = timer
    timer += 1
    stack.append((v0, iter(list(g.neighbors(v0)))))
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                parent[u] = v
                edge_stack.append((v, u))
                disc[u] = low[u] = timer
                timer += 1
                stack.append((u, iter(list(g.neighbors(u)))))
                advanced = True
                break
            elif u != parent[v] and disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (p, v):
                        break
                blocks.append(frozenset(comp))

    membership: dict[int, int] = {}
    cut = set()
    for b in blocks:
        for v in b:
            membership[v] = membership.get(v, 0) + 1
            if membership[v] >= 2:
                cut.add(v)
    blocks.sort(key=lambda b: sorted(b))
    return BlockCutTree(blocks, frozenset(cut))


def _require_connected(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("empty graph is not connected")
    comps = g.components()
    if len(comps) > 1:
        raise GraphError(
            "graph is disconnected: vertex %d and vertex %d lie in different components"
            % (comps[0][0], comps[1][0])
        )


def cut_vertices(g: Graph) -> frozenset[int]:
    return block_cut_tree(g).cut_vertices


@lru_cache(maxsize=65536)
def is_block_graph(g: Graph) -> bool:
    """True iff every block of the connected graph ``g`` induces a clique."""
    bct = block_cut_tree(g)
    for b in bct.blocks:
        vs = sorted(b)
        for i, v in enumerate(vs):
            for u in vs[i + 1:]:
                if not g.has_edge(v, u):
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and g.edge_count() == g.n - 1


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def is_complete_graph(g: Graph) -> bool:
    return g.n >= 1 and all(g.degree(v) == g.n - 1 for v in range(g.n))


def leaves(g: Graph) -> list[int]:
    """Vertices of degree at most 1 (the single vertex of K1 counts)."""
    return [v for v in range(g.n) if g.degree(v) <= 1]


def is_caterpillar(g: Graph) -> bool:
    """Tree whose non-leaf vertices induce a path (possibly empty or trivial)."""
    if not is_tree(g):
        return False
    spine = [v for v in range(g.n) if g.degree(v) >= 2]
    if len(spine) <= 1:
        return True
    sub, _ = g.induced(spine)
    return sub.is_connected() and all(sub.degree(v) <= 2 for v in range(sub.n))


@dataclass(frozen=True)
class Antenna:
    """A pendant path from a leaf to the nearest vertex of degree >= 3.

    ``path`` lists the antenna vertices from the leaf inward, excluding the
    attachment vertex.  ``blocks`` are the blocks at the attachment vertex
    that contain no antenna vertex.
    """

    leaf: int
    path: tuple[int, ...]
    attach: int
    blocks: tuple[frozenset[int], ...]


def antennas(g: Graph) -> list[Antenna]:
    """All antennas of a connected block graph that is not a path.

    Raises ``GraphError`` on a path, where the notion is undefined.
    """
    if not is_block_graph(g):
        raise GraphError("antennas are defined for block graphs only")
    if is_path_graph(g):
        raise GraphError("antennas are undefined for a path")
    bct = block_cut_tree(g)
    out = []
    for leaf in leaves(g):
        path = [leaf]
        prev = None
        cur = leaf
        while g.degree(cur) <= 2:
            step = [u for u in g.neighbors(cur) if u != prev]
            if not step:
                raise GraphError("no branch vertex reachable from leaf %d" % leaf)
            prev, cur = cur, step[0]
            if g.degree(cur) >= 3:
                break
            path.append(cur)
        attach = cur
        path_set = set(path)
        blks = tuple(
            bct.blocks[i] for i in bct.blocks_at(attach)
            if not (bct.blocks[i] & path_set)
        )
        out.append(Antenna(leaf, tuple(path), attach, blks))
    return out
