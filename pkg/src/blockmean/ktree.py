"""k-trees, their block-graph duals, and the mean sub-k-tree order.

A k-tree grows from a complete graph on k vertices by repeatedly adding a
vertex adjacent to an existing k-clique.  Its dual has the (k+1)-cliques
as vertices, adjacent when they share a k-clique; the dual of a nontrivial
k-tree is a connected block graph, and with N', W' the CIS count/total
order of the dual, the mean order of the sub-k-trees of a k-tree of order
n is ``W' / (N' + (n-k)k + 1) + k``.

The brute-force oracle enumerates sub-k-trees directly: every vertex
subset inducing a k-tree of order at least k+1, plus every k-clique as a
trivial sub-k-tree (that convention makes the count come out to
``N' + (n-k)k + 1``; for k = 1 it is exactly "subtrees plus single
vertices").  Formula/oracle disagreement is reported, never reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from .cis import phi_fast
from .graphs import Graph, GraphError, build_graph, complete_graph

ORACLE_ORDER_CAP = 12


class KTreeError(GraphError):
    """Invalid k-tree construction or operation."""


@dataclass(frozen=True)
class KTree:
    """A k-tree together with its clique parameter and optional build trace."""

    graph: Graph
    k: int
    build_order: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def n(self) -> int:
        return self.graph.n

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "edges": [[u, v] for u, v in self.graph.edges()],
            "build_order": None if self.build_order is None
            else [list(c) for c in self.build_order],
        }


def _is_clique(g: Graph, vs: tuple[int, ...]) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def is_k_tree(g: Graph, k: int) -> bool:
    """Recognize k-trees by greedy simplicial elimination.

    A graph is a k-tree iff it is complete on k vertices, or it has a
    simplicial vertex of degree exactly k whose removal leaves a k-tree;
    for k-trees any such vertex works, so greedy removal is sound.
    """
    if k < 1:
        raise KTreeError("k must be positive")
    n = g.n
    if n < k:
        return False
    alive = set(range(n))
    adj = {v: set(g.neighbors(v)) for v in range(n)}
    while len(alive) > k:
        victim = -1
        for v in sorted(alive):
            nb = adj[v]
            if len(nb) == k and all(u in adj[w] for u, w in combinations(sorted(nb), 2)):
                victim = v
                break
        if victim < 0:
            return False
        for u in adj[victim]:
            adj[u].discard(victim)
        del adj[victim]
        alive.discard(victim)
    return all(len(adj[v]) == k - 1 for v in alive)


def build_k_tree(k: int, attachments: list[tuple[int, ...]]) -> KTree:
    """Grow a k-tree from K_k by the given sequence of attachment cliques.

    Each attachment names k existing vertices that must form a clique of
    the graph built so far; a new vertex joined to all of them is added.
    """
    if k < 1:
        raise KTreeError("k must be positive")
    g = complete_graph(k)
    trace = []
    for step, clique in enumerate(attachments):
        clique = tuple(clique)
        if len(set(clique)) != k:
            raise KTreeError("attachment %d is not %d distinct vertices" % (step, k))
        if any(not 0 <= v < g.n for v in clique):
            raise KTreeError("attachment %d names a missing vertex" % step)
        if not _is_clique(g, clique):
            raise KTreeError("attachment %d is not a clique" % step)
        new = g.n
        g = Graph(g.n + 1, list(g.adj) + [0]).with_edges([(v, new) for v in clique])
        trace.append(clique)
    return KTree(g, k, tuple(trace))


def random_k_tree(k: int, n: int, rng) -> KTree:
    """Seeded random k-tree of order ``n``: uniform attachment clique each step."""
    if n < k:
        raise KTreeError("order must be at least k")
    cliques = [tuple(range(k))]
    attachments = []
    cur = k
    for _ in range(n - k):
        c = cliques[rng.randrange(len(cliques))]
        attachments.append(c)
        for sub in combinations(c, k - 1):
            cliques.append(tuple(sorted(sub + (cur,))))
        cur += 1
    return build_k_tree(k, attachments)


def k_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-vertex cliques, in lexicographic vertex order."""
    return [c for c in combinations(range(g.n), k) if _is_clique(g, c)]


def dual_graph(t: KTree) -> Graph:
    """Dual on the (k+1)-cliques, adjacent when two share a k-clique."""
    if t.n <= t.k:
        raise KTreeError("dual needs a nontrivial k-tree (order > k)")
    tops = k_cliques(t.graph, t.k + 1)
    edges = []
    for i, a in enumerate(tops):
        sa = set(a)
        for j in range(i + 1, len(tops)):
            if len(sa & set(tops[j])) == t.k:
                edges.append((i, j))
    return build_graph(len(tops), edges)


def mean_sub_k_tree(t: KTree) -> Fraction:
    """Mean sub-k-tree order via the dual's CIS count and total order."""
    if not is_k_tree(t.graph, t.k):
        raise KTreeError("graph is not a %d-tree" % t.k)
    dual = dual_graph(t)
    p = phi_fast(dual)
    trivial = (t.n - t.k) * t.k + 1
    return Fraction(p.deriv_one(), p.eval_one() + trivial) + t.k


def enum_sub_k_trees_brute(t: KTree) -> Iterator[frozenset[int]]:
    """Every sub-k-tree vertex set: the k-cliques plus each subset of
    order >= k+1 inducing a k-tree.  Capped at order 12."""
    if t.n > ORACLE_ORDER_CAP:
        raise KTreeError("oracle enumeration is capped at order %d" % ORACLE_ORDER_CAP)
    g = t.graph
    for c in k_cliques(g, t.k):
        yield frozenset(c)
    for size in range(t.k + 1, t.n + 1):
        for vs in combinations(range(t.n), size):
            sub, _ = g.induced(vs)
            if is_k_tree(sub, t.k):
                yield frozenset(vs)


def sub_k_tree_mean_brute(t: KTree) -> Fraction:
    """Mean order over the enumerated sub-k-trees (the oracle side)."""
    count = 0
    total = 0
    for s in enum_sub_k_trees_brute(t):
        count += 1
        total += len(s)
    if count == 0:
        raise KTreeError("no sub-k-trees found")
    return Fraction(total, count)
