"""Connected-induced-subgraph (CIS) counting.

The CIS polynomial of a graph has, as its i-th coefficient, the number of
vertex subsets of size i that induce a connected subgraph.  Writing N for
the value at 1 (the count of connected induced subgraphs), W for the
derivative at 1 (the sum of their orders), the mean CIS order is the exact
rational M = W / N.

Two independent computation routes are provided and kept separate on
purpose:

* brute force, by enumerating every connected vertex subset (works on any
  graph and serves as the oracle), and
* a recursion over the block structure (fast path, block graphs only):
  at a cut vertex v with parts G_1..G_k the local polynomial satisfies
  ``phi(G, v) = x**(1-k) * prod_i phi(G_i, v)``; at a non-cut vertex v
  whose block is B, conditioning on which branches of B - v participate
  gives ``phi(G, v) = x * prod_{u in B - v} (1 + phi(G_u, u))`` where
  G_u is the component of G - E(B) containing u.  The whole-graph
  polynomial is peeled one non-cut end-block vertex at a time via
  ``phi(G) = phi(G, v) + phi(G - v)``.

Local variants restrict the count to subgraphs containing a given vertex,
all of a vertex set, or at least one of a vertex set.  Everything is exact:
integer coefficients, Fraction means.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .blocks import block_cut_tree, is_block_graph
from .graphs import Graph, GraphError, bits_of
from .poly import IntPolynomial

X = IntPolynomial.monomial(1)


# -- enumeration ---------------------------------------------------------------


def connected_set_masks(g: Graph) -> Iterator[int]:
    """All vertex subsets inducing a connected subgraph, as bitmasks.

    Anchored extension: for each anchor v in ascending order, sets whose
    minimum vertex is v are grown only through neighbours with a larger
    index, branching on the smallest allowed extension first.  Each set is
    produced exactly once, in a deterministic order.
    """
    n = g.n
    adj = g.adj
    for anchor in range(n):
        high = -1 << (anchor + 1)

        def grow(mask: int, nbrs: int, banned: int) -> Iterator[int]:
            yield mask
            ext = nbrs & ~mask & ~banned & high
            while ext:
                low = ext & -ext
                w = low.bit_length() - 1
                banned |= low
                yield from grow(mask | low, nbrs | adj[w], banned)
                ext ^= low

        yield from grow(1 << anchor, adj[anchor], 0)


def enum_connected_sets(g: Graph) -> Iterator[frozenset[int]]:
    """Stream of connected vertex sets as frozensets, deterministic order."""
    for mask in connected_set_masks(g):
        yield frozenset(bits_of(mask))


@lru_cache(maxsize=262144)
def _tally(g: Graph, want: int, mode: str) -> IntPolynomial:
    coeffs = [0] * (g.n + 1)
    if mode == "all":
        for mask in connected_set_masks(g):
            coeffs[bin(mask).count("1")] += 1
    elif mode == "superset":
        for mask in connected_set_masks(g):
            if mask & want == want:
                coeffs[bin(mask).count("1")] += 1
    else:
        for mask in connected_set_masks(g):
            if mask & want:
                coeffs[bin(mask).count("1")] += 1
    return IntPolynomial(coeffs)


def phi_brute(g: Graph) -> IntPolynomial:
    """CIS polynomial by exhaustive enumeration (any graph)."""
    return _tally(g, 0, "all")


def phi_local_brute(g: Graph, v: int) -> IntPolynomial:
    """CIS polynomial of subgraphs containing vertex ``v``, by enumeration."""
    return _tally(g, 1 << v, "superset")


def _vertex_mask(vertices: Iterable[int]) -> int:
    want = 0
    for v in vertices:
        want |= 1 << v
    return want


def phi_local_set_brute(g: Graph, vertices: Iterable[int]) -> IntPolynomial:
    """Subgraphs containing every vertex of the given set, by enumeration."""
    return _tally(g, _vertex_mask(vertices), "superset")


def phi_star_brute(g: Graph, vertices: Iterable[int]) -> IntPolynomial:
    """Subgraphs containing at least one vertex of the given set."""
    return _tally(g, _vertex_mask(vertices), "meets")


# -- block-recursion fast path --------------------------------------------------


def _require_block(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("fast CIS recursion requires a connected graph")
    if not is_block_graph(g):
        raise GraphError("fast CIS recursion requires a block graph")


@lru_cache(maxsize=65536)
def phi_local_fast(g: Graph, v: int) -> IntPolynomial:
    """Local CIS polynomial at ``v`` via the block recursion.

    Requires a connected block graph; agrees with ``phi_local_brute``.
    """
    if not (0 <= v < g.n):
        raise GraphError("vertex %d out of range" % v)
    _require_block(g)
    if g.n == 1:
        return X
    bct = block_cut_tree(g)
    if v in bct.cut_vertices:
        rest = g.delete_vertex(v)
        prod = IntPolynomial([1])
        k = 0
        for comp in rest.components():
            part = [w if w < v else w + 1 for w in comp]
            sub, index = g.induced(part + [v])
            prod = prod * phi_local_fast(sub, index[v])
            k += 1
        return prod.shift_down(k - 1)
    block = bct.blocks[bct.blocks_at(v)[0]]
    stripped = g.without_edges_inside(block)
    prod = X
    for u in sorted(block - {v}):
        comp_mask = stripped.component_mask(u)
        sub, index = stripped.induced(bits_of(comp_mask))
        prod = prod * (1 + phi_local_fast(sub, index[u]))
    return prod


@lru_cache(maxsize=65536)
def phi_fast(g: Graph) -> IntPolynomial:
    """CIS polynomial via the block recursion.

    Components of a disconnected graph contribute independently (a
    connected subgraph lives in one component), so the polynomial of a
    disconnected block graph is the sum over components.
    """
    if g.n == 0:
        return IntPolynomial.zero()
    comps = g.components()
    if len(comps) > 1:
        total = IntPolynomial.zero()
        for comp in comps:
            total = total + phi_fast(g.induced(comp)[0])
        return total
    _require_block(g)
    if g.n == 1:
        return X
    bct = block_cut_tree(g)
    end = min(bct.end_blocks(), key=lambda i: sorted(bct.blocks[i]))
    free = sorted(bct.blocks[end] - bct.cut_vertices)
    v = free[0]
    return phi_local_fast(g, v) + phi_fast(g.delete_vertex(v))


def phi(g: Graph) -> IntPolynomial:
    """CIS polynomial: block recursion when available, brute force otherwise."""
    if g.n and g.is_connected() and is_block_graph(g):
        return phi_fast(g)
    return phi_brute(g)


def phi_local(g: Graph, v: int) -> IntPolynomial:
    if g.n and g.is_connected() and is_block_graph(g):
        return phi_local_fast(g, v)
    return phi_local_brute(g, v)


# -- reports and means -----------------------------------------------------------


@dataclass(frozen=True)
class CisReport:
    """Count N, total order W, and exact mean M = W/N of a CIS collection."""

    N: int
    W: int
    M: Fraction

    @staticmethod
    def from_poly(p: IntPolynomial) -> "CisReport":
        n = p.eval_one()
        w = p.deriv_one()
        if n == 0:
            raise GraphError("no qualifying connected induced subgraphs")
        return CisReport(n, w, Fraction(w, n))

    def to_json(self) -> dict:
        return {
            "N": str(self.N),
            "W": str(self.W),
            "M": {"num": str(self.M.numerator), "den": str(self.M.denominator)},
        }


def mean(g: Graph) -> CisReport:
    """Global mean CIS order of a connected graph."""
    if g.n == 0 or not g.is_connected():
        raise GraphError("mean CIS order requires a nonempty connected graph")
    return CisReport.from_poly(phi(g))


def local_mean(g: Graph, v: int) -> CisReport:
    """Mean order of the connected induced subgraphs containing ``v``."""
    if g.n == 0 or not g.is_connected():
        raise GraphError("local mean requires a nonempty connected graph")
    if not (0 <= v < g.n):
        raise GraphError("vertex %d out of range" % v)
    return CisReport.from_poly(phi_local(g, v))


def mean_star(g: Graph, vertices: Iterable[int]) -> CisReport:
    """Mean order of subgraphs meeting the vertex set (disconnected inputs allowed)."""
    vs = list(vertices)
    if not vs:
        raise GraphError("mean_star needs a nonempty vertex set")
    return CisReport.from_poly(phi_star_brute(g, vs))


def mu(g: Graph, v: int) -> Fraction:
    """Mean order of connected induced subgraphs of ``G - v`` meeting N(v).

    Computed as ``(W_{G,v} - N_{G,v}) / (N_{G,v} - 1)``; defined for
    connected graphs of order at least 2.
    """
    if g.n < 2:
        raise GraphError("mu is undefined on graphs of order < 2")
    rep = local_mean(g, v)
    return Fraction(rep.W - rep.N, rep.N - 1)


# -- closed forms ------------------------------------------------------------------


def path_poly(n: int) -> IntPolynomial:
    """CIS polynomial of the path: n - i + 1 subpaths of order i."""
    if n < 0:
        raise ValueError("negative order")
    return IntPolynomial([0] + [n - i + 1 for i in range(1, n + 1)])


def complete_poly(n: int) -> IntPolynomial:
    """CIS polynomial of the complete graph: every nonempty subset counts."""
    if n < 0:
        raise ValueError("negative order")
    return IntPolynomial([0] + [comb(n, i) for i in range(1, n + 1)])


def broom_local_poly(s: int, n: int) -> IntPolynomial:
    """Local CIS polynomial of the (s, n-s) broom at a clique vertex:
    ``x * (1+x)**(s-1) * (1 + x + ... + x**(n-s))``."""
    if not (1 <= s <= n - 1):
        raise ValueError("broom closed form needs 1 <= s <= n-1")
    onepx = IntPolynomial([1, 1])
    acc = X
    for _ in range(s - 1):
        acc = acc * onepx
    return acc * IntPolynomial([1] * (n - s + 1))


def broom_minus_vertex_poly(s: int, n: int) -> IntPolynomial:
    """CIS polynomial of the broom minus one clique vertex:
    ``(1+x)**(s-1) * (1 + x + ... + x**(n-s)) + phi(P_{n-s-1}) - 1``."""
    if not (1 <= s <= n - 1):
        raise ValueError("broom closed form needs 1 <= s <= n-1")
    onepx = IntPolynomial([1, 1])
    acc = IntPolynomial([1])
    for _ in range(s - 1):
        acc = acc * onepx
    return acc * IntPolynomial([1] * (n - s + 1)) + path_poly(n - s - 1) - 1


def closed_form_stats(family: str, n: int, s: int | None = None):
    """Exact closed-form values for the standard families.

    * ``path``: N = C(n+1, 2), W = C(n+2, 3), hence M = (n+2)/3.
    * ``complete``: N = 2**n - 1, W = n * 2**(n-1).
    * ``path_local`` (vertex at 1-based position s): N = s(n-s+1),
      W = s(n-s+1)(n+1)/2.
    * ``broom``: the local polynomial at a clique vertex (an
      ``IntPolynomial``); the other families return a ``CisReport``.
    """
    if family == "path":
        if n < 1:
            raise ValueError("path needs n >= 1")
        N = comb(n + 1, 2)
        W = comb(n + 2, 3)
        return CisReport(N, W, Fraction(W, N))
    if family == "complete":
        if n < 1:
            raise ValueError("complete needs n >= 1")
        N = 2 ** n - 1
        W = n * 2 ** (n - 1)
        return CisReport(N, W, Fraction(W, N))
    if family == "path_local":
        if s is None or not (1 <= s <= n):
            raise ValueError("path_local needs 1 <= s <= n")
        N = s * (n - s + 1)
        W2 = s * (n - s + 1) * (n + 1)
        if W2 % 2:
            raise AssertionError("path local weight is not an integer")
        W = W2 // 2
        return CisReport(N, W, Fraction(W, N))
    if family == "broom":
        if s is None:
            raise ValueError("broom needs the clique size s")
        return broom_local_poly(s, n)
    raise ValueError("unknown family %r" % family)
