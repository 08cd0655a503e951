"""Isomorphism-invariant graph certificates.

Two graphs get equal certificates exactly when they are isomorphic.  The
certificate encodes the vertex count and the lexicographically smallest
adjacency bitstring over all vertex orderings compatible with an iterated
degree/neighbourhood refinement; the search individualizes one vertex of
the first non-singleton cell at a time, re-refines, and prunes both on the
partial bitstring and on twin vertices (which are interchangeable by an
automorphism).

The bitstring lists, for each vertex position ``p`` in the ordering, its
adjacency to positions ``0..p-1``; placing vertices one by one therefore
extends the string by whole chunks, which is what makes prefix pruning
possible.  Certificates are decodable: the canonical graph itself can be
recovered from the byte string.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .graphs import Graph, GraphError, bits_of


@dataclass(frozen=True, order=True)
class CanonicalCert:
    """Canonical byte-string certificate of an isomorphism class."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    @staticmethod
    def from_hex(s: str) -> "CanonicalCert":
        return CanonicalCert(bytes.fromhex(s))

    def __repr__(self) -> str:
        return "CanonicalCert(%s)" % self.data.hex()


def _refine(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """Iterate (color, sorted neighbour colors) until the partition stabilizes."""
    while True:
        keys = []
        for v in range(n):
            nb = sorted(colors[u] for u in bits_of(adj[v]))
            keys.append((colors[v], tuple(nb)))
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return new
        colors = new


def _cells(colors: list[int], n: int) -> list[list[int]]:
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    """One vertex per twin class of the cell; twins swap by an automorphism."""
    reps: list[int] = []
    for v in cell:
        for u in reps:
            mask = ~((1 << u) | (1 << v))
            if adj[u] & mask == adj[v] & mask:
                break
        else:
            reps.append(v)
    return reps


def _canonical_columns(g: Graph) -> tuple[int, ...]:
    """Per-position adjacency columns of the minimal ordering."""
    n = g.n
    if n == 0:
        return ()
    adj = g.adj
    colors0 = _refine(adj, n, [0] * n)
    best: list[list[int] | None] = [None]

    def columns_for(order: list[int]) -> list[int]:
        cols = []
        for p, v in enumerate(order):
            c = 0
            av = adj[v]
            for i in range(p):
                c = (c << 1) | ((av >> order[i]) & 1)
            cols.append(c)
        return cols

    def search(colors: list[int]) -> None:
        cells = _cells(colors, n)
        prefix: list[int] = []
        first_open = None
        for cell in cells:
            if len(cell) == 1:
                prefix.append(cell[0])
            else:
                first_open = cell
                break
        cols = columns_for(prefix)
        b = best[0]
        if b is not None:
            for i, c in enumerate(cols):
                if c > b[i]:
                    return
                if c < b[i]:
                    break
        if first_open is None:
            if b is None or cols < b:
                best[0] = cols
            return
        for v in _twin_representatives(adj, first_open):
            branched = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
            order = {k: i for i, k in enumerate(sorted(set(branched)))}
            search(_refine(adj, n, [order[k] for k in branched]))

    search(colors0)
    assert best[0] is not None
    return tuple(best[0])


@lru_cache(maxsize=65536)
def canonical_cert(g: Graph) -> CanonicalCert:
    """Deterministic certificate; equal certificates iff isomorphic graphs."""
    n = g.n
    if n > 255:
        raise GraphError("certificates support at most 255 vertices")
    cols = _canonical_columns(g)
    bits: list[int] = []
    for p, c in enumerate(cols):
        bits.extend((c >> (p - 1 - i)) & 1 for i in range(p))
    packed = bytearray([n])
    for i in range(0, len(bits), 8):
        byte = 0
        for b in bits[i:i + 8]:
            byte = (byte << 1) | b
        byte <<= max(0, 8 - len(bits[i:i + 8]))
        packed.append(byte)
    return CanonicalCert(bytes(packed))


def graph_from_cert(cert: CanonicalCert) -> Graph:
    """Rebuild the canonical representative encoded by a certificate."""
    data = cert.data
    if not data:
        raise GraphError("empty certificate")
    n = data[0]
    total = n * (n - 1) // 2
    bits = []
    for byte in data[1:]:
        bits.extend((byte >> (7 - k)) & 1 for k in range(8))
    if len(bits) < total:
        raise GraphError("certificate too short for %d vertices" % n)
    edges = []
    pos = 0
    for p in range(n):
        for i in range(p):
            if bits[pos]:
                edges.append((i, p))
            pos += 1
    from .graphs import build_graph

    return build_graph(n, edges)


def canonical_form(g: Graph) -> Graph:
    """Canonically labeled copy of ``g``."""
    return graph_from_cert(canonical_cert(g))


def isomorphic_brute(g1: Graph, g2: Graph) -> bool:
    """Exhaustive isomorphism test over all vertex permutations.

    Exponential; meant as the reference oracle for certificate validation
    on small graphs.
    """
    if g1.n != g2.n:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    n = g1.n
    e1 = set(map(frozenset, g1.edges()))
    for perm in permutations(range(n)):
        if all(g2.degree(perm[v]) == g1.degree(v) for v in range(n)):
            mapped = {frozenset((perm[a], perm[b])) for a, b in e1}
            if mapped == set(map(frozenset, g2.edges())):
                return True
    return False
