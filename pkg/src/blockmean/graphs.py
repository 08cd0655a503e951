"""Finite simple undirected graphs with vertices ``0..n-1``.

Graphs are immutable after construction.  Adjacency is stored as one
bitmask per vertex (bit ``u`` of ``adj[v]`` set iff ``uv`` is an edge),
which keeps subset/connectivity work fast for the exhaustive searches
built on top of this module.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__("line %d: %s" % (line_no, message))
        self.line_no = line_no


class Graph:
    """Simple undirected graph on vertex set ``{0, ..., n-1}``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError("negative vertex count")
        if len(adj) != n:
            raise GraphError("adjacency length mismatch")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n,) + tuple(adj)))
        for v in range(n):
            if self.adj[v] >> n:
                raise GraphError("adjacency bit out of range at vertex %d" % v)
            if self.adj[v] & (1 << v):
                raise GraphError("self-loop at vertex %d" % v)
        for v in range(n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] & (1 << v):
                    raise GraphError("asymmetric adjacency %d-%d" % (v, u))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            u = v + 1
            while m:
                if m & 1:
                    out.append((v, u))
                m >>= 1
                u += 1
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.n)), reverse=True))

    # -- connectivity ------------------------------------------------------

    def component_mask(self, start: int) -> int:
        """Bitmask of the connected component containing ``start``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[tuple[int, ...]]:
        """Vertex tuples of the connected components, in ascending order."""
        out = []
        remaining = (1 << self.n) - 1
        while remaining:
            start = _lowest_bit(remaining)
            mask = self.component_mask(start)
            out.append(tuple(_bits(mask)))
            remaining &= ~mask
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    # -- derived graphs ----------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on ``vertices`` plus the old->new vertex map."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for i, v in enumerate(vs):
            for u in _bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph(len(vs), adj), index

    def delete_vertex(self, v: int) -> "Graph":
        keep = [u for u in range(self.n) if u != v]
        return self.induced(keep)[0]

    def delete_vertices(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        keep = [u for u in range(self.n) if u not in drop]
        return self.induced(keep)[0]

    def without_edges_inside(self, vertices: Iterable[int]) -> "Graph":
        """Copy with every edge between two vertices of ``vertices`` removed."""
        mask = 0
        for v in vertices:
            mask |= 1 << v
        adj = list(self.adj)
        for v in _bits(mask):
            adj[v] &= ~mask
        return Graph(self.n, adj)

    def with_edges(self, extra: Iterable[tuple[int, int]],
                   removed: Iterable[tuple[int, int]] = ()) -> "Graph":
        adj = list(self.adj)
        for u, v in removed:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        for u, v in extra:
            if u == v:
                raise GraphError("self-loop (%d, %d)" % (u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, adj)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __repr__(self) -> str:
        return "Graph(n=%d, edges=%r)" % (self.n, self.edges())


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def bits_of(mask: int) -> Iterator[int]:
    """Iterate set bit positions of ``mask`` in ascending order."""
    return _bits(mask)


# -- construction ------------------------------------------------------------


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Rejects self-loops and out-of-range endpoints, naming the offending
    pair in the error message.
    """
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError("self-loop (%d, %d)" % (u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("vertex out of range in edge (%d, %d)" % (u, v))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def broom_graph(s: int, t: int) -> Graph:
    """Clique of size ``s`` fully joined to one end of a path of ``t`` vertices.

    Vertices ``0..s-1`` form the clique; ``s..s+t-1`` form the path, with
    vertex ``s`` adjacent to every clique vertex.  ``broom_graph(1, t)`` is
    the path on ``t + 1`` vertices and ``broom_graph(n - 1, 1)`` is the
    complete graph on ``n`` vertices.
    """
    if s < 1 or t < 1:
        raise GraphError("broom needs s >= 1 and t >= 1")
    edges = [(i, j) for i in range(s) for j in range(i + 1, s)]
    edges += [(i, s) for i in range(s)]
    edges += [(s + i, s + i + 1) for i in range(t - 1)]
    return build_graph(s + t, edges)


def caterpillar_graph(legs: Sequence[int]) -> Graph:
    """Caterpillar tree: a spine path with ``legs[i]`` pendant leaves at spine ``i``."""
    k = len(legs)
    if k < 1:
        raise GraphError("caterpillar needs a nonempty spine")
    if any(l < 0 for l in legs):
        raise GraphError("leg counts must be nonnegative")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, l in enumerate(legs):
        for _ in range(l):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def spider_graph(leg_lengths: Sequence[int]) -> Graph:
    """Tree made of disjoint paths (legs) sharing one center vertex 0."""
    if any(l < 1 for l in leg_lengths):
        raise GraphError("leg lengths must be positive")
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def glue_at_vertex(h: Graph, v: int, g: Graph, u: int) -> Graph:
    """Identify vertex ``v`` of ``h`` with vertex ``u`` of ``g``.

    The result has ``|h| + |g| - 1`` vertices, relabeled so that the glued
    vertex is 0, the remaining vertices of ``h`` follow in ascending order,
    then the remaining vertices of ``g``.
    """
    if not (0 <= v < h.n):
        raise GraphError("glue vertex %d out of range for first graph" % v)
    if not (0 <= u < g.n):
        raise GraphError("glue vertex %d out of range for second graph" % u)
    h_map = {v: 0}
    i = 1
    for w in range(h.n):
        if w != v:
            h_map[w] = i
            i += 1
    g_map = {u: 0}
    for w in range(g.n):
        if w != u:
            g_map[w] = i
            i += 1
    edges = [(h_map[a], h_map[b]) for a, b in h.edges()]
    edges += [(g_map[a], g_map[b]) for a, b in g.edges()]
    return build_graph(h.n + g.n - 1, edges)


# -- edge-list text format ----------------------------------------------------
#
# Line 1: "n m".  Then m lines "u v" (0-indexed).  '#' starts a comment.


def parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, list[str]]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((line_no, line.split()))
    if not rows:
        raise EdgeListParseError(1, "empty input")
    line_no, header = rows[0]
    if len(header) != 2:
        raise EdgeListParseError(line_no, "expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(line_no, "non-integer header") from None
    if n < 0 or m < 0:
        raise EdgeListParseError(line_no, "negative header value")
    if len(rows) - 1 != m:
        raise EdgeListParseError(line_no, "expected %d edge lines, found %d" % (m, len(rows) - 1))
    edges = []
    for line_no, parts in rows[1:]:
        if len(parts) != 2:
            raise EdgeListParseError(line_no, "expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, "non-integer endpoint") from None
        if u == v:
            raise EdgeListParseError(line_no, "self-loop (%d, %d)" % (u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_no, "vertex out of range in edge (%d, %d)" % (u, v))
        edges.append((u, v))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = ["%d %d" % (g.n, len(edges))]
    lines += ["%d %d" % (u, v) for u, v in edges]
    return "\n".join(lines) + "\n"
