"""Isomorph-free generation of graph families and extremal scans.

Connected block graphs are generated order by order: every class with at
least two blocks arises from a smaller class by attaching a new end-block
clique at some vertex, and the lone-block class is the complete graph.
Candidates are deduplicated by canonical certificate, so correctness needs
no parent rule, only certificate soundness.  Small general connected
graphs are generated the same way by attaching one new vertex to every
nonempty subset of a smaller class (every connected graph has a non-cut
vertex, so this reaches everything).

Scans report the exact minimum and maximum mean CIS order over a family
together with every certificate attaining them.  Results are deterministic
across runs and worker counts: candidate order is fixed, deduplication
keeps the first candidate per certificate, and ties are sorted by
certificate bytes.

Setting a cache directory stores one certificate file per generated order
(plain hex lines); later runs rebuild the graphs by decoding them.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .blocks import is_caterpillar
from .certs import CanonicalCert, canonical_cert, graph_from_cert
from .cis import phi_brute, phi_fast
from .graphs import Graph, GraphError, build_graph, complete_graph, path_graph
from .lemmas import Verdict

CONNECTED_ORDER_CAP = 8

_block_classes: dict[int, tuple[Graph, ...]] = {}
_connected_classes: dict[int, tuple[Graph, ...]] = {}


# -- worker helpers (top level so they pickle) ----------------------------------


def _cert_of_candidate(item: tuple[int, int, tuple[tuple[int, int], ...]]):
    idx, n, edges = item
    return idx, canonical_cert(build_graph(n, edges)).data


def _mean_of_candidate(item: tuple[int, int, tuple[tuple[int, int], ...], bool]):
    idx, n, edges, fast = item
    g = build_graph(n, edges)
    p = phi_fast(g) if fast else phi_brute(g)
    return idx, p.deriv_one(), p.eval_one()


def _map_indexed(fn, items, workers: int):
    """Apply ``fn`` over indexed items, serially or via a process pool;
    results come back ordered by index either way."""
    if workers <= 1 or len(items) < 64:
        results = [fn(item) for item in items]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(16, len(items) // (workers * 8))
            results = list(pool.map(fn, items, chunksize=chunk))
    results.sort(key=lambda r: r[0])
    return results


# -- deduplicated generation -----------------------------------------------------


def _dedup_candidates(candidates: list[Graph], workers: int) -> tuple[Graph, ...]:
    items = [(i, g.n, tuple(g.edges())) for i, g in enumerate(candidates)]
    certs = _map_indexed(_cert_of_candidate, items, workers)
    chosen: dict[bytes, Graph] = {}
    for idx, data in certs:
        if data not in chosen:
            chosen[data] = candidates[idx]
    return tuple(g for _, g in sorted(chosen.items()))


def _cache_file(cache_dir: str, family: str, n: int) -> str:
    return os.path.join(cache_dir, "%s_n%d.certs" % (family, n))


def _load_cached(cache_dir: str, family: str, n: int) -> Optional[tuple[Graph, ...]]:
    path = _cache_file(cache_dir, family, n)
    if not os.path.exists(path):
        return None
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(graph_from_cert(CanonicalCert.from_hex(line)))
    return tuple(graphs)


def _store_cached(cache_dir: str, family: str, n: int, graphs: tuple[Graph, ...]) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_file(cache_dir, family, n)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(canonical_cert(g).hex() + "\n")
    os.replace(tmp, path)


def _attach_end_clique(parent: Graph, v: int, j: int) -> Graph:
    """Attach a new clique on ``j`` fresh vertices plus vertex ``v``."""
    base = parent.n
    fresh = range(base, base + j)
    edges = parent.edges()
    edges += [(v, w) for w in fresh]
    edges += [(a, b) for a in fresh for b in fresh if a < b]
    return build_graph(base + j, edges)


def block_graph_classes(n: int, cache_dir: Optional[str] = None,
                        workers: int = 1) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected block graphs
    of order ``n``, sorted by certificate."""
    if n < 1:
        raise GraphError("order must be positive")
    for m in range(1, n + 1):
        if m in _block_classes:
            continue
        if cache_dir:
            cached = _load_cached(cache_dir, "block", m)
            if cached is not None:
                _block_classes[m] = cached
                continue
        if m == 1:
            reps: tuple[Graph, ...] = (complete_graph(1),)
        else:
            candidates = [complete_graph(m)]
            for q in range(1, m):
                j = m - q
                for parent in _block_classes[q]:
                    for v in range(parent.n):
                        candidates.append(_attach_end_clique(parent, v, j))
            reps = _dedup_candidates(candidates, workers)
        _block_classes[m] = reps
        if cache_dir:
            _store_cached(cache_dir, "block", m, reps)
    return _block_classes[n]


def gen_block_graphs(n: int, cache_dir: Optional[str] = None, workers: int = 1):
    """Stream the block-graph classes of order ``n`` in certificate order."""
    yield from block_graph_classes(n, cache_dir, workers)


def connected_graph_classes(n: int, cache_dir: Optional[str] = None,
                            workers: int = 1) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs.

    Hard-capped at order 8: beyond that the class counts leave desk scale.
    """
    if n < 1:
        raise GraphError("order must be positive")
    if n > CONNECTED_ORDER_CAP:
        raise GraphError("connected-graph generation is capped at order %d"
                         % CONNECTED_ORDER_CAP)
    for m in range(1, n + 1):
        if m in _connected_classes:
            continue
        if cache_dir:
            cached = _load_cached(cache_dir, "connected", m)
            if cached is not None:
                _connected_classes[m] = cached
                continue
        if m == 1:
            reps: tuple[Graph, ...] = (complete_graph(1),)
        else:
            candidates = []
            for parent in _connected_classes[m - 1]:
                base_edges = parent.edges()
                for subset in range(1, 1 << parent.n):
                    edges = list(base_edges)
                    for v in range(parent.n):
                        if subset >> v & 1:
                            edges.append((v, m - 1))
                    candidates.append(build_graph(m, edges))
            reps = _dedup_candidates(candidates, workers)
        _connected_classes[m] = reps
        if cache_dir:
            _store_cached(cache_dir, "connected", m, reps)
    return _connected_classes[n]


def gen_connected_graphs(n: int, cache_dir: Optional[str] = None, workers: int = 1):
    """Stream the connected-graph classes of order ``n`` in certificate order."""
    yield from connected_graph_classes(n, cache_dir, workers)


def random_connected_block_graph(order: int, rng) -> Graph:
    """Seeded random connected block graph built by end-clique attachment."""
    if order < 1:
        raise GraphError("order must be positive")
    g = complete_graph(1)
    while g.n < order:
        j = rng.randint(1, order - g.n)
        v = rng.randrange(g.n)
        g = _attach_end_clique(g, v, j)
    return g


# -- extremal scans ---------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    """Exact extremes of the mean CIS order over one generated family."""

    family: str
    n: int
    count: int
    min_mean: Fraction
    max_mean: Fraction
    argmin: tuple[CanonicalCert, ...]
    argmax: tuple[CanonicalCert, ...]
    elapsed: float

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "count": self.count,
            "min": {"num": str(self.min_mean.numerator),
                    "den": str(self.min_mean.denominator)},
            "max": {"num": str(self.max_mean.numerator),
                    "den": str(self.max_mean.denominator)},
            "argmin": [c.hex() for c in self.argmin],
            "argmax": [c.hex() for c in self.argmax],
        }

    def csv_row(self) -> list[str]:
        return [
            str(self.n), str(self.count),
            str(self.min_mean.numerator), str(self.min_mean.denominator),
            str(self.max_mean.numerator), str(self.max_mean.denominator),
            ";".join(c.hex() for c in self.argmin),
            ";".join(c.hex() for c in self.argmax),
        ]


CSV_HEADER = ["n", "count", "min_num", "min_den", "max_num", "max_den",
              "argmin", "argmax"]


def extremal_scan(family: str, n: int, cache_dir: Optional[str] = None,
                  workers: int = 1) -> SearchResult:
    """Exact min/max mean CIS order over a family, with all attaining certs."""
    start = time.monotonic()
    if family == "block":
        graphs = block_graph_classes(n, cache_dir, workers)
        fast = True
    elif family == "connected":
        graphs = connected_graph_classes(n, cache_dir, workers)
        fast = False
    else:
        raise GraphError("unknown family %r (want 'block' or 'connected')" % family)
    if not graphs:
        raise GraphError("empty family")

    items = [(i, g.n, tuple(g.edges()), fast) for i, g in enumerate(graphs)]
    means = [(idx, Fraction(w, c)) for idx, w, c in _map_indexed(_mean_of_candidate, items, workers)]
    lo = min(m for _, m in means)
    hi = max(m for _, m in means)
    argmin = sorted(canonical_cert(graphs[idx]) for idx, m in means if m == lo)
    argmax = sorted(canonical_cert(graphs[idx]) for idx, m in means if m == hi)
    return SearchResult(family, n, len(graphs), lo, hi, tuple(argmin),
                        tuple(argmax), time.monotonic() - start)


def check_min_theorem(n: int, cache_dir: Optional[str] = None,
                      workers: int = 1) -> Verdict:
    """The path is the unique block-graph minimizer, at mean (n + 2) / 3."""
    result = extremal_scan("block", n, cache_dir, workers)
    expected = Fraction(n + 2, 3)
    path_cert = canonical_cert(path_graph(n))
    holds = result.min_mean == expected and result.argmin == (path_cert,)
    return Verdict("min_theorem", True, holds, "n=%d" % n,
                   result.min_mean, expected)


def check_max_conjecture(n: int, cache_dir: Optional[str] = None,
                         workers: int = 1) -> Verdict:
    """Maximizers: the complete graph for orders 3-4, caterpillars beyond."""
    if n < 3:
        return Verdict("max_conjecture", False, True, "n=%d" % n,
                       reason="stated for n >= 3")
    result = extremal_scan("block", n, cache_dir, workers)
    if n in (3, 4):
        holds = result.argmax == (canonical_cert(complete_graph(n)),)
    else:
        holds = all(is_caterpillar(graph_from_cert(c)) for c in result.argmax)
    return Verdict("max_conjecture", True, holds, "n=%d" % n,
                   result.max_mean, None)
