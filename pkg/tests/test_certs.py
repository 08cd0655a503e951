"""Certificates against the factorial permutation-class oracle."""

import random
from itertools import combinations, permutations

from blockmean.certs import (
    canonical_cert,
    canonical_form,
    graph_from_cert,
    isomorphic_brute,
)
from blockmean.graphs import build_graph, complete_graph, path_graph


def all_labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def perm_class_key(g):
    """Minimal edge set over all vertex permutations: the brute canonical form."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return (g.n, best)


def test_relabeling_invariance():
    a = build_graph(3, [(0, 1), (1, 2)])
    b = build_graph(3, [(0, 2), (2, 1)])
    assert canonical_cert(a) == canonical_cert(b)


def test_distinguishes_path_from_clique():
    assert canonical_cert(path_graph(3)) != canonical_cert(complete_graph(3))


def test_cert_partition_matches_permutation_classes():
    # For every labeled graph on up to 5 vertices (disconnected included),
    # the cert-induced partition equals the factorial-oracle partition.
    for n in range(0, 6):
        by_cert = {}
        by_perm = {}
        for g in all_labeled_graphs(n):
            by_cert.setdefault(canonical_cert(g).data, set()).add(g)
            by_perm.setdefault(perm_class_key(g), set()).add(g)
        assert sorted(map(sorted_of, by_cert.values())) == \
            sorted(map(sorted_of, by_perm.values()))


def sorted_of(graphs):
    return tuple(sorted((g.n, g.adj) for g in graphs))


def test_eleven_classes_on_four_vertices():
    certs = {canonical_cert(g).data for g in all_labeled_graphs(4)}
    perm = {perm_class_key(g) for g in all_labeled_graphs(4)}
    assert len(perm) == 11
    assert len(certs) == 11


def test_brute_agreement_on_random_relabelings():
    rng = random.Random(3)
    for n in (6, 7):
        for _ in range(40):
            pairs = list(combinations(range(n), 2))
            edges = [p for p in pairs if rng.random() < 0.4]
            g = build_graph(n, edges)
            perm = list(range(n))
            rng.shuffle(perm)
            h = build_graph(n, [(perm[u], perm[v]) for u, v in edges])
            assert canonical_cert(g) == canonical_cert(h)
            assert isomorphic_brute(g, h)


def test_brute_agreement_on_random_pairs():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(4, 7)
        pairs = list(combinations(range(n), 2))
        g = build_graph(n, [p for p in pairs if rng.random() < 0.4])
        h = build_graph(n, [p for p in pairs if rng.random() < 0.4])
        assert (canonical_cert(g) == canonical_cert(h)) == isomorphic_brute(g, h)


def test_decode_roundtrip():
    for g in (path_graph(6), complete_graph(5), build_graph(1, []),
              build_graph(0, []), build_graph(5, [(0, 3), (1, 2)])):
        cert = canonical_cert(g)
        back = graph_from_cert(cert)
        assert canonical_cert(back) == cert
        assert canonical_form(back) == back


def test_cert_hex_roundtrip():
    from blockmean.certs import CanonicalCert

    cert = canonical_cert(complete_graph(4))
    assert CanonicalCert.from_hex(cert.hex()) == cert
    assert cert.hex() == cert.hex().lower()


def test_symmetric_graphs_complete_quickly():
    # complete graphs and the friendship graph are worst cases for naive
    # ordering searches; twin pruning must keep them tractable
    canonical_cert(complete_graph(11))
    k = 5
    edges = []
    for i in range(k):
        a, b = 1 + 2 * i, 2 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    friendship = build_graph(2 * k + 1, edges)
    cert = canonical_cert(friendship)
    assert cert == canonical_cert(friendship)
