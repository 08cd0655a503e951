"""CIS engine: enumeration oracle, brute/fast equivalence, closed forms."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from blockmean.cis import (
    CisReport,
    broom_local_poly,
    broom_minus_vertex_poly,
    closed_form_stats,
    complete_poly,
    enum_connected_sets,
    local_mean,
    mean,
    mean_star,
    mu,
    path_poly,
    phi_brute,
    phi_fast,
    phi_local_brute,
    phi_local_fast,
    phi_local_set_brute,
    phi_star_brute,
)
from blockmean.graphs import (
    GraphError,
    broom_graph,
    build_graph,
    complete_graph,
    path_graph,
    spider_graph,
)
from blockmean.poly import IntPolynomial
from blockmean.search import block_graph_classes, connected_graph_classes, \
    random_connected_block_graph

PAW = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def subsets_inducing_connected(g):
    """Independent filter over all 2^n subsets (breadth-first connectivity)."""
    out = []
    for size in range(1, g.n + 1):
        for vs in combinations(range(g.n), size):
            seen = {vs[0]}
            frontier = [vs[0]]
            inside = set(vs)
            while frontier:
                x = frontier.pop()
                for y in g.neighbors(x):
                    if y in inside and y not in seen:
                        seen.add(y)
                        frontier.append(y)
            if seen == inside:
                out.append(frozenset(vs))
    return out


def test_enum_path3():
    sets = list(enum_connected_sets(path_graph(3)))
    assert sets == [
        frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2}),
        frozenset({1}), frozenset({1, 2}), frozenset({2}),
    ]
    assert frozenset({0, 2}) not in sets


def test_enum_clique_and_empty():
    assert len(list(enum_connected_sets(complete_graph(3)))) == 7
    assert list(enum_connected_sets(build_graph(0, []))) == []


def test_enum_matches_subset_filter_and_is_duplicate_free():
    rng = random.Random(2)
    graphs = [path_graph(5), complete_graph(4), PAW, spider_graph([2, 1])]
    for _ in range(20):
        n = rng.randint(1, 8)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.35]
        graphs.append(build_graph(n, edges))
    for g in graphs:
        got = list(enum_connected_sets(g))
        assert len(got) == len(set(got))
        assert sorted(got, key=sorted) == sorted(subsets_inducing_connected(g), key=sorted)


def test_phi_brute_examples():
    assert phi_brute(path_graph(3)) == IntPolynomial([0, 3, 2, 1])
    assert phi_brute(complete_graph(3)) == IntPolynomial([0, 3, 3, 1])
    assert phi_brute(complete_graph(1)) == IntPolynomial([0, 1])
    rep = CisReport.from_poly(phi_brute(PAW))
    assert (rep.N, rep.W, rep.M) == (12, 25, Fraction(25, 12))


def test_phi_star_and_set_brute():
    assert phi_star_brute(complete_graph(2), [0, 1]).eval_one() == 3
    # subgraphs of the paw containing both triangle vertices 1 and 2
    p = phi_local_set_brute(PAW, [1, 2])
    assert p.eval_one() == 3  # {1,2}, {0,1,2}, {0,1,2,3}
    assert p.deriv_one() == 2 + 3 + 4


def test_phi_local_examples():
    assert phi_local_brute(path_graph(2), 0) == IntPolynomial([0, 1, 1])
    assert phi_local_fast(path_graph(2), 1) == IntPolynomial([0, 1, 1])
    center = phi_local_fast(path_graph(3), 1)
    assert center == IntPolynomial([0, 1, 2, 1])
    rep = local_mean(path_graph(3), 1)
    assert (rep.N, rep.W, rep.M) == (4, 8, Fraction(2))
    assert phi_local_fast(complete_graph(3), 0) == IntPolynomial([0, 1, 2, 1])


def test_fast_equals_brute_exhaustive_small():
    for n in range(1, 8):
        for g in block_graph_classes(n):
            assert phi_fast(g) == phi_brute(g)
            for v in range(g.n):
                assert phi_local_fast(g, v) == phi_local_brute(g, v)


def test_fast_equals_brute_random():
    rng = random.Random(9)
    for _ in range(60):
        g = random_connected_block_graph(rng.randint(1, 12), rng)
        assert phi_fast(g) == phi_brute(g)
        v = rng.randrange(g.n)
        assert phi_local_fast(g, v) == phi_local_brute(g, v)


def test_fast_rejects_non_block_graphs():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(GraphError):
        phi_fast(c4)
    with pytest.raises(GraphError):
        phi_local_fast(c4, 0)


def test_fast_on_disconnected_sums_components():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4)])
    assert phi_fast(g) == phi_brute(g)
    assert phi_fast(g).eval_one() == 3 + 6


def test_partition_identity_exhaustive():
    for n in range(1, 7):
        for g in connected_graph_classes(n):
            whole = phi_brute(g)
            for v in range(g.n):
                split = phi_local_brute(g, v) + phi_brute(g.delete_vertex(v))
                assert whole == split


def test_mean_examples_and_errors():
    assert mean(path_graph(3)).M == Fraction(5, 3)
    assert mean(complete_graph(3)).M == Fraction(12, 7)
    with pytest.raises(GraphError):
        mean(build_graph(3, [(0, 1)]))
    with pytest.raises(GraphError):
        mean(build_graph(0, []))


def test_mu_examples_and_identity():
    k3 = complete_graph(3)
    assert mu(k3, 0) == Fraction(4, 3) == mean(complete_graph(2)).M
    assert mu(path_graph(3), 0) == Fraction(3, 2)
    with pytest.raises(GraphError):
        mu(complete_graph(1), 0)
    # mu equals the at-least-one mean over the deleted graph's old
    # neighbourhood, including when deletion disconnects the graph
    rng = random.Random(4)
    for _ in range(25):
        g = random_connected_block_graph(rng.randint(2, 9), rng)
        v = rng.randrange(g.n)
        nbrs = [u if u < v else u - 1 for u in g.neighbors(v)]
        assert mu(g, v) == mean_star(g.delete_vertex(v), nbrs).M


def test_mean_star_example():
    assert mean_star(complete_graph(2), [0, 1]).M == Fraction(4, 3)
    with pytest.raises(GraphError):
        mean_star(complete_graph(2), [])


def test_mean_bounds_invariant():
    rng = random.Random(6)
    for _ in range(30):
        g = random_connected_block_graph(rng.randint(1, 10), rng)
        rep = mean(g)
        assert rep.N >= g.n and rep.W >= rep.N
        assert 1 <= rep.M <= g.n
        p = phi_fast(g)
        assert p.coeffs[0] == 0 and p.coeffs[1] == g.n and p.coeffs[g.n] == 1
        assert all(c >= 1 for c in p.coeffs[1:])


def test_closed_form_path():
    for n in range(1, 31):
        rep = closed_form_stats("path", n)
        engine = mean(path_graph(n))
        assert (rep.N, rep.W, rep.M) == (engine.N, engine.W, engine.M)
        assert rep.M == Fraction(n + 2, 3)
    assert closed_form_stats("path", 3).N == 6
    assert closed_form_stats("path", 3).W == 10


def test_closed_form_complete():
    for n in range(1, 21):
        rep = closed_form_stats("complete", n)
        engine = mean(complete_graph(n))
        assert (rep.N, rep.W, rep.M) == (engine.N, engine.W, engine.M)
        assert rep.M == Fraction(n * 2 ** (n - 1), 2 ** n - 1)
    assert closed_form_stats("complete", 3).M == Fraction(12, 7)


def test_closed_form_path_local():
    for n in range(1, 31):
        for s in range(1, n + 1):
            rep = closed_form_stats("path_local", n, s)
            engine = local_mean(path_graph(n), s - 1)
            assert (rep.N, rep.W) == (engine.N, engine.W)
    three = closed_form_stats("path_local", 3, 1)
    assert (three.N, three.W) == (3, 6)


def test_closed_form_broom():
    for n in range(2, 17):
        for s in range(1, n):
            local = closed_form_stats("broom", n, s)
            assert local == phi_local_fast(broom_graph(s, n - s), 0)
            assert broom_minus_vertex_poly(s, n) == \
                phi_fast(broom_graph(s, n - s).delete_vertex(0))


def test_closed_form_errors():
    with pytest.raises(ValueError):
        closed_form_stats("path", 0)
    with pytest.raises(ValueError):
        closed_form_stats("path_local", 3, 4)
    with pytest.raises(ValueError):
        closed_form_stats("nonsense", 3)


def test_path_and_complete_polys():
    assert path_poly(3) == IntPolynomial([0, 3, 2, 1])
    assert complete_poly(3) == IntPolynomial([0, 3, 3, 1])
    assert path_poly(0).is_zero()
    assert broom_local_poly(1, 3) == IntPolynomial([0, 1, 1, 1])
