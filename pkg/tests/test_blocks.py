"""Block decomposition against an independent subset-maximality oracle."""

import random
from itertools import combinations

import pytest

from blockmean.blocks import (
    antennas,
    block_cut_tree,
    is_block_graph,
    is_caterpillar,
    is_complete_graph,
    is_path_graph,
    is_tree,
    leaves,
)
from blockmean.graphs import (
    Graph,
    GraphError,
    build_graph,
    complete_graph,
    path_graph,
    spider_graph,
)


def all_labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def oracle_cut_vertices(g):
    return frozenset(
        v for v in range(g.n)
        if g.n >= 2 and len(g.delete_vertex(v).components()) > 1
    )


def oracle_blocks(g):
    """Maximal vertex sets of size >= 2 inducing a connected subgraph with
    no internal cut vertex (bridges included); K1 is its own block."""
    if g.n == 1:
        return [frozenset({0})]
    good = []
    for size in range(2, g.n + 1):
        for vs in combinations(range(g.n), size):
            sub, _ = g.induced(vs)
            if sub.is_connected() and not oracle_cut_vertices(sub):
                good.append(frozenset(vs))
    return [b for b in good if not any(b < other for other in good)]


def random_connected_graph(n, rng):
    while True:
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.3]
        g = build_graph(n, edges)
        if g.is_connected():
            return g


def test_path_decomposition():
    bct = block_cut_tree(path_graph(4))
    assert len(bct.blocks) == 3
    assert all(len(b) == 2 for b in bct.blocks)
    assert bct.cut_vertices == frozenset({1, 2})


def test_complete_decomposition():
    bct = block_cut_tree(complete_graph(4))
    assert bct.blocks == (frozenset({0, 1, 2, 3}),)
    assert bct.cut_vertices == frozenset()


def test_triangle_with_pendant():
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    bct = block_cut_tree(g)
    assert set(bct.blocks) == {frozenset({0, 1, 2}), frozenset({2, 3})}
    assert bct.cut_vertices == frozenset({2})


def test_single_vertex_is_its_own_block():
    bct = block_cut_tree(complete_graph(1))
    assert bct.blocks == (frozenset({0}),)


def test_disconnected_rejected_with_witness():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError, match="vertex 0 and vertex 2"):
        block_cut_tree(g)


def test_blocks_match_oracle_exhaustively_small():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            if not g.is_connected():
                continue
            bct = block_cut_tree(g)
            assert sorted(bct.blocks, key=sorted) == sorted(oracle_blocks(g), key=sorted)
            assert bct.cut_vertices == oracle_cut_vertices(g)


def test_blocks_match_oracle_random():
    rng = random.Random(7)
    for _ in range(40):
        g = random_connected_graph(rng.randint(6, 9), rng)
        bct = block_cut_tree(g)
        assert sorted(bct.blocks, key=sorted) == sorted(oracle_blocks(g), key=sorted)
        assert bct.cut_vertices == oracle_cut_vertices(g)


def test_every_edge_in_exactly_one_block_and_tree_incidence():
    rng = random.Random(11)
    graphs = [random_connected_graph(rng.randint(4, 12), rng) for _ in range(40)]
    graphs += [g for n in range(1, 7) for g in all_labeled_graphs(n) if g.is_connected()]
    for g in graphs:
        bct = block_cut_tree(g)
        for u, v in g.edges():
            containing = [b for b in bct.blocks if u in b and v in b]
            assert len(containing) == 1
        # incidence forms a tree over blocks + cut vertices
        nodes = len(bct.blocks) + len(bct.cut_vertices)
        assert len(bct.incidence) == nodes - 1
        adj = bct.tree_adj()
        seen = set()
        stack = [next(iter(adj))] if adj else []
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x])
        assert len(seen) == nodes
        # every cut vertex lies in at least two blocks
        for v in bct.cut_vertices:
            assert len(bct.blocks_at(v)) >= 2


def test_is_block_graph():
    assert is_block_graph(path_graph(5))
    assert is_block_graph(spider_graph([2, 2, 1]))
    assert is_block_graph(build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))
    assert not is_block_graph(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    with pytest.raises(GraphError):
        is_block_graph(build_graph(4, [(0, 1), (2, 3)]))


def test_structure_predicates():
    assert is_tree(path_graph(4))
    assert is_path_graph(path_graph(1))
    assert not is_path_graph(spider_graph([1, 1, 1]))
    assert is_complete_graph(complete_graph(1))
    assert not is_complete_graph(path_graph(3))
    assert leaves(path_graph(1)) == [0]
    assert leaves(path_graph(3)) == [0, 2]


def test_is_caterpillar():
    assert is_caterpillar(path_graph(1))
    assert is_caterpillar(path_graph(7))
    assert is_caterpillar(spider_graph([1, 1, 1, 1]))  # star
    assert is_caterpillar(build_graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]))
    assert not is_caterpillar(spider_graph([2, 2, 2]))
    assert not is_caterpillar(complete_graph(3))


def test_antennas_on_star():
    result = antennas(spider_graph([1, 1, 1]))
    assert len(result) == 3
    assert all(a.attach == 0 and len(a.path) == 1 for a in result)
    # the blocks at the center not containing the antenna are the other two legs
    assert all(len(a.blocks) == 2 for a in result)


def test_antennas_on_spider():
    result = antennas(spider_graph([2, 2, 1]))
    assert sorted(len(a.path) for a in result) == [1, 2, 2]
    assert all(a.attach == 0 for a in result)


def test_antennas_reject_path():
    with pytest.raises(GraphError):
        antennas(path_graph(5))


def test_antennas_on_block_graph_with_clique():
    # triangle with a 2-path hanging off one corner
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])
    result = antennas(g)
    assert len(result) == 1
    assert result[0].leaf == 4
    assert result[0].path == (4, 3)
    assert result[0].attach == 0
    assert frozenset({0, 1, 2}) in result[0].blocks
