import pytest

from blockmean.blocks import block_cut_tree
from blockmean.certs import canonical_cert
from blockmean.graphs import (
    EdgeListParseError,
    GraphError,
    broom_graph,
    build_graph,
    caterpillar_graph,
    complete_graph,
    format_edge_list,
    glue_at_vertex,
    parse_edge_list,
    path_graph,
    spider_graph,
)


def test_build_basic():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert p3.edges() == [(0, 1), (1, 2)]
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.edge_count() == 3
    dup = build_graph(2, [(0, 1), (1, 0), (0, 1)])
    assert dup.edge_count() == 1


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        build_graph(2, [(0, 0)])
    with pytest.raises(GraphError, match=r"\(0, 5\)"):
        build_graph(2, [(0, 5)])


def test_components_and_connectivity():
    g = build_graph(5, [(0, 1), (2, 3)])
    assert not g.is_connected()
    assert g.components() == [(0, 1), (2, 3), (4,)]
    assert path_graph(4).is_connected()


def test_induced_subgraph():
    k4 = complete_graph(4)
    sub, index = k4.induced([1, 3])
    assert sub.n == 2 and sub.has_edge(0, 1)
    assert index == {1: 0, 3: 1}


def test_family_constructors():
    assert path_graph(1).n == 1
    assert complete_graph(4).edge_count() == 6
    for bad in (path_graph, complete_graph):
        with pytest.raises(GraphError):
            bad(0)
    with pytest.raises(GraphError):
        broom_graph(0, 2)
    with pytest.raises(GraphError):
        broom_graph(2, 0)


def test_broom_degenerate_cases():
    assert canonical_cert(broom_graph(1, 2)) == canonical_cert(path_graph(3))
    assert canonical_cert(broom_graph(2, 1)) == canonical_cert(complete_graph(3))
    assert canonical_cert(broom_graph(3, 1)) == canonical_cert(complete_graph(4))


def test_broom_block_structure():
    # The path leaf is joined to every clique vertex, so the clique block
    # has s + 1 vertices and is cyclic exactly when s >= 2.
    for s in range(1, 6):
        for t in range(1, 5):
            g = broom_graph(s, t)
            assert g.n == s + t
            cyclic = [b for b in block_cut_tree(g).blocks if len(b) >= 3]
            assert (len(cyclic) == 1) == (s >= 2)
            assert (len(cyclic) == 0) == (s == 1)
            assert len(cyclic[0]) == s + 1 if s >= 2 else True


def test_caterpillar_constructor():
    g = caterpillar_graph([1, 1])
    assert g.n == 4
    assert canonical_cert(g) == canonical_cert(path_graph(4))
    h = caterpillar_graph([2, 0, 2])
    assert h.n == 7
    with pytest.raises(GraphError):
        caterpillar_graph([])


def test_spider_constructor():
    g = spider_graph([2, 2, 1])
    assert g.n == 6
    assert g.degree(0) == 3
    with pytest.raises(GraphError):
        spider_graph([0, 1])


def test_glue_paths():
    g = glue_at_vertex(path_graph(2), 1, path_graph(2), 0)
    assert canonical_cert(g) == canonical_cert(path_graph(3))
    # gluing K2 onto an end of P3 makes P4
    g = glue_at_vertex(complete_graph(2), 0, path_graph(3), 0)
    assert canonical_cert(g) == canonical_cert(path_graph(4))


def test_glue_at_path_center():
    # K3 glued at the middle of P3: 5 vertices, glued vertex of degree 4.
    g = glue_at_vertex(complete_graph(3), 0, path_graph(3), 1)
    assert g.n == 5
    assert g.degree(0) == 4
    assert 0 in block_cut_tree(g).cut_vertices


def test_glue_relabels_to_zero():
    g = glue_at_vertex(path_graph(3), 2, path_graph(2), 0)
    assert g.n == 4
    # glued vertex is 0 and carries both neighbourhoods
    assert g.degree(0) == 2


def test_glue_adds_block_counts():
    h = broom_graph(3, 2)
    g = spider_graph([1, 2])
    glued = glue_at_vertex(h, 1, g, 0)
    nh = len(block_cut_tree(h).blocks)
    ng = len(block_cut_tree(g).blocks)
    assert len(block_cut_tree(glued).blocks) == nh + ng


def test_glue_bad_vertices():
    with pytest.raises(GraphError):
        glue_at_vertex(path_graph(2), 5, path_graph(2), 0)


def test_edge_list_roundtrip():
    g = broom_graph(3, 2)
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_comments_and_whitespace():
    text = "# a graph\n3 2\n0 1  # first\n\n1 2\n"
    g = parse_edge_list(text)
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("2 1\n0 0\n", 2),
    ("2 2\n0 1\n", 1),
    ("x y\n", 1),
    ("2 1\n0 9\n", 2),
    ("3 1\n0\n", 2),
])
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(EdgeListParseError) as err:
        parse_edge_list(text)
    assert err.value.line_no == line


def test_graph_immutable_and_hashable():
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 5
    assert hash(g) == hash(build_graph(3, [(0, 1), (1, 2)]))
