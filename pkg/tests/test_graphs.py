import networkx as nx
import pytest

from magnitude.errors import GraphError
from magnitude.graphs import (
    all_trees,
    apsp,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    desargues,
    dodecahedron,
    fan,
    is_block_graph,
    is_chordal,
    is_distance_hereditary,
    is_geodetic,
    is_pawful,
    is_ptolemaic,
    is_tree,
    join,
    named_graph,
    nonmorse_graph,
    path_graph,
    pawless_triples,
    ptolemaic_char2,
    ptolemaic_char3,
    random_connected_graphs,
    rook44,
    shrikhande,
    small_connected_graphs,
)


def test_build_graph_merges_duplicate_edges():
    g = build_graph(3, [(0, 1), (1, 0), (1, 2), (0, 2), (2, 0)])
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))
    assert g.edge_count == 3


def test_build_graph_k2():
    g = build_graph(2, [(0, 1)])
    assert g.edges() == [(0, 1)]
    assert g.is_connected


@pytest.mark.parametrize('n, edges', [
    (2, [(0, 0)]),
    (2, [(0, 2)]),
    (3, [(-1, 1)]),
    (0, []),
])
def test_build_graph_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_disconnected_graph_is_flagged_and_has_no_distances():
    g = build_graph(3, [(0, 1)])
    assert not g.is_connected
    with pytest.raises(GraphError, match="disconnected"):
        apsp(g)


def test_label_count_must_match():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 1)], labels=['x'])


def test_apsp_small_graphs(p3, c5):
    assert apsp(p3)[0][2] == 2
    d = apsp(c5)
    assert d[0][2] == 2
    assert d[0][3] == 2
    assert d.diameter == 2


def test_distance_matrix_is_a_metric(icosa):
    d = apsp(icosa)
    n = icosa.vertex_count
    for u in range(n):
        assert d[u][u] == 0
        for v in range(n):
            assert d[u][v] == d[v][u]
            assert (d[u][v] == 1) == (v in icosa.neighbor_sets[u])
            for w in range(n):
                assert d[u][w] <= d[u][v] + d[v][w]


def test_icosahedron(icosa):
    d = apsp(icosa)
    assert icosa.vertex_count == 12
    assert icosa.edge_count == 30
    assert d.diameter == 3
    assert all(d.profile(v) == (1, 5, 5, 1) for v in range(12))


@pytest.mark.parametrize('constructor', [rook44, shrikhande])
def test_z4z4_cayley_graphs(constructor):
    g = constructor()
    d = apsp(g)
    assert g.vertex_count == 16
    assert all(g.degree(v) == 6 for v in range(16))
    assert all(d.profile(v) == (1, 6, 9) for v in range(16))


def test_rook_and_shrikhande_differ():
    assert rook44().adjacency != shrikhande().adjacency
    assert rook44().label(5) == "(1,1)"


@pytest.mark.parametrize('constructor', [dodecahedron, desargues])
def test_cubic_graphs_on_twenty_vertices(constructor):
    g = constructor()
    d = apsp(g)
    assert g.vertex_count == 20
    assert all(d.profile(v) == (1, 3, 6, 6, 3, 1) for v in range(20))


def test_join_and_complement():
    k2 = join(complete_graph(1), complete_graph(1))
    assert k2.adjacency == ((1,), (0,))
    c6_bar = complement(cycle_graph(6))
    assert all(c6_bar.degree(v) == 3 for v in range(6))
    assert fan().vertex_count == 4


def test_nonmorse_graph_labels():
    g = nonmorse_graph()
    assert g.edge_count == 8
    assert [g.label(v) for v in range(6)] == ['1', '2', '3', '4', '5', '6']
    assert apsp(g)[0][5] == 3


@pytest.mark.parametrize('name, params', [
    ('cycle', (2,)),
    ('cycle', ('x',)),
    ('rook44', (3,)),
    ('nosuch', ()),
    ('join', (path_graph(2),)),
])
def test_named_graph_errors(name, params):
    with pytest.raises(GraphError):
        named_graph(name, *params)


def test_named_graph_tree():
    g = named_graph('tree', [(0, 1), (1, 2), (1, 3)])
    assert is_tree(g)
    with pytest.raises(GraphError, match="not a tree"):
        named_graph('tree', [(0, 1), (1, 2), (0, 2)])


def test_pawful_examples(c5):
    assert is_pawful(complement(cycle_graph(6)))
    assert is_pawful(join(path_graph(2), path_graph(3)))
    assert not is_pawful(c5)
    assert list(pawless_triples(c5, apsp(c5)))[0] == (0, 3, 1)


def test_pawful_needs_diameter_two(p4):
    assert not is_pawful(p4)


def test_metric_predicates(bowtie):
    c4 = cycle_graph(4)
    assert not is_geodetic(c4)
    assert is_distance_hereditary(c4)
    assert not is_chordal(c4)
    assert not is_ptolemaic(c4)
    assert not is_block_graph(c4)

    assert is_geodetic(cycle_graph(5))
    assert not is_distance_hereditary(cycle_graph(5))

    for g in (bowtie, complete_graph(4), path_graph(5)):
        assert is_geodetic(g)
        assert is_ptolemaic(g)
        assert is_block_graph(g)


def test_distance_hereditary_on_the_house():
    house = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)], name='house')
    assert not is_distance_hereditary(house)
    # {0, 1, 3} induces a disconnected subgraph of P4, which must not count against it
    assert is_distance_hereditary(path_graph(4))


def test_connectivity_matches_networkx():
    assert not build_graph(4, [(0, 1), (2, 3)]).is_connected
    for g in small_connected_graphs(5):
        assert g.is_connected
        assert nx.is_connected(g.to_networkx())


def test_ptolemaic_characterizations_agree():
    for g in small_connected_graphs(6):
        d = apsp(g)
        expected = is_chordal(g) and is_distance_hereditary(g, d)
        assert is_ptolemaic(g, d) == expected, g.edges()
        assert ptolemaic_char2(g, d) == expected, g.edges()
        assert ptolemaic_char3(g, d) == expected, g.edges()


def test_geodetic_ptolemaic_graphs_are_block_graphs():
    for g in small_connected_graphs(6):
        d = apsp(g)
        assert (is_geodetic(g, d) and is_ptolemaic(g, d)) == is_block_graph(g), g.edges()


def test_corpora_sizes():
    assert len(list(all_trees(7))) == 25
    assert len(list(small_connected_graphs(4))) == 10
    with pytest.raises(GraphError):
        list(small_connected_graphs(8))


def test_random_graphs_are_reproducible():
    first = [g.adjacency for g in random_connected_graphs(5, 6, seed=7)]
    second = [g.adjacency for g in random_connected_graphs(5, 6, seed=7)]
    assert first == second
    assert all(g.is_connected for g in random_connected_graphs(5, 6, seed=7))
