import pytest

from magnitude.chains import (
    boundary_matrix,
    count_generators,
    enumerate_generators,
    length_ell,
    magnitude_complex,
)
from magnitude.errors import GeneratorCapExceeded
from magnitude.graphs import apsp, cycle_graph, icosahedron, path_graph, rook44


def test_length_ell(c5):
    d = apsp(c5)
    assert length_ell((0,), d) == 0
    assert length_ell((0, 2, 3), d) == 3
    assert length_ell((0, 1, 0, 1), d) == 3


def test_generators_of_p3(p3):
    assert list(enumerate_generators(p3, 2, 2)) == [
        (0, 1, 0), (0, 1, 2), (1, 0, 1), (1, 2, 1), (2, 1, 0), (2, 1, 2),
    ]
    assert list(enumerate_generators(p3, 1, 2)) == [(0, 2), (2, 0)]


def test_index_set_lookup(p3):
    gens = enumerate_generators(p3, 2, 2)
    assert gens.index_of((0, 1, 2)) == 1
    assert gens.index_of((0, 2, 1)) is None
    assert (2, 1, 2) in gens


@pytest.mark.parametrize('graph', [path_graph(4), cycle_graph(5), cycle_graph(6), icosahedron()])
def test_count_matches_enumeration(graph):
    d = apsp(graph)
    for l in range(4):
        for k in range(l + 1):
            assert count_generators(graph, k, l, d) == len(enumerate_generators(graph, k, l, d))


def test_counts_outside_the_triangle_are_zero(k3):
    assert count_generators(k3, 3, 2) == 0
    assert count_generators(k3, 0, 1) == 0
    assert count_generators(k3, -1, 0) == 0
    assert count_generators(k3, 0, 0) == 3
    assert count_generators(k3, 2, 2) == 12


def test_generator_cap():
    with pytest.raises(GeneratorCapExceeded) as info:
        enumerate_generators(rook44(), 4, 4, cap=100)
    assert info.value.count == 16 * 6 ** 4
    assert "MAGNITUDE_GENERATOR_CAP" in str(info.value)


def test_boundary_of_p3(p3):
    d = boundary_matrix(p3, 2, 2)
    assert d.shape == (2, 6)
    # (0,1,2) -> -(0,2) and (2,1,0) -> -(2,0); the back-and-forth walks have no interior geodesic vertex
    assert d.triples() == [(0, 1, -1), (1, 4, -1)]


def test_boundary_in_degree_zero(p3):
    d = boundary_matrix(p3, 0, 0)
    assert d.shape == (0, 3)
    assert d.is_zero()


@pytest.mark.parametrize('graph', [cycle_graph(5), cycle_graph(6), path_graph(4), rook44()])
def test_boundary_squares_to_zero(graph):
    d = apsp(graph)
    for l in range(4):
        magnitude_complex(graph, l, d).check()


def test_magnitude_complex_layout(c5):
    cx = magnitude_complex(c5, 2)
    assert cx.sizes == [0, 10, 20]
    assert cx.grading == 2
    assert cx.label(1, 0) == (0, 2)
