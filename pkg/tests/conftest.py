import pytest

from magnitude.graphs import (
    build_graph,
    complete_graph,
    cycle_graph,
    icosahedron,
    path_graph,
    star_graph,
)
from magnitude.morse import BasedComplex
from magnitude.matrices import SparseIntegerMatrix


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def star3():
    return star_graph(3)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 0: the smallest block graph that is not a tree."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)], name='bowtie')


@pytest.fixture(scope='session')
def icosa():
    return icosahedron()


@pytest.fixture
def hollow_triangle():
    """Boundary of a triangle: vertices a, b, c and edges ab, ac, bc."""
    d1 = SparseIntegerMatrix.from_triples(3, 3, [
        (0, 0, -1), (1, 0, 1),
        (0, 1, -1), (2, 1, 1),
        (1, 2, -1), (2, 2, 1),
    ])
    return BasedComplex({0: ['a', 'b', 'c'], 1: ['ab', 'ac', 'bc']}, {1: d1}, name='triangle')
