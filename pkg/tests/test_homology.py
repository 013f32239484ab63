import itertools
import random
from math import gcd

import pytest
from sympy import Matrix

from magnitude.chains import magnitude_complex
from magnitude.errors import ChainComplexError
from magnitude.graphs import cycle_graph, path_graph
from magnitude.homology import (
    HomologyGroup,
    HomologyTable,
    chain_homology,
    homology,
    smith_normal_form,
)
from magnitude.matrices import SparseIntegerMatrix


def determinantal_factors(dense):
    """Invariant factors from gcds of k x k minors, computed with sympy determinants."""
    m = Matrix(dense)
    rows, cols = m.shape
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in itertools.combinations(range(rows), k):
            for c in itertools.combinations(range(cols), k):
                g = gcd(g, int(m.extract(list(r), list(c)).det()))
        if g == 0:
            break
        divisors.append(g)
    return tuple(divisors[i] // divisors[i - 1] for i in range(1, len(divisors)))


def test_smith_form_small_examples():
    assert smith_normal_form(SparseIntegerMatrix.from_dense([[2, 4], [6, 8]])).invariant_factors == (2, 4)
    assert smith_normal_form(SparseIntegerMatrix.from_dense([[2, 0], [0, 3]])).invariant_factors == (1, 6)
    form = smith_normal_form(SparseIntegerMatrix.zero(3, 2))
    assert form.rank == 0
    assert form.invariant_factors == ()


def test_smith_form_torsion():
    form = smith_normal_form(SparseIntegerMatrix.from_dense([[1, 0, 0], [0, 2, 0], [0, 0, 0]]))
    assert form.rank == 2
    assert form.torsion == (2,)


@pytest.mark.parametrize('seed', range(20))
def test_smith_form_matches_determinantal_divisors(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 4), rng.randint(1, 5)
    dense = [[rng.choice([0, 0, 1, -1, 2, -3, 4]) for _ in range(cols)] for _ in range(rows)]
    form = smith_normal_form(SparseIntegerMatrix.from_dense(dense))
    expected = determinantal_factors(dense)
    assert form.invariant_factors == expected
    assert form.rank == Matrix(dense).rank()


def test_smith_form_divisibility_chain():
    rng = random.Random(3)
    for _ in range(10):
        dense = [[rng.randint(-6, 6) * 2 for _ in range(5)] for _ in range(5)]
        factors = smith_normal_form(SparseIntegerMatrix.from_dense(dense)).invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


def test_homology_of_multiplication_by_two():
    d1 = SparseIntegerMatrix.from_dense([[2]])
    groups = chain_homology([1, 1], {1: d1})
    assert groups[0] == HomologyGroup(0, (2,))
    assert groups[1] == HomologyGroup(0)
    assert str(groups[0]) == "Z/2"


def test_homology_of_hollow_triangle(hollow_triangle):
    groups = hollow_triangle.homology()
    assert groups == {0: HomologyGroup(1), 1: HomologyGroup(1)}


def test_homology_checks_composability():
    d1 = SparseIntegerMatrix.from_dense([[1, 1]])
    d2 = SparseIntegerMatrix.from_dense([[1], [0]])
    with pytest.raises(ChainComplexError):
        homology(d1, d2)
    with pytest.raises(ChainComplexError):
        chain_homology([1, 2, 1], {1: d1, 2: d2})


def test_homology_group_rendering():
    assert str(HomologyGroup(3, (2,))) == "Z^3 + Z/2"
    assert str(HomologyGroup(0)) == "0"
    assert HomologyGroup(0).is_zero()


def test_magnitude_homology_of_p3():
    g = path_graph(3)
    ranks = {}
    for l in range(4):
        for k, group in magnitude_complex(g, l).homology().items():
            ranks[(k, l)] = group.rank
    assert [ranks[(l, l)] for l in range(4)] == [3, 4, 4, 4]
    assert all(r == 0 for (k, l), r in ranks.items() if k != l)


def test_homology_is_independent_of_generator_order():
    cx = magnitude_complex(cycle_graph(5), 3)
    d3 = cx.differential(3)
    perm = list(range(d3.cols))
    random.Random(11).shuffle(perm)
    shuffled = SparseIntegerMatrix(d3.rows, d3.cols, {(r, perm[c]): v for (r, c), v in d3.entries.items()})
    assert smith_normal_form(shuffled) == smith_normal_form(d3)


def test_table_json_shape_round_trips():
    table = HomologyTable('c5', 'naive', 1, {(0, 0): HomologyGroup(5), (1, 1): HomologyGroup(10, (2,))},
                          metadata={'seed': 1})
    data = table.to_dict()
    assert data['entries'][1] == {'k': 1, 'l': 1, 'rank': 10, 'torsion': [2]}
    assert HomologyTable.from_dict(data) == table
    assert table.euler(1) == -10
    assert table.has_torsion()
