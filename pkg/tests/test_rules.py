import pytest

from magnitude.chains import magnitude_complex
from magnitude.errors import MatchingError, RuleError, RulePreconditionError
from magnitude.graphs import apsp, complement, cycle_graph, nonmorse_graph, path_graph
from magnitude.morse import check_acyclic, check_witness_shape, verify_witness, witness_shape
from magnitude.rules import (
    DELETE,
    IDLE,
    RULES,
    MatchState,
    build_rule,
    geodetic_ptolemaic_rule,
    icosahedral_rule,
    icosahedral_tables,
    insert,
    match_state,
    nonmorse_rule,
    odd_cycle_rule,
    even_cycle_rule,
    pawful_rule,
    slice_matching,
    table_rule,
    tree_rule,
    validate_rule,
)
from magnitude.unmatched import enumerate_unmatched

NONMORSE_CYCLE = (
    (0, 1, 3, 5), (0, 1, 5), (0, 1, 4, 5), (0, 4, 5),
    (0, 2, 4, 5), (0, 2, 5), (0, 2, 3, 5), (0, 3, 5),
)


def test_tree_rule_states(p3):
    rule = tree_rule(p3)
    assert rule((0, 2)) == insert(1)
    assert rule((0, 1, 2)) == DELETE
    assert rule((0, 1, 0)) == IDLE

    state = match_state(rule, (0, 2))
    assert state == MatchState('insert', 0, 1)
    assert str(state) == "insert(0, 1)"
    assert state.partner((0, 2)) == (0, 1, 2)

    state = match_state(rule, (0, 1, 2))
    assert str(state) == "delete(1)"
    assert state.partner((0, 1, 2)) == (0, 2)
    assert match_state(rule, (1, 0, 1)).kind == 'unmatched'


def test_tree_rule_is_valid_and_diagonal(p4):
    report = validate_rule(tree_rule(p4), p4, 4)
    assert report.valid
    assert report.diagonal
    assert report.checked > 0
    assert str(report).startswith("valid, diagonal")


def test_star_backtracking_walks_stay_unmatched(star3):
    unmatched = enumerate_unmatched(tree_rule(star3), star3, 2, 2)
    assert len(unmatched) == 6
    assert all(seq[0] == seq[2] for seq in unmatched)
    assert enumerate_unmatched(tree_rule(star3), star3, 1, 2) == []


@pytest.mark.parametrize('constructor', [tree_rule, geodetic_ptolemaic_rule])
def test_four_cycle_is_rejected(constructor):
    with pytest.raises(RulePreconditionError):
        constructor(cycle_graph(4))


def test_geodetic_ptolemaic_rule_on_a_block_graph(bowtie):
    report = validate_rule(geodetic_ptolemaic_rule(bowtie), bowtie, 4)
    assert report.valid and report.diagonal


def test_pawful_rule_needs_a_pawful_graph(c5, p4):
    with pytest.raises(RulePreconditionError, match="not pawful"):
        pawful_rule(c5)
    with pytest.raises(RulePreconditionError, match="diameter"):
        pawful_rule(p4)


def test_pawful_rule_rejects_a_bad_choice():
    with pytest.raises(RuleError, match="choice function"):
        pawful_rule(complement(cycle_graph(6)), f_choice=lambda u, v, candidates: 99)


def test_pawful_rule_with_largest_choices():
    g = complement(cycle_graph(6))
    largest = lambda *args: args[-1][-1]
    rule = pawful_rule(g, f_choice=largest, g_choice=largest)
    report = validate_rule(rule, g, 4)
    assert report.valid and report.diagonal


@pytest.mark.parametrize('m', [1, 0])
def test_odd_cycle_rule_needs_m_at_least_two(m):
    with pytest.raises(RuleError):
        odd_cycle_rule(m)


def test_even_cycle_rule_needs_m_at_least_three():
    with pytest.raises(RuleError):
        even_cycle_rule(2)


def test_cycle_rules_are_valid_but_not_diagonal():
    for rule in (odd_cycle_rule(2), even_cycle_rule(3)):
        report = validate_rule(rule, rule.graph, 5)
        assert report.valid
        assert not report.diagonal


def test_half_a_table_rule_is_invalid(p3):
    rule = table_rule(p3, {(0, 2): insert(1)})
    report = validate_rule(rule, p3, 2)
    assert not report.valid
    assert "is not delete" in report.violation
    with pytest.raises(MatchingError, match="matched to"):
        slice_matching(rule, magnitude_complex(p3, 2))


def test_insert_off_a_geodesic_is_reported(p3):
    rule = table_rule(p3, {(0, 2): insert(0)})
    with pytest.raises(RuleError, match="geodesic"):
        match_state(rule, (0, 2))


def test_nonmorse_rule_is_valid_with_a_zig_zag_cycle():
    graph = nonmorse_graph()
    rule = nonmorse_rule(graph)
    assert validate_rule(rule, graph, 3).valid

    complex_ = magnitude_complex(graph, 3)
    matching = slice_matching(rule, complex_)
    assert len(matching) == 8
    witness = check_acyclic(complex_, matching)
    assert witness is not None
    assert witness.degree == 3
    assert witness.labels == NONMORSE_CYCLE
    assert verify_witness(complex_, matching, witness)
    assert witness_shape(witness) == [(2, 1, 4), (1, 0, 2), (2, 1, 3), (1, 0, 1)]
    assert check_witness_shape(witness)[0]

    for l in range(3):
        lower = magnitude_complex(graph, l)
        assert check_acyclic(lower, slice_matching(rule, lower)) is None


def test_nonmorse_rule_only_fits_its_graph(p4):
    with pytest.raises(RulePreconditionError):
        nonmorse_rule(p4)


def test_icosahedral_tables(icosa):
    dist = apsp(icosa)
    tables = icosahedral_tables(icosa, dist)
    assert len(tables.g_left) == 60
    for (u, v), w in tables.g_left.items():
        w2 = tables.g_right[(u, v)]
        assert w != w2
        assert {w, w2} <= icosa.neighbor_sets[u] & icosa.neighbor_sets[v]
    assert tables.zeta_ties == ()
    for (u, v, w), choice in tables.xi.items():
        other = tables.g_right[(v, w)] if choice == tables.g_left[(v, w)] else tables.g_left[(v, w)]
        assert dist[choice][u] <= dist[other][u]

    mirrored = icosahedral_tables(icosa, dist, chirality=-1)
    assert mirrored.g_left == tables.g_right


@pytest.mark.parametrize('chirality', [1, -1])
def test_icosahedral_rule_is_valid_and_diagonal(icosa, chirality):
    rule = icosahedral_rule(chirality=chirality, graph=icosa)
    report = validate_rule(rule, icosa, 3)
    assert report.valid
    assert report.diagonal


def test_icosahedral_rule_arguments(p4):
    with pytest.raises(RuleError):
        icosahedral_rule(chirality=2)
    with pytest.raises(RulePreconditionError):
        icosahedral_rule(graph=p4)


def test_build_rule(c5):
    assert build_rule('odd-cycle', c5).metadata['m'] == 2
    with pytest.raises(RulePreconditionError):
        build_rule('even-cycle', c5)
    with pytest.raises(RuleError, match="unknown rule"):
        build_rule('spiral', c5)
    assert set(RULES) >= {'tree', 'geopto', 'pawful', 'icosa', 'odd-cycle', 'even-cycle', 'nonmorse'}


def test_rule_on_path_graph_generates_matching_at_every_length():
    g = path_graph(5)
    rule = tree_rule(g)
    for l in range(4):
        complex_ = magnitude_complex(g, l)
        matching = slice_matching(rule, complex_)
        unmatched = sum(complex_.size(k) for k in range(complex_.top + 1)) - 2 * len(matching)
        # rank of the diagonal for a tree on n vertices: n for l = 0, 2(n-1) after
        assert unmatched == (5 if l == 0 else 8)
