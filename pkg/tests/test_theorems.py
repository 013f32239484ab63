import pytest

from magnitude.errors import GeneratorCapExceeded
from magnitude.theorems import (
    SUITES,
    CheckResult,
    check_even_cycle_shape,
    check_no_outgoing_edges,
    check_reduction,
    check_rule,
    cmd_verify_theorems,
    rule_targets,
    run_suite,
)
from magnitude.graphs import cycle_graph, path_graph
from magnitude.rules import even_cycle_rule, insert, odd_cycle_rule, table_rule, tree_rule
from magnitude.unmatched import describe_unmatched_tree


def test_check_result_rendering():
    assert str(CheckResult('odd', 'cycle:5', True, 'ok')) == "[PASS] odd: cycle:5 - ok"
    assert str(CheckResult('odd', 'cycle:5', False, 'no')) == "[FAIL] odd: cycle:5 - no"


def test_check_rule_on_a_tree(p4):
    ok, message = check_rule(tree_rule(p4), p4, 3, lambda k, l: describe_unmatched_tree(p4, k, l))
    assert ok, message
    assert "valid (diagonal)" in message


def test_check_rule_reports_an_invalid_rule(p3):
    ok, message = check_rule(table_rule(p3, {(0, 2): insert(1)}), p3, 2)
    assert not ok
    assert "INVALID" in message


def test_check_reduction_with_and_without_a_rule():
    c6 = cycle_graph(6)
    assert check_reduction(c6, even_cycle_rule(3), 3)[0]
    assert check_reduction(path_graph(4), None, 3)[0]


def test_run_suite_rejects_unknown_selectors():
    with pytest.raises(ValueError):
        list(run_suite('nosuch'))


def test_nonmorse_suite_passes():
    report = cmd_verify_theorems('nonmorse')
    assert report.passed
    assert [r.name for r in report.results] == ["rule is valid", "zig-zag cycle", "witness steps", "witness shape"]


def test_separation_suite_without_tables():
    report = cmd_verify_theorems('appendixA', lmax=2)
    assert report.passed, [str(r) for r in report.failures]
    assert report.results[-1].message == "skipped (lmax=2 < 4)"


def test_geopto_suite():
    report = cmd_verify_theorems('geopto', lmax=3)
    assert report.passed, [str(r) for r in report.failures]


def test_euler_suite_at_small_l():
    report = cmd_verify_theorems('euler', lmax=2, jobs=1)
    assert report.passed, [str(r) for r in report.failures]


def test_progress_callback_sees_every_result():
    seen = []
    report = cmd_verify_theorems('nonmorse', progress=seen.append)
    assert seen == report.results


def test_cap_propagates(monkeypatch):
    import config
    monkeypatch.setattr(config, 'GENERATOR_CAP', 10)
    with pytest.raises(GeneratorCapExceeded):
        cmd_verify_theorems('euler', lmax=2, jobs=1)


def test_every_suite_is_registered():
    assert set(SUITES) >= {'trees', 'pawful', 'icosa', 'odd', 'even', 'geopto', 'appendixA'}


def test_odd_cycle_critical_generators_are_cycles():
    rule = odd_cycle_rule(2)
    ok, message = check_no_outgoing_edges(rule, rule.graph, 4)
    assert ok, message


@pytest.mark.parametrize('m', [3, 4])
def test_even_cycle_unmatched_shapes(m):
    ok, message = check_even_cycle_shape(even_cycle_rule(m), 5)
    assert ok, message


def test_rule_targets_cover_every_rule():
    targets = list(rule_targets())
    assert sum(1 for name, _ in targets if name == 'tree') == 25
    names = {f"{name} on {graph.name}" for name, graph in targets}
    assert {"pawful on complement(cycle:6)", "pawful on complement(cycle:7)", "pawful on join(path:2,path:3)",
            "icosa on icosahedron", "icosa-mirror on icosahedron", "geopto on block3",
            "odd-cycle on cycle:5", "odd-cycle on cycle:7",
            "even-cycle on cycle:6", "even-cycle on cycle:8"} <= names


def test_oracle_checks_the_reduction_for_every_rule_target():
    report = cmd_verify_theorems('oracle', lmax=1, jobs=1)
    assert report.passed, [str(r) for r in report.failures]
    checked = [r.name for r in report.results]
    assert checked[0] == "empty matching"
    assert checked[1:] == [f"{name} on {graph.name}" for name, graph in rule_targets()]
    assert sum(1 for name in checked if name.startswith("tree on ")) == 25
