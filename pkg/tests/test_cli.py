import json

import pytest
from click.testing import CliRunner

from app import cli, get_run_settings
from magnitude.analysis import RunConfig


@pytest.fixture
def runner():
    return CliRunner()


def test_magnitude(runner):
    result = runner.invoke(cli, ['magnitude', '-g', 'complete:3', '-n', '4'])
    assert result.exit_code == 0
    assert result.output.strip() == "#complete:3 = 3 - 6q + 12q^2 - 24q^3 + O(q^4)"


def test_magnitude_json_with_closed_form(runner):
    result = runner.invoke(cli, ['magnitude', '-g', 'cycle:5', '-n', '4', '--speyer', '--json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data == {'graph': 'cycle:5', 'coefficients': [5, -10, 10, 0],
                    'numerator': [5], 'denominator': [1, 2, 2]}


def test_magnitude_needs_a_graph(runner):
    result = runner.invoke(cli, ['magnitude'])
    assert result.exit_code == 2


def test_homology_json(runner):
    result = runner.invoke(cli, ['homology', '-g', 'complete:1', '--max-l', '0', '--format', 'json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['entries'] == [{'k': 0, 'l': 0, 'rank': 1, 'torsion': []}]
    assert data['method'] == 'naive'


def test_homology_preset(runner):
    result = runner.invoke(cli, ['homology', '-p', 'c5', '--max-l', '3', '-j', '1'])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "cycle:5  [morse:odd-cycle]"


def test_homology_writes_a_file(runner, tmp_path):
    out = tmp_path / 'p3.csv'
    result = runner.invoke(cli, ['homology', '-g', 'path:3', '--max-l', '2', '--format', 'csv', '-o', str(out)])
    assert result.exit_code == 0
    assert f"Wrote {out}" in result.output
    assert out.read_text().startswith("k,l,rank,torsion\n0,0,3,\n")


def test_homology_dumps_boundary_matrices(runner, tmp_path):
    out = tmp_path / 'matrices'
    result = runner.invoke(cli, ['homology', '-g', 'path:3', '--max-l', '2', '--dump-matrices', str(out)])
    assert result.exit_code == 0
    assert f"Wrote 3 boundary matrices to {out}" in result.output
    assert sorted(p.name for p in out.iterdir()) == ['d_1_1.txt', 'd_1_2.txt', 'd_2_2.txt']


@pytest.mark.parametrize('args', [
    ['homology', '-g', 'cycle:2'],
    ['homology', '--max-l', '2'],
    ['homology', '-g', 'cycle:5', '-m', 'morse:nosuch'],
    ['homology', '-g', 'cycle:5', '--max-l', '-1'],
    ['homology', '-g', 'cycle:5', '-m', 'morse:tree'],
])
def test_homology_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_generator_cap(runner):
    result = runner.invoke(cli, ['homology', '-g', 'rook44', '--max-l', '4', '--cap', '100', '-j', '1'])
    assert result.exit_code == 3
    assert "MAGNITUDE_GENERATOR_CAP" in result.output


def test_diagonal_check(runner):
    args = ['diagonal-check', '-g', 'cycle:5', '--max-l', '3', '-j', '1']
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert "not diagonal, MH_{2,3} has rank 10" in result.output
    assert runner.invoke(cli, args + ['--strict']).exit_code == 1


def test_verify_matching_finds_the_cycle(runner, tmp_path):
    dump = tmp_path / 'pairs.txt'
    result = runner.invoke(cli, ['verify-matching', '-g', 'nonmorse', '-r', 'nonmorse', '--max-l', '3',
                                 '--dump-matching', str(dump)])
    assert result.exit_code == 1
    assert "ZIG-ZAG CYCLE" in result.output
    assert "(1,2,4,6)" in result.output
    assert "(1,4) <-> (1,2,4)" in dump.read_text()


def test_verify_matching_uses_the_first_target(runner):
    result = runner.invoke(cli, ['verify-matching', '-r', 'tree', '--max-l', '3'])
    assert result.exit_code == 0
    assert "No --graph given, using path:4" in result.output
    assert "l=2: " in result.output


def test_verify_theorems(runner):
    result = runner.invoke(cli, ['verify-theorems', 'nonmorse'])
    assert result.exit_code == 0
    assert "[PASS] nonmorse: zig-zag cycle" in result.output
    assert "checks passed (seed 20180101)" in result.output


def test_verify_theorems_rejects_unknown_suites(runner):
    assert runner.invoke(cli, ['verify-theorems', 'nosuch']).exit_code == 2


def test_bench(runner):
    result = runner.invoke(cli, ['bench', '-g', 'path:4', '--max-l', '2', '-m', 'morse:tree'])
    assert result.exit_code == 0
    assert "l=2: |I|=[0, 4, 10] |I°|=[0, 0, 6]" in result.output
    assert "zero differentials" in result.output


def test_tables(runner):
    result = runner.invoke(cli, ['tables', '--max-l', '1', '-j', '1'])
    assert result.exit_code == 0
    assert "#rook44 = (16)/(1 + 6q + 9q^2)" in result.output
    assert "desargues  [naive]" in result.output


def test_check(runner):
    result = runner.invoke(cli, ['check'])
    assert result.exit_code == 0
    assert "Methods: naive" in result.output


def test_run_settings():
    run = get_run_settings('icosahedron', {'max_l': 2})
    assert run == RunConfig('icosahedron', lmax=2, method='morse:icosa')
    run = get_run_settings('custom', {'graph': 'cycle:5', 'deep': True, 'max_l': 2})
    assert run.lmax == 8
