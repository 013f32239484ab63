"""
Desk-scale reproductions. These take minutes; run with `pytest -m slow`.
"""

import pytest

from magnitude.analysis import cmd_bench, RunConfig
from magnitude.graphs import rook44, shrikhande, dodecahedron, desargues
from magnitude.tables import mh_table
from magnitude.theorems import cmd_verify_theorems
from magnitude.unmatched import t_odd

pytestmark = pytest.mark.slow


@pytest.mark.parametrize('selector', [
    'trees', 'pawful', 'icosa', 'odd', 'even', 'geopto', 'ptolemaic', 'nonmorse', 'oracle', 'euler',
])
def test_suite_passes(selector):
    report = cmd_verify_theorems(selector)
    assert report.passed, [str(r) for r in report.failures]


def test_rook_and_shrikhande_tables():
    rook = mh_table(rook44(), 4, jobs=1)
    shr = mh_table(shrikhande(), 4, jobs=1)
    assert [rook.rank(l, l) for l in range(5)] == [16, 96, 432, 1728, 6480]
    assert rook.rank(3, 4) == 0
    assert shr.rank(3, 4) == 144
    assert not rook.has_torsion()


def test_dodecahedron_and_desargues_tables():
    dod = mh_table(dodecahedron(), 4, jobs=1)
    des = mh_table(desargues(), 4, jobs=1)
    assert dod.rank(2, 4) == 60
    assert des.rank(2, 4) == 0
    assert des.rank(3, 4) == 300


def test_seven_cycle_reduction_at_l5():
    rows = cmd_bench(RunConfig('cycle:7', lmax=5, method='morse:odd-cycle', jobs=1))
    assert rows[5].reduced == [t_odd(3, k, 5) for k in range(6)]
    assert all(r.agree for r in rows)
