"""
Magnitude package - magnitude and magnitude homology of graphs
"""

from .errors import (
    MagnitudeError,
    GraphError,
    GeneratorCapExceeded,
    ChainComplexError,
    RuleError,
    RulePreconditionError,
    MatchingError,
    ConsistencyError
)
from .graphs import (
    Graph,
    DistanceMatrix,
    build_graph,
    apsp,
    named_graph,
    is_pawful,
    is_geodetic,
    is_ptolemaic,
    ptolemaic_char2,
    ptolemaic_char3,
    is_chordal,
    is_distance_hereditary,
    is_block_graph
)
from .series import PowerSeries, RationalFunction, magnitude_series, speyer_magnitude, chain_euler
from .chains import IndexSet, length_ell, count_generators, enumerate_generators, boundary_matrix, magnitude_complex
from .matrices import SparseIntegerMatrix
from .homology import SmithForm, HomologyGroup, HomologyTable, smith_normal_form, homology
from .morse import (
    BasedComplex,
    ReducedComplex,
    Matching,
    CycleWitness,
    empty_matching,
    validate_matching,
    check_acyclic,
    reduce,
    homology_equivalence_check
)
from .rules import (
    MatchingRule,
    match_state,
    validate_rule,
    generate_matching,
    tree_rule,
    geodetic_ptolemaic_rule,
    pawful_rule,
    icosahedral_rule,
    odd_cycle_rule,
    even_cycle_rule,
    nonmorse_rule,
    build_rule
)
from .unmatched import enumerate_unmatched, t_odd, t_even
from .tables import mh_table
from .formats import parse_graph_spec
from .analysis import RunConfig, DiagonalityReport, cmd_magnitude, cmd_homology, cmd_dump_matrices, cmd_diagonal_check, cmd_verify_matching, cmd_bench, cmd_tables
from .theorems import cmd_verify_theorems
from .dependencies import check_dependencies, get_available_methods

__all__ = [
    'MagnitudeError',
    'GraphError',
    'GeneratorCapExceeded',
    'ChainComplexError',
    'RuleError',
    'RulePreconditionError',
    'MatchingError',
    'ConsistencyError',
    'Graph',
    'DistanceMatrix',
    'build_graph',
    'apsp',
    'named_graph',
    'is_pawful',
    'is_geodetic',
    'is_ptolemaic',
    'ptolemaic_char2',
    'ptolemaic_char3',
    'is_chordal',
    'is_distance_hereditary',
    'is_block_graph',
    'PowerSeries',
    'RationalFunction',
    'magnitude_series',
    'speyer_magnitude',
    'chain_euler',
    'IndexSet',
    'length_ell',
    'count_generators',
    'enumerate_generators',
    'boundary_matrix',
    'magnitude_complex',
    'SparseIntegerMatrix',
    'SmithForm',
    'HomologyGroup',
    'HomologyTable',
    'smith_normal_form',
    'homology',
    'BasedComplex',
    'ReducedComplex',
    'Matching',
    'CycleWitness',
    'empty_matching',
    'validate_matching',
    'check_acyclic',
    'reduce',
    'homology_equivalence_check',
    'MatchingRule',
    'match_state',
    'validate_rule',
    'generate_matching',
    'tree_rule',
    'geodetic_ptolemaic_rule',
    'pawful_rule',
    'icosahedral_rule',
    'odd_cycle_rule',
    'even_cycle_rule',
    'nonmorse_rule',
    'build_rule',
    'enumerate_unmatched',
    't_odd',
    't_even',
    'mh_table',
    'parse_graph_spec',
    'RunConfig',
    'DiagonalityReport',
    'cmd_magnitude',
    'cmd_homology',
    'cmd_dump_matrices',
    'cmd_diagonal_check',
    'cmd_verify_matching',
    'cmd_bench',
    'cmd_tables',
    'cmd_verify_theorems',
    'check_dependencies',
    'get_available_methods'
]
