"""
Theorem verification suites

Every check returns a (success, message) tuple. A suite is a generator of
(check name, success, message); `cmd_verify_theorems` runs one suite or all
of them and collects the results.
"""

import logging
from dataclasses import dataclass, field

import config
import presets
from .analysis import check_euler, diagonality
from .chains import magnitude_complex
from .errors import ConsistencyError, GeneratorCapExceeded, MagnitudeError, RulePreconditionError
from .formats import parse_graph_spec
from .graphs import (
    all_trees,
    apsp,
    cycle_graph,
    icosahedron,
    is_block_graph,
    is_chordal,
    is_distance_hereditary,
    is_geodetic,
    is_pawful,
    is_ptolemaic,
    nonmorse_graph,
    ptolemaic_char2,
    ptolemaic_char3,
    random_connected_graphs,
    small_connected_graphs,
)
from .morse import (
    check_acyclic,
    check_witness_shape,
    empty_matching,
    homology_equivalence_check,
    reduce,
    verify_witness,
)
from .rules import (
    build_rule,
    even_cycle_rule,
    geodetic_ptolemaic_rule,
    icosahedral_rule,
    icosahedral_tables,
    nonmorse_rule,
    odd_cycle_rule,
    pawful_rule,
    slice_matching,
    tree_rule,
    validate_rule,
)
from .series import magnitude_series, speyer_magnitude
from .tables import mh_table
from .unmatched import (
    describe_unmatched_even,
    describe_unmatched_odd,
    describe_unmatched_tree,
    enumerate_unmatched,
    special_prefix_length,
    t_even,
    t_odd,
)

logger = logging.getLogger(__name__)

# The zig-zag cycle of the six-vertex example, 0-based
NONMORSE_CYCLE = frozenset({
    (0, 1, 3, 5), (0, 1, 5), (0, 1, 4, 5), (0, 4, 5),
    (0, 2, 4, 5), (0, 2, 5), (0, 2, 3, 5), (0, 3, 5),
})

EULER_GRAPHS = ('path:4', 'cycle:5', 'cycle:6', 'complement(cycle:6)', 'icosahedron',
                'rook44', 'shrikhande', 'dodecahedron', 'desargues')


# =============================================================================
# Reusable checks
# =============================================================================

def check_rule(rule, graph, lmax, describe=None):
    """
    Validity, acyclicity at every l <= lmax, and the unmatched generators:
    on the diagonal for a diagonal rule, equal to `describe(k, l)` if given.

    Returns:
        Tuple of (success: bool, message: str)
    """
    report = validate_rule(rule, graph, lmax)
    if not report.valid:
        return False, f"{rule.name} on {graph.name}: {report}"
    dist = apsp(graph)
    for l in range(lmax + 1):
        complex_ = magnitude_complex(graph, l, dist)
        matching = slice_matching(rule, complex_)
        witness = check_acyclic(complex_, matching)
        if witness is not None:
            return False, f"{rule.name} on {graph.name}, l={l}: zig-zag cycle {witness}"
        for k in range(l + 1):
            unmatched = [complex_.label(k, i) for i in range(complex_.size(k))
                         if not matching.is_matched(k, i)]
            if rule.diagonal and k != l and unmatched:
                return False, f"{rule.name} on {graph.name}: {unmatched[0]} unmatched at (k,l)=({k},{l})"
            if describe is not None and unmatched != describe(k, l):
                return False, (f"{rule.name} on {graph.name}: unmatched set at (k,l)=({k},{l}) "
                               f"has {len(unmatched)} sequences, description gives {len(describe(k, l))}")
    shape = "diagonal" if report.diagonal else "not diagonal"
    return True, f"{rule.name} on {graph.name}: valid ({shape}), acyclic up to l={lmax}"


def check_diagonal(graph, lmax, jobs=None):
    report = diagonality(mh_table(graph, lmax, 'naive', jobs))
    return report.diagonal, str(report)


def check_ranks(graph, lmax, expected, jobs=None):
    """Naive ranks equal expected(k, l) for every k <= l <= lmax, with no torsion."""
    table = mh_table(graph, lmax, 'naive', jobs)
    for l in range(lmax + 1):
        for k in range(l + 1):
            group = table.group(k, l)
            if group.torsion:
                return False, f"{graph.name}: MH_{{{k},{l}}} = {group} has torsion"
            if group.rank != expected(k, l):
                return False, f"{graph.name}: rank MH_{{{k},{l}}} = {group.rank}, expected {expected(k, l)}"
    return True, f"{graph.name}: ranks match and torsion-free up to l={lmax}"


def check_unmatched_counts(rule, graph, lmax, expected):
    for l in range(lmax + 1):
        for k in range(l + 1):
            found = len(enumerate_unmatched(rule, graph, k, l))
            if found != expected(k, l):
                return False, f"{graph.name}: {found} unmatched at (k,l)=({k},{l}), expected {expected(k, l)}"
    return True, f"{graph.name}: unmatched counts match up to l={lmax}"


def check_no_outgoing_edges(rule, graph, lmax):
    """Unmatched generators have an empty boundary column in the full complex."""
    dist = apsp(graph)
    for l in range(lmax + 1):
        complex_ = magnitude_complex(graph, l, dist)
        matching = slice_matching(rule, complex_)
        for k in range(1, l + 1):
            d = complex_.differential(k)
            for i in range(complex_.size(k)):
                if not matching.is_matched(k, i) and d.column(i):
                    return False, f"{graph.name}: unmatched {complex_.label(k, i)} has a nonzero boundary"
    return True, f"{graph.name}: unmatched generators are cycles up to l={lmax}"


def check_even_cycle_shape(rule, lmax):
    """
    On C_{2m}, an unmatched x in I_{k,l} has special prefix length 2(l-k)/(m-2),
    and for m = 3 its signed end-to-end distance is 3(l-k) + (-1, 0 or 1) mod 6.
    """
    m = rule.metadata["m"]
    ctx = rule.metadata["context"]
    for l in range(lmax + 1):
        for k in range(l + 1):
            unmatched = enumerate_unmatched(rule, rule.graph, k, l)
            if unmatched and (2 * (l - k)) % (m - 2):
                return False, f"{rule.graph.name}: {len(unmatched)} unmatched at (k,l)=({k},{l})"
            for x in unmatched:
                if special_prefix_length(x, m) != 2 * (l - k) // (m - 2):
                    return False, f"{rule.graph.name}: special prefix of {x} is {special_prefix_length(x, m)}"
                if m == 3 and (ctx.delta(x[0], x[-1]) - 3 * (l - k)) % 6 not in (5, 0, 1):
                    return False, f"{rule.graph.name}: end-to-end offset of {x} at (k,l)=({k},{l})"
    return True, f"{rule.graph.name}: unmatched shapes hold up to l={lmax}"


def check_reduction(graph, rule, lmax):
    """Homology of the reduced complex equals naive homology at every l <= lmax."""
    dist = apsp(graph)
    for l in range(lmax + 1):
        complex_ = magnitude_complex(graph, l, dist)
        matching = slice_matching(rule, complex_) if rule else empty_matching(complex_)
        if not homology_equivalence_check(complex_, reduce(complex_, matching)):
            return False, f"{graph.name}, l={l}: reduced and naive homology differ"
    name = rule.name if rule else "empty matching"
    return True, f"{graph.name} [{name}]: reduced homology equals naive up to l={lmax}"


def _corpus_check(graphs, predicate, description):
    count = 0
    for graph in graphs:
        count += 1
        if not predicate(graph):
            return False, f"{description}: fails on {graph.name} (edges {graph.edges()})"
    return True, f"{description}: holds on {count} graphs"


# =============================================================================
# Suites
# =============================================================================

def suite_trees(lmax, jobs, seed):
    for tree in all_trees(7):
        rule = tree_rule(tree)
        yield tree.name, check_rule(rule, tree, lmax, lambda k, l: describe_unmatched_tree(tree, k, l))
        yield f"{tree.name} diagonal", check_diagonal(tree, lmax, jobs)


def suite_pawful(lmax, jobs, seed):
    yield "cycle:5 is not pawful", (not is_pawful(cycle_graph(5)), "C_5 has no paw apex")
    for spec in presets.RULE_PRESETS['pawful']['targets']:
        graph = parse_graph_spec(spec)
        yield f"{spec} is pawful", (is_pawful(graph), graph.name)
        yield spec, check_rule(pawful_rule(graph), graph, lmax)
        yield f"{spec} diagonal", check_diagonal(graph, lmax, jobs)


def _icosahedral_tables_check(graph, dist):
    t = icosahedral_tables(graph, dist)
    if len(t.g_left) != 60:
        return False, f"{len(t.g_left)} ordered distance-2 pairs, expected 60"
    for (u, v), w in t.g_left.items():
        if w == t.g_right[(u, v)] or w != t.g_right[(v, u)]:
            return False, f"g_L/g_R inconsistent at ({u}, {v})"
    if t.zeta_ties:
        return False, f"zeta ties at {t.zeta_ties[0]}"
    for (u, v, w), x in t.xi.items():
        if dist[u][w] != 3 and dist[u][x] > 1:
            return False, f"d(u, xi) = {dist[u][x]} at {(u, v, w)}"
    return True, f"60 distance-2 pairs, {len(t.xi)} xi and {len(t.zeta)} zeta entries, no ties"


def suite_icosa(lmax, jobs, seed):
    graph = icosahedron()
    dist = apsp(graph)
    yield "choice tables", _icosahedral_tables_check(graph, dist)
    yield "icosahedron is not pawful", (not is_pawful(graph, dist), f"diameter {dist.diameter}")
    for chirality in (1, -1):
        yield f"chirality {chirality:+d}", check_rule(icosahedral_rule(chirality, graph=graph), graph, lmax)
    yield "icosahedron diagonal", check_diagonal(graph, lmax, jobs)


def suite_odd(lmax, jobs, seed):
    for m in (2, 3):
        rule = odd_cycle_rule(m)
        graph = rule.graph
        counts = lambda k, l, m=m: t_odd(m, k, l)
        yield f"{graph.name} rule", check_rule(rule, graph, lmax, lambda k, l, m=m: describe_unmatched_odd(m, k, l))
        yield f"{graph.name} unmatched", check_unmatched_counts(rule, graph, lmax, counts)
        yield f"{graph.name} ranks", check_ranks(graph, lmax, counts, jobs)
        yield f"{graph.name} critical cycles", check_no_outgoing_edges(rule, graph, lmax)


def _zero_differentials(rule, graph, lmax):
    dist = apsp(graph)
    for l in range(lmax + 1):
        complex_ = magnitude_complex(graph, l, dist)
        reduced = reduce(complex_, slice_matching(rule, complex_))
        for k, d in reduced.differentials.items():
            if not d.is_zero():
                return False, f"{graph.name}, l={l}: reduced d_{k} has {d.nnz} nonzero entries"
    return True, f"{graph.name}: reduced differentials vanish up to l={lmax}"


def suite_even(lmax, jobs, seed):
    for m in (3, 4):
        rule = even_cycle_rule(m)
        graph = rule.graph
        counts = lambda k, l, m=m: t_even(m, k, l)
        yield f"{graph.name} rule", check_rule(rule, graph, lmax, lambda k, l, m=m: describe_unmatched_even(m, k, l))
        yield f"{graph.name} unmatched", check_unmatched_counts(rule, graph, lmax, counts)
        yield f"{graph.name} ranks", check_ranks(graph, lmax, counts, jobs)
        yield f"{graph.name} reduced", _zero_differentials(rule, graph, lmax)
        yield f"{graph.name} shapes", check_even_cycle_shape(rule, lmax)


def suite_geopto(lmax, jobs, seed):
    for spec in presets.RULE_PRESETS['geopto']['targets']:
        graph = parse_graph_spec(spec)
        dist = apsp(graph)
        block = is_geodetic(graph, dist) and is_ptolemaic(graph, dist) and is_block_graph(graph)
        yield f"{spec} is a block graph", (block, graph.name)
        yield spec, check_rule(geodetic_ptolemaic_rule(graph), graph, lmax)
        yield f"{spec} diagonal", check_diagonal(graph, lmax, jobs)
    path = parse_graph_spec('path:4')
    same = geodetic_ptolemaic_rule(path).metadata['sigma'] == tree_rule(path).metadata['sigma']
    yield "trees: same rule as the tree rule", (same, path.name)
    try:
        geodetic_ptolemaic_rule(cycle_graph(4))
        yield "cycle:4 rejected", (False, "rule accepted C_4")
    except RulePreconditionError as exc:
        yield "cycle:4 rejected", (True, str(exc))


def suite_separation(lmax, jobs, seed):
    terms = 6
    for first, second in (('rook44', 'shrikhande'), ('dodecahedron', 'desargues')):
        g, h = parse_graph_spec(first), parse_graph_spec(second)
        closed = speyer_magnitude(g)
        same = magnitude_series(g, terms) == magnitude_series(h, terms) == closed.expand(terms)
        yield f"{first} ~ {second} magnitude", (same, f"both {closed}")
    dodeca = magnitude_series(parse_graph_spec('dodecahedron'), 3).integers()
    yield "dodecahedron series", (dodeca == [20, -60, 60], f"{dodeca}")
    if lmax < 4:
        yield "homology tables", (True, f"skipped (lmax={lmax} < 4)")
        return
    tables = {name: mh_table(parse_graph_spec(name), 4, 'naive', jobs)
              for name in ('rook44', 'shrikhande', 'dodecahedron', 'desargues')}
    rook = [tables['rook44'].rank(l, l) for l in range(5)]
    yield "rook44 diagonal", (rook == [16, 96, 432, 1728, 6480], f"{rook}")
    expected = [('rook44', 3, 0), ('shrikhande', 3, 144), ('dodecahedron', 2, 60),
                ('desargues', 2, 0), ('desargues', 3, 300)]
    for name, k, rank in expected:
        found = tables[name].rank(k, 4)
        yield f"{name} MH_{{{k},4}}", (found == rank, f"rank {found}, expected {rank}")


def suite_ptolemaic(lmax, jobs, seed):
    def characterizations(g):
        dist = apsp(g)
        p = is_ptolemaic(g, dist)
        return p == ptolemaic_char2(g, dist) == ptolemaic_char3(g, dist) == \
            (is_chordal(g) and is_distance_hereditary(g, dist))

    def geodetic_ptolemaic_is_block(g):
        dist = apsp(g)
        return (is_geodetic(g, dist) and is_ptolemaic(g, dist)) == is_block_graph(g)

    yield "ptolemaic characterizations", _corpus_check(
        small_connected_graphs(7), characterizations, "ptolemaic <=> (2) <=> (3) <=> chordal and distance-hereditary")
    yield "block graphs", _corpus_check(
        small_connected_graphs(7), geodetic_ptolemaic_is_block, "geodetic and ptolemaic <=> block graph")


def suite_nonmorse(lmax, jobs, seed):
    graph = nonmorse_graph()
    rule = nonmorse_rule(graph)
    report = validate_rule(rule, graph, max(lmax, 3))
    yield "rule is valid", (report.valid, str(report))
    complex_ = magnitude_complex(graph, 3)
    matching = slice_matching(rule, complex_)
    witness = check_acyclic(complex_, matching)
    if witness is None:
        yield "zig-zag cycle", (False, "no cycle found at l=3")
        return
    shown = witness.render(lambda seq: "(" + ",".join(graph.label(v) for v in seq) + ")")
    yield "zig-zag cycle", (set(witness.labels) == NONMORSE_CYCLE, shown)
    yield "witness steps", (verify_witness(complex_, matching, witness), f"{len(witness)} steps")
    yield "witness shape", check_witness_shape(witness)


def rule_targets():
    """(rule name, graph) for each rule on every graph it is verified against."""
    for tree in all_trees(7):
        yield 'tree', tree
    for rule_name, preset in presets.RULE_PRESETS.items():
        if rule_name in ('tree', 'nonmorse'):
            continue
        for spec in preset['targets']:
            yield rule_name, parse_graph_spec(spec)


def suite_oracle(lmax, jobs, seed):
    graphs = list(random_connected_graphs(50, 7, seed))
    yield "empty matching", _corpus_check(
        graphs, lambda g: check_reduction(g, None, lmax)[0], f"empty-matching reduction up to l={lmax}")
    for rule_name, graph in rule_targets():
        yield f"{rule_name} on {graph.name}", check_reduction(graph, build_rule(rule_name, graph), lmax)


def suite_euler(lmax, jobs, seed):
    for spec in EULER_GRAPHS:
        graph = parse_graph_spec(spec)
        try:
            check_euler(mh_table(graph, lmax, 'naive', jobs), graph)
            yield spec, (True, f"alternating sums match the magnitude up to l={lmax}")
        except ConsistencyError as exc:
            yield spec, (False, str(exc))


SUITES = {
    'trees': suite_trees,
    'pawful': suite_pawful,
    'icosa': suite_icosa,
    'odd': suite_odd,
    'even': suite_even,
    'geopto': suite_geopto,
    'appendixA': suite_separation,
    'ptolemaic': suite_ptolemaic,
    'nonmorse': suite_nonmorse,
    'oracle': suite_oracle,
    'euler': suite_euler,
}


# =============================================================================
# Runner
# =============================================================================

@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    success: bool
    message: str

    def __str__(self):
        status = "PASS" if self.success else "FAIL"
        return f"[{status}] {self.suite}: {self.name} - {self.message}"


@dataclass
class TheoremReport:
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.success for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.success]


def run_suite(selector, lmax=None, jobs=None, seed=None):
    """
    Yield a CheckResult per sub-check of one suite.

    A MagnitudeError inside a suite becomes a failed check and ends that
    suite; GeneratorCapExceeded propagates.
    """
    if selector not in SUITES:
        raise ValueError(f"unknown theorem suite: {selector} (choose from {', '.join(SUITES)})")
    lmax = presets.THEOREM_SUITES[selector]['lmax'] if lmax is None else lmax
    seed = config.SEED if seed is None else seed
    logger.info("suite %s: lmax=%d seed=%d", selector, lmax, seed)
    checks = SUITES[selector](lmax, jobs, seed)
    while True:
        try:
            name, (success, message) = next(checks)
        except StopIteration:
            return
        except GeneratorCapExceeded:
            raise
        except MagnitudeError as exc:
            yield CheckResult(selector, type(exc).__name__, False, str(exc))
            return
        yield CheckResult(selector, name, bool(success), message)


def cmd_verify_theorems(selector, lmax=None, jobs=None, seed=None, progress=None):
    """
    Run one suite, or every suite for selector 'all'.

    Args:
        progress: Optional callable receiving each CheckResult as it completes

    Returns:
        TheoremReport
    """
    selectors = list(SUITES) if selector == 'all' else [selector]
    report = TheoremReport()
    for name in selectors:
        for result in run_suite(name, lmax, jobs, seed):
            report.results.append(result)
            if progress is not None:
                progress(result)
    return report
