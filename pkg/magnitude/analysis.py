"""
Command implementations behind the CLI

Each cmd_* takes plain arguments or a RunConfig and returns a result object;
printing and exit codes are left to app.py.
"""

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path

import config
from .chains import magnitude_complex
from .errors import ConsistencyError
from .formats import format_matching, parse_graph_spec, write_matrix_dump
from .graphs import apsp, dodecahedron, desargues, rook44, shrikhande
from .morse import check_acyclic, empty_matching, reduce
from .rules import build_rule, slice_matching, validate_rule
from .series import chain_euler, magnitude_series, speyer_magnitude
from .tables import mh_table, parse_method

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Settings for one CLI run, built from config defaults plus options."""

    graph: str
    lmax: int = config.DEFAULT_MAX_L
    method: str = 'naive'
    output: str = None
    fmt: str = 'pretty'
    jobs: int = config.JOBS
    cap: int = config.GENERATOR_CAP
    seed: int = config.SEED

    def __post_init__(self):
        if self.lmax < 0:
            raise ValueError(f"lmax must be non-negative, got {self.lmax}")
        if self.cap < 1:
            raise ValueError(f"generator cap must be at least 1, got {self.cap}")
        if self.fmt not in ('pretty', 'json', 'csv'):
            raise ValueError(f"unknown format: {self.fmt}")
        parse_method(self.method)

    def load_graph(self):
        return parse_graph_spec(self.graph)


# =============================================================================
# magnitude
# =============================================================================

@dataclass
class MagnitudeReport:
    graph: str
    series: object
    rational: object = None

    def lines(self):
        lines = [f"#{self.graph} = {self.series}"]
        if self.rational is not None:
            lines.append(f"#{self.graph} = {self.rational}")
        return lines


def cmd_magnitude(graph, terms=None, speyer=False):
    """Magnitude series of `graph`, with the closed form when `speyer` is set."""
    terms = config.DEFAULT_TERMS if terms is None else terms
    dist = apsp(graph)
    series = magnitude_series(graph, terms, dist)
    rational = None
    if speyer:
        rational = speyer_magnitude(graph, 0, dist)
        if rational.expand(terms) != series:
            raise ConsistencyError(f"{graph.name}: closed form {rational} does not expand to {series}")
    return MagnitudeReport(graph.name, series, rational)


# =============================================================================
# homology and diagonality
# =============================================================================

def check_euler(table, graph):
    """
    Raise ConsistencyError unless every row's alternating rank sum is the
    matching coefficient of the magnitude.
    """
    dist = apsp(graph)
    for l in range(table.lmax + 1):
        expected = chain_euler(graph, l, dist)
        if table.euler(l) != expected:
            raise ConsistencyError(f"{graph.name}, l={l}: sum of (-1)^k rank MH_{{k,l}} is "
                                   f"{table.euler(l)}, magnitude coefficient is {expected}")


def cmd_homology(run, graph=None):
    """
    MH_{k,l} table for the configured graph and method, checked against the
    magnitude before it is returned.
    """
    graph = graph or run.load_graph()
    table = mh_table(graph, run.lmax, run.method, run.jobs, run.cap)
    table.metadata['seed'] = run.seed
    check_euler(table, graph)
    return table


def cmd_dump_matrices(graph, lmax, directory, cap=None):
    """
    Write every boundary matrix d_{k,l} with 1 <= k <= l <= lmax to
    `directory/d_<k>_<l>.txt`.

    Returns:
        List of the paths written, in (l, k) order
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    dist = apsp(graph)
    paths = []
    for l in range(1, lmax + 1):
        complex_ = magnitude_complex(graph, l, dist, cap)
        for k in range(1, l + 1):
            path = directory / f"d_{k}_{l}.txt"
            write_matrix_dump(complex_.differential(k), k, l, path)
            paths.append(path)
    logger.info("%s: wrote %d boundary matrices to %s", graph.name, len(paths), directory)
    return paths


@dataclass(frozen=True)
class DiagonalityReport:
    """Either diagonal up to lmax, or the first nonzero MH_{k,l} with k != l."""

    graph: str
    lmax: int
    counterexample: tuple = None  # (k, l, rank)

    @property
    def diagonal(self):
        return self.counterexample is None

    def __str__(self):
        if self.diagonal:
            return f"{self.graph}: diagonal up to l={self.lmax}"
        k, l, rank = self.counterexample
        return f"{self.graph}: not diagonal, MH_{{{k},{l}}} has rank {rank}"


def diagonality(table):
    for k, l, group in table.off_diagonal():
        # torsion alone also breaks diagonality; report it with rank 0
        return DiagonalityReport(table.graph, table.lmax, (k, l, group.rank))
    return DiagonalityReport(table.graph, table.lmax)


def cmd_diagonal_check(run, graph=None):
    graph = graph or run.load_graph()
    return diagonality(mh_table(graph, run.lmax, run.method, run.jobs, run.cap))


# =============================================================================
# verify-matching
# =============================================================================

@dataclass
class SliceCheck:
    l: int
    pairs: int
    critical: list
    witness: object = None


@dataclass
class MatchingCheck:
    rule: str
    graph: str
    report: object
    slices: list = field(default_factory=list)
    dump: list = field(default_factory=list)

    @property
    def ok(self):
        return self.report.valid and all(s.witness is None for s in self.slices)


def cmd_verify_matching(graph, rule_name, lmax, cap=None, dump=False):
    """
    Validate a rule on `graph` and check its prefix matching for zig-zag
    cycles at every l <= lmax. Slices are only built for a valid rule.
    """
    rule = build_rule(rule_name, graph)
    report = validate_rule(rule, graph, lmax)
    check = MatchingCheck(rule.name, graph.name, report)
    if not report.valid:
        return check
    dist = apsp(graph)
    for l in range(lmax + 1):
        complex_ = magnitude_complex(graph, l, dist, cap)
        matching = slice_matching(rule, complex_)
        witness = check_acyclic(complex_, matching)
        critical = [complex_.size(k) - sum(1 for i in range(complex_.size(k)) if matching.is_matched(k, i))
                    for k in range(l + 1)]
        check.slices.append(SliceCheck(l, len(matching), critical, witness))
        if dump:
            check.dump.extend(format_matching(complex_, matching, graph))
    return check


# =============================================================================
# bench
# =============================================================================

@dataclass
class BenchRow:
    l: int
    full: list
    reduced: list
    naive_seconds: float
    morse_seconds: float
    agree: bool
    zero_differentials: bool


def cmd_bench(run, graph=None):
    """
    Compare SNF on the full complex with SNF on the reduced one, per l.

    With method 'naive' the reduction uses the empty matching, which gives
    the baseline cost of the reduction itself.
    """
    graph = graph or run.load_graph()
    kind, rule_name = parse_method(run.method)
    rule = build_rule(rule_name, graph) if kind == 'morse' else None
    dist = apsp(graph)
    rows = []
    for l in range(run.lmax + 1):
        complex_ = magnitude_complex(graph, l, dist, run.cap)
        started = time.perf_counter()
        naive = complex_.homology()
        naive_seconds = time.perf_counter() - started

        started = time.perf_counter()
        matching = slice_matching(rule, complex_) if rule else empty_matching(complex_)
        reduced = reduce(complex_, matching)
        morse = reduced.homology()
        morse_seconds = time.perf_counter() - started

        zero = all(d.is_zero() for d in reduced.differentials.values())
        rows.append(BenchRow(l, complex_.sizes, reduced.sizes, naive_seconds, morse_seconds,
                             naive == morse, zero))
        if naive != morse:
            logger.error("%s l=%d: naive and reduced homology differ", graph.name, l)
    return rows


# =============================================================================
# tables
# =============================================================================

# Pairs with equal magnitude but different magnitude homology
SEPARATING_PAIRS = (
    (rook44, shrikhande),
    (dodecahedron, desargues),
)


@dataclass
class SeparationEntry:
    graph: str
    rational: object
    series: object
    table: object


def cmd_tables(lmax=None, terms=6, jobs=None, cap=None):
    """Closed-form magnitude, series and homology table for each equal-magnitude pair."""
    lmax = config.DEFAULT_MAX_L if lmax is None else lmax
    if lmax > 4:
        logger.warning("building separation tables beyond l=4 (lmax=%d) can take hours", lmax)
    entries = []
    for pair in SEPARATING_PAIRS:
        for constructor in pair:
            graph = constructor()
            rational = speyer_magnitude(graph)
            series = magnitude_series(graph, terms)
            if rational.expand(terms) != series:
                raise ConsistencyError(f"{graph.name}: closed form and series disagree")
            table = mh_table(graph, lmax, 'naive', jobs, cap)
            check_euler(table, graph)
            entries.append(SeparationEntry(graph.name, rational, series, table))
    return entries
