"""
Matching rules and the prefix matchings they generate

A matching rule F looks at a vertex sequence whose proper prefixes are all
idle and answers idle, insert(v) (match by placing v before the last
vertex) or delete (match by removing the second-to-last vertex). Scanning
prefixes of a sequence for the first non-idle answer gives its matching
state; a valid rule makes those states an involution.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .chains import magnitude_complex
from .errors import MatchingError, RuleError, RulePreconditionError
from .graphs import (
    ICOSAHEDRON_COORDINATES,
    Graph,
    apsp,
    cycle_graph,
    icosahedron,
    is_geodetic,
    is_pawful,
    is_ptolemaic,
    is_tree,
    nonmorse_graph,
    pawless_triples,
)
from .morse import Matching

logger = logging.getLogger(__name__)


# =============================================================================
# Outcomes and states
# =============================================================================

@dataclass(frozen=True)
class RuleOutcome:
    kind: str  # 'idle' | 'insert' | 'delete'
    vertex: int = None

    def __str__(self):
        return f"insert {self.vertex}" if self.kind == 'insert' else self.kind


IDLE = RuleOutcome('idle')
DELETE = RuleOutcome('delete')


def insert(v):
    return RuleOutcome('insert', v)


@dataclass(frozen=True)
class MatchState:
    """
    unmatched, insert at (position, vertex): partner has vertex right after
    x_position, or delete at position: partner lacks x_position.
    """

    kind: str  # 'unmatched' | 'insert' | 'delete'
    position: int = None
    vertex: int = None

    def partner(self, sequence):
        sequence = tuple(sequence)
        if self.kind == 'insert':
            return sequence[:self.position + 1] + (self.vertex,) + sequence[self.position + 1:]
        if self.kind == 'delete':
            return sequence[:self.position] + sequence[self.position + 1:]
        return None

    def __str__(self):
        if self.kind == 'insert':
            return f"insert({self.position}, {self.vertex})"
        if self.kind == 'delete':
            return f"delete({self.position})"
        return 'unmatched'


UNMATCHED = MatchState('unmatched')


@dataclass
class MatchingRule:
    """A named evaluator bound to one graph; `metadata` records the choices it was built with."""

    name: str
    graph: Graph
    evaluator: Callable
    diagonal: bool
    dist: object = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dist is None:
            self.dist = apsp(self.graph)

    def __call__(self, sequence):
        return self.evaluator(tuple(sequence))


def _show(sequence, graph):
    return "(" + ",".join(graph.label(v) for v in sequence) + ")"


def match_state(rule, sequence, dist=None):
    """
    Matching state from the first non-idle prefix.

    Raises:
        RuleError: an insert that is not strictly between its neighbours on a
            geodesic, or a delete that is not allowed at that prefix
    """
    dist = dist or rule.dist
    sequence = tuple(sequence)
    for j in range(1, len(sequence)):
        outcome = rule(sequence[:j + 1])
        if outcome.kind == 'idle':
            continue
        if outcome.kind == 'insert':
            a, b, v = sequence[j - 1], sequence[j], outcome.vertex
            if v in (a, b) or dist[a][v] + dist[v][b] != dist[a][b]:
                raise RuleError(f"{rule.name}: F{_show(sequence[:j + 1], rule.graph)} = insert "
                                f"{rule.graph.label(v)}, which is not strictly inside a geodesic")
            return MatchState('insert', j - 1, v)
        if j < 2:
            raise RuleError(f"{rule.name}: delete on the one-step sequence {_show(sequence[:2], rule.graph)}")
        a, x, b = sequence[j - 2], sequence[j - 1], sequence[j]
        if dist[a][x] + dist[x][b] != dist[a][b]:
            raise RuleError(f"{rule.name}: F{_show(sequence[:j + 1], rule.graph)} = delete "
                            f"off a geodesic")
        return MatchState('delete', j - 1)
    return UNMATCHED


@dataclass(frozen=True)
class RuleReport:
    valid: bool
    diagonal: bool
    checked: int
    violation: str = None

    def __str__(self):
        verdict = "valid" if self.valid else "INVALID"
        shape = "diagonal" if self.diagonal else "not diagonal"
        text = f"{verdict}, {shape}, {self.checked} sequences checked"
        return text if self.violation is None else f"{text}: {self.violation}"


def validate_rule(rule, graph, lmax):
    """
    Exhaustively check validity (and diagonality) on sequences with l <= lmax.

    Only sequences whose proper prefixes are all idle are evaluated. For
    F(x) = insert(v) the inserted prefix must be idle and the extended one a
    delete; for F(x) = delete the geodesic condition and the reciprocal
    insert must hold. A rule flagged diagonal must also never be idle after a
    step of length >= 2.

    Returns:
        RuleReport with the first violation verbatim
    """
    dist = apsp(graph) if graph is not rule.graph else rule.dist
    show = lambda seq: _show(seq, graph)
    checked = 0
    diagonal = True
    first_non_diagonal = None

    def violation(message):
        return RuleReport(False, diagonal, checked, message)

    stack = [((v,), 0) for v in reversed(range(graph.vertex_count))]
    while stack:
        prefix, length = stack.pop()
        last = prefix[-1]
        children = []
        for w in range(graph.vertex_count):
            if w == last or length + dist[last][w] > lmax:
                continue
            seq = prefix + (w,)
            checked += 1
            try:
                outcome = rule(seq)
                if outcome.kind == 'insert':
                    v = outcome.vertex
                    if v in (last, w) or dist[last][v] + dist[v][w] != dist[last][w]:
                        return violation(f"F{show(seq)} = insert {graph.label(v)} is not on a geodesic")
                    if rule(prefix + (v,)).kind != 'idle':
                        return violation(f"F{show(seq)} = insert {graph.label(v)} "
                                         f"but F{show(prefix + (v,))} is not idle")
                    if rule(prefix + (v, w)).kind != 'delete':
                        return violation(f"F{show(seq)} = insert {graph.label(v)} "
                                         f"but F{show(prefix + (v, w))} is not delete")
                elif outcome.kind == 'delete':
                    if len(seq) < 3:
                        return violation(f"F{show(seq)} = delete on a one-step sequence")
                    a, x = seq[-3], seq[-2]
                    if dist[a][x] + dist[x][w] != dist[a][w]:
                        return violation(f"F{show(seq)} = delete but {graph.label(x)} "
                                         f"is not on a geodesic")
                    shortened = seq[:-2] + (w,)
                    if rule(shortened) != insert(x):
                        return violation(f"F{show(seq)} = delete but F{show(shortened)} "
                                         f"= {rule(shortened)}, not insert {graph.label(x)}")
                elif dist[last][w] >= 2:
                    if diagonal:
                        first_non_diagonal = show(seq)
                    diagonal = False
            except RuleError as exc:
                return violation(str(exc))
            if outcome.kind == 'idle':
                children.append((seq, length + dist[last][w]))
        stack.extend(reversed(children))

    if rule.diagonal and not diagonal:
        return RuleReport(False, False, checked, f"idle after a long step at F{first_non_diagonal}")
    logger.info("rule %s on %s: %d sequences checked up to l=%d", rule.name, graph.name, checked, lmax)
    return RuleReport(True, diagonal, checked)


# =============================================================================
# Prefix matchings
# =============================================================================

def slice_matching(rule, complex_):
    """
    The prefix matching generated by `rule` on one magnitude complex MC_{*,l}.

    Raises:
        MatchingError: if some sequence's partner does not point back at it
    """
    pairs = {}
    graph = rule.graph
    for k in range(complex_.top + 1):
        for i, seq in enumerate(complex_.bases[k]):
            state = match_state(rule, seq)
            if state.kind == 'unmatched':
                continue
            partner = state.partner(seq)
            degree = k + 1 if state.kind == 'insert' else k - 1
            j = complex_.index_of(degree, partner)
            if j is None:
                raise MatchingError(f"{rule.name}: partner {_show(partner, graph)} of "
                                    f"{_show(seq, graph)} is not a generator")
            returned = match_state(rule, partner).partner(partner)
            if returned != seq:
                shown = _show(returned, graph) if returned else "nothing"
                raise MatchingError(f"{rule.name}: {_show(seq, graph)} is matched to "
                                    f"{_show(partner, graph)}, which is matched to {shown}")
            if state.kind == 'insert':
                pairs.setdefault(k + 1, []).append((i, j))
    matching = Matching({k: tuple(layer) for k, layer in pairs.items()})
    logger.debug("%s on %s: %d pairs", rule.name, complex_.name, len(matching))
    return matching


def generate_matching(rule, graph, lmax, cap=None):
    """
    Prefix matchings for every l <= lmax.

    Returns:
        dict l -> (BasedComplex, Matching)
    """
    dist = rule.dist if graph is rule.graph else apsp(graph)
    slices = {}
    for l in range(lmax + 1):
        complex_ = magnitude_complex(graph, l, dist, cap)
        slices[l] = (complex_, slice_matching(rule, complex_))
    return slices


# =============================================================================
# Rules: trees and geodetic ptolemaic graphs
# =============================================================================

def geodesic_successor_table(graph, dist):
    """
    sigma(u, v) for d(u, v) >= 2: the neighbour of u on the geodesic to v.

    Raises:
        RulePreconditionError: if some pair has more than one such neighbour
    """
    sigma = {}
    for u, v in itertools.permutations(range(graph.vertex_count), 2):
        if dist[u][v] < 2:
            continue
        steps = [w for w in graph.adjacency[u] if dist[w][v] == dist[u][v] - 1]
        if len(steps) != 1:
            raise RulePreconditionError(f"{graph.name}: {len(steps)} geodesic first steps from "
                                        f"{graph.label(u)} to {graph.label(v)}")
        sigma[(u, v)] = steps[0]
    return sigma


def _successor_evaluator(sigma, dist):
    def evaluate(x):
        k = len(x) - 1
        if k >= 2 and sigma.get((x[k - 2], x[k])) == x[k - 1]:
            return DELETE
        if k >= 1 and dist[x[k - 1]][x[k]] >= 2:
            return insert(sigma[(x[k - 1], x[k])])
        return IDLE
    return evaluate


def tree_rule(graph):
    """Delete a geodesic interior vertex, otherwise insert the first step of a long jump."""
    if not is_tree(graph):
        raise RulePreconditionError(f"{graph.name} is not a tree")
    dist = apsp(graph)
    sigma = geodesic_successor_table(graph, dist)
    return MatchingRule('tree', graph, _successor_evaluator(sigma, dist), diagonal=True, dist=dist,
                        metadata={'sigma': sigma})


def geodetic_ptolemaic_rule(graph):
    dist = apsp(graph)
    if not (is_geodetic(graph, dist) and is_ptolemaic(graph, dist)):
        raise RulePreconditionError(f"{graph.name} is not geodetic and ptolemaic")
    sigma = geodesic_successor_table(graph, dist)
    return MatchingRule('geopto', graph, _successor_evaluator(sigma, dist), diagonal=True, dist=dist,
                        metadata={'sigma': sigma})


# =============================================================================
# Pawful graphs
# =============================================================================

def smallest(*args):
    """Default choice function: the smallest admissible vertex."""
    return args[-1][0]


def pawful_rule(graph, f_choice=None, g_choice=None):
    """
    Rule for pawful graphs.

    f(u, v) picks a common neighbour of a distance-2 pair; g(u, v, w) picks a
    common neighbour of u, v, w when d(u,v) = d(v,w) = 2 and d(u,w) = 1.
    Choice functions receive the arguments plus the sorted admissible
    vertices and must return one of them.

    Raises:
        RulePreconditionError: the graph is not pawful
        RuleError: a choice function returned an inadmissible vertex
    """
    dist = apsp(graph)
    if not is_pawful(graph, dist):
        if dist.diameter > 2:
            reason = f"diameter {dist.diameter}"
        else:
            u, v, w = next(pawless_triples(graph, dist))
            reason = (f"no common neighbour of {graph.label(u)}, {graph.label(v)}, "
                      f"{graph.label(w)}")
        raise RulePreconditionError(f"{graph.name} is not pawful: {reason}")
    f_choice = f_choice or smallest
    g_choice = g_choice or smallest
    nbrs = graph.neighbor_sets
    n = graph.vertex_count

    f = {}
    g = {}
    for u, v in itertools.permutations(range(n), 2):
        if dist[u][v] != 2:
            continue
        candidates = tuple(sorted(nbrs[u] & nbrs[v]))
        f[(u, v)] = _checked_choice(f_choice(u, v, candidates), candidates, 'f', (u, v))
        for w in range(n):
            if dist[v][w] == 2 and dist[u][w] == 1:
                candidates = tuple(sorted(nbrs[u] & nbrs[v] & nbrs[w]))
                g[(u, v, w)] = _checked_choice(g_choice(u, v, w, candidates), candidates, 'g', (u, v, w))

    D = dist.rows

    def evaluate(x):
        k = len(x) - 1
        if k == 1 and D[x[0]][x[1]] == 2:
            return insert(f[(x[0], x[1])])
        if k >= 2 and D[x[k - 1]][x[k]] == 2:
            if D[x[k - 2]][x[k]] == 1:
                return insert(x[k - 2])
            if D[x[k - 2]][x[k]] == 2:
                w = g.get((x[k - 2], x[k], x[k - 1]))
                if w is None:
                    raise RuleError(f"g undefined at {_show(x, graph)}")
                return insert(w)
        if k == 2 and D[x[0]][x[2]] == 2 and x[1] == f[(x[0], x[2])]:
            return DELETE
        if k >= 3 and D[x[k - 2]][x[k]] == 2:
            if D[x[k - 3]][x[k]] == 1 and x[k - 3] == x[k - 1]:
                return DELETE
            if D[x[k - 3]][x[k]] == 2 and x[k - 1] == g.get((x[k - 3], x[k], x[k - 2])):
                return DELETE
        return IDLE

    return MatchingRule('pawful', graph, evaluate, diagonal=True, dist=dist,
                        metadata={'f': f, 'g': g})


def _checked_choice(choice, candidates, name, args):
    if choice not in candidates:
        raise RuleError(f"choice function {name}{args} returned {choice}, not one of {candidates}")
    return choice


# =============================================================================
# Icosahedron
# =============================================================================

@dataclass(frozen=True)
class IcosahedralTables:
    """Choice tables of the icosahedral rule, built once for one chirality."""

    f: dict
    g_left: dict
    g_right: dict
    xi: dict
    zeta: dict
    zeta_ties: tuple


def icosahedral_tables(graph, dist, chirality=1, f_choice=None):
    """
    g_left(u, v) is the common neighbour w of a distance-2 pair whose
    oriented volume chirality * det[p_u, p_v, p_w] is positive; g_right is
    the other one. xi(u, v, w) picks from g_left(v, w), g_right(v, w) the one
    nearer u (g_left on a tie); zeta(u, v, w, x) does the same for (w, x) and
    must never tie.
    """
    pts = ICOSAHEDRON_COORDINATES
    n = graph.vertex_count
    nbrs = graph.neighbor_sets
    f_choice = f_choice or smallest
    f = {u: _checked_choice(f_choice(u, tuple(sorted(nbrs[u]))), tuple(sorted(nbrs[u])), 'f', (u,))
         for u in range(n)}

    g_left, g_right = {}, {}
    for u, v in itertools.permutations(range(n), 2):
        if dist[u][v] != 2:
            continue
        common = sorted(nbrs[u] & nbrs[v])
        if len(common) != 2:
            raise RulePreconditionError(f"{len(common)} common neighbours of {u} and {v}")
        left = [w for w in common if chirality * np.linalg.det(pts[[u, v, w]]) > 0]
        if len(left) != 1:
            raise RulePreconditionError(f"orientation does not separate the common neighbours of {u}, {v}")
        g_left[(u, v)] = left[0]
        g_right[(u, v)] = common[1] if common[0] == left[0] else common[0]

    xi = {}
    for u, v, w in itertools.product(range(n), repeat=3):
        if dist[u][v] == 1 and dist[v][w] == 2:
            a, b = g_left[(v, w)], g_right[(v, w)]
            xi[(u, v, w)] = b if dist[b][u] < dist[a][u] else a

    zeta = {}
    ties = []
    for u, v, w, x in itertools.product(range(n), repeat=4):
        if dist[u][v] == 1 and dist[w][x] == 2 and dist[v][x] == 3 and u != w:
            a, b = g_left[(w, x)], g_right[(w, x)]
            if dist[a][u] == dist[b][u]:
                ties.append((u, v, w, x))
                continue
            zeta[(u, v, w, x)] = a if dist[a][u] < dist[b][u] else b
    return IcosahedralTables(f, g_left, g_right, xi, zeta, tuple(ties))


def icosahedral_rule(chirality=1, f_choice=None, graph=None):
    """The twelve-case rule on the built-in icosahedron; `chirality` = -1 mirrors it."""
    if chirality not in (1, -1):
        raise RuleError(f"chirality must be +1 or -1, got {chirality}")
    reference = icosahedron()
    graph = graph or reference
    if graph.adjacency != reference.adjacency:
        raise RulePreconditionError(f"{graph.name} is not the built-in icosahedron")
    dist = apsp(graph)
    t = icosahedral_tables(graph, dist, chirality, f_choice)
    D = dist.rows
    f, gl, xi, zeta = t.f, t.g_left, t.xi, t.zeta

    def lookup(table, name, key):
        if key not in table:
            raise RuleError(f"{name} undefined at {key}")
        return table[key]

    def evaluate(x):
        k = len(x) - 1
        if k == 0:
            return IDLE
        last, prev = x[k], x[k - 1]
        d_step = D[prev][last]
        if k == 1:
            if d_step == 3:
                return insert(f[x[0]])
            if d_step == 2:
                return insert(gl[(x[0], x[1])])
            return IDLE
        back2 = D[x[k - 2]][last]
        if d_step == 3:
            return insert(x[k - 2])
        if d_step == 2 and back2 != 3:
            return insert(lookup(xi, 'xi', (x[k - 2], prev, last)))
        if k == 2 and d_step == 2 and back2 == 3 and x[1] != f[x[0]]:
            return insert(gl[(x[1], x[2])])
        if k >= 3 and d_step == 2 and back2 == 3 and prev != x[k - 3]:
            return insert(lookup(zeta, 'zeta', (x[k - 3], x[k - 2], prev, last)))
        if k == 2:
            if back2 == 3 and x[1] == f[x[0]]:
                return DELETE
            if back2 == 2 and x[1] == gl[(x[0], x[2])]:
                return DELETE
            return IDLE
        back3 = D[x[k - 3]][last]
        if back2 == 3 and x[k - 3] == prev:
            return DELETE
        if back2 == 2 and back3 != 3 and prev == xi.get((x[k - 3], x[k - 2], last)):
            return DELETE
        if k == 3 and D[x[1]][x[3]] == 2 and D[x[0]][x[3]] == 3 and x[1] != f[x[0]] \
                and x[2] == gl[(x[1], x[3])]:
            return DELETE
        if k >= 4 and back2 == 2 and back3 == 3 and x[k - 4] != x[k - 2] \
                and prev == zeta.get((x[k - 4], x[k - 3], x[k - 2], last)):
            return DELETE
        return IDLE

    return MatchingRule('icosa', graph, evaluate, diagonal=True, dist=dist,
                        metadata={'chirality': chirality, 'tables': t})


# =============================================================================
# Cycles
# =============================================================================

def _sign(x):
    return (x > 0) - (x < 0)


class SignedCycleContext:
    """
    Signed distance on C_n with vertices 0..n-1 in cyclic order.

    delta(u, v) is v - u reduced into -m..m (n = 2m+1) or -m+1..m (n = 2m).
    """

    def __init__(self, n):
        self.n = n
        self.m = n // 2
        self.odd = bool(n % 2)

    def delta(self, u, v):
        r = (v - u) % self.n
        return r - self.n if r > self.m else r

    def distance(self, u, v):
        return abs(self.delta(u, v))

    def sigma(self, u, v):
        """The neighbour of u in the direction of v; None when d(u, v) < 2."""
        if self.distance(u, v) < 2:
            return None
        return (u + _sign(self.delta(u, v))) % self.n

    def chi(self, u, v, w):
        if self.odd:
            return (_sign(self.delta(u, v)) == _sign(self.delta(v, w))
                    and self.distance(u, v) == 1 and self.distance(v, w) == self.m)
        return self.delta(u, v) == -1 and self.delta(v, w) == -self.m + 1


def odd_cycle_rule(m):
    """Rule on C_{2m+1}; valid and Morse but not diagonal."""
    if m < 2:
        raise RuleError(f"odd cycle rule needs m >= 2, got {m}")
    ctx = SignedCycleContext(2 * m + 1)

    def evaluate(x):
        k = len(x) - 1
        if k >= 2 and ctx.sigma(x[k - 2], x[k]) == x[k - 1]:
            return DELETE
        if k >= 1 and ctx.distance(x[k - 1], x[k]) >= 2 \
                and not (k >= 2 and ctx.chi(x[k - 2], x[k - 1], x[k])):
            return insert(ctx.sigma(x[k - 1], x[k]))
        return IDLE

    return MatchingRule('odd-cycle', cycle_graph(2 * m + 1), evaluate, diagonal=False,
                        metadata={'m': m, 'context': ctx})


def even_cycle_rule(m):
    """Rule on C_{2m}; its reduced complex has zero differentials."""
    if m < 3:
        raise RuleError(f"even cycle rule needs m >= 3, got {m}")
    ctx = SignedCycleContext(2 * m)

    def evaluate(x):
        k = len(x) - 1
        if k >= 2 and ctx.sigma(x[k - 2], x[k]) == x[k - 1]:
            return DELETE
        if k >= 3 and ctx.delta(x[k - 3], x[k - 2]) == 1 and ctx.chi(x[k - 2], x[k - 1], x[k]):
            return DELETE
        if k >= 2 and ctx.chi(x[k - 1], x[k - 2], x[k]):
            return insert(x[k - 2])
        if k >= 1 and ctx.distance(x[k - 1], x[k]) >= 2 \
                and not (k >= 2 and ctx.chi(x[k - 2], x[k - 1], x[k])):
            return insert(ctx.sigma(x[k - 1], x[k]))
        return IDLE

    return MatchingRule('even-cycle', cycle_graph(2 * m), evaluate, diagonal=False,
                        metadata={'m': m, 'context': ctx})


# =============================================================================
# Explicit tables
# =============================================================================

def table_rule(graph, entries, name='table'):
    """A rule given by an explicit {sequence: RuleOutcome} map; idle elsewhere."""
    entries = {tuple(seq): outcome for seq, outcome in entries.items()}
    return MatchingRule(name, graph, lambda x: entries.get(x, IDLE), diagonal=False,
                        metadata={'entries': entries})


def nonmorse_rule(graph=None):
    """A valid rule on the six-vertex example whose prefix matching has a zig-zag cycle."""
    reference = nonmorse_graph()
    graph = graph or reference
    if graph.adjacency != reference.adjacency:
        raise RulePreconditionError(f"{graph.name} is not the six-vertex example graph")
    entries = {
        (0, 3): insert(1), (0, 1, 3): DELETE,
        (0, 4): insert(2), (0, 2, 4): DELETE,
        (0, 1, 5): insert(4), (0, 1, 4, 5): DELETE,
        (0, 2, 5): insert(3), (0, 2, 3, 5): DELETE,
    }
    return table_rule(graph, entries, name='nonmorse')


def _cycle_length(graph):
    n = graph.vertex_count
    if n < 3 or graph.adjacency != cycle_graph(n).adjacency:
        raise RulePreconditionError(f"{graph.name} is not a cycle with vertices in cyclic order")
    return n


def _odd_cycle_for(graph):
    n = _cycle_length(graph)
    if n % 2 == 0:
        raise RulePreconditionError(f"{graph.name} is an even cycle")
    return odd_cycle_rule((n - 1) // 2)


def _even_cycle_for(graph):
    n = _cycle_length(graph)
    if n % 2:
        raise RulePreconditionError(f"{graph.name} is an odd cycle")
    return even_cycle_rule(n // 2)


# CLI name -> constructor taking the target graph
RULES = {
    'tree': tree_rule,
    'geopto': geodetic_ptolemaic_rule,
    'pawful': pawful_rule,
    'icosa': lambda graph: icosahedral_rule(graph=graph),
    'icosa-mirror': lambda graph: icosahedral_rule(chirality=-1, graph=graph),
    'odd-cycle': _odd_cycle_for,
    'even-cycle': _even_cycle_for,
    'nonmorse': nonmorse_rule,
}


def build_rule(name, graph):
    """Look up a rule by its CLI name and bind it to `graph`."""
    if name not in RULES:
        raise RuleError(f"unknown rule: {name} (choose from {', '.join(RULES)})")
    return RULES[name](graph)
