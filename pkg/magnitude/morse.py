"""
Algebraic Morse theory on based free integer chain complexes

A matching pairs a generator b of degree k-1 with a generator a of degree k
whose differential entry is a unit. Reversing the matched arrows of the
complex's generator graph gives the Morse graph; when it has no directed
cycle the complex reduces to the unmatched (critical) generators.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import ChainComplexError, MatchingError
from .homology import chain_homology
from .matrices import SparseIntegerMatrix

logger = logging.getLogger(__name__)


@dataclass
class BasedComplex:
    """
    Free chain complex in degrees 0..top with a chosen basis per degree.

    Args:
        bases: degree -> sequence of generator labels (index = basis position)
        differentials: degree k -> SparseIntegerMatrix from C_k to C_{k-1}
        grading: Optional outer grading (the l of a magnitude complex)
        name: Used in logs and reports
    """

    bases: dict
    differentials: dict = field(default_factory=dict)
    grading: int = None
    name: str = 'complex'
    _lookup: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def top(self):
        return max(self.bases, default=-1)

    @property
    def sizes(self):
        return [self.size(k) for k in range(self.top + 1)]

    def size(self, k):
        return len(self.bases.get(k, ()))

    def label(self, k, i):
        return self.bases[k][i]

    def index_of(self, k, label):
        """Basis position of `label` in degree k, or None."""
        if k not in self._lookup:
            self._lookup[k] = {lab: i for i, lab in enumerate(self.bases.get(k, ()))}
        return self._lookup[k].get(label)

    def differential(self, k):
        if k in self.differentials:
            return self.differentials[k]
        return SparseIntegerMatrix.zero(self.size(k - 1) if k >= 1 else 0, self.size(k))

    def check(self):
        """Raise ChainComplexError unless shapes agree and every d_k d_{k+1} vanishes."""
        for k, d in self.differentials.items():
            if d.shape != (self.size(k - 1), self.size(k)):
                raise ChainComplexError(f"{self.name}: d_{k} has shape {d.shape}, "
                                        f"expected {(self.size(k - 1), self.size(k))}")
        for k in range(1, self.top):
            if not (self.differential(k) @ self.differential(k + 1)).is_zero():
                raise ChainComplexError(f"{self.name}: d_{k} d_{k + 1} is not zero")

    def homology(self, check=True):
        return chain_homology(self.sizes, self.differentials, check=check)


@dataclass
class ReducedComplex(BasedComplex):
    """The complex on critical generators; `critical[k]` lists their positions in the source."""

    critical: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Matching:
    """
    pairs: layer k -> tuple of (lower, upper), lower a basis position in
    degree k-1 and upper one in degree k.
    """

    pairs: dict = field(default_factory=dict)

    @cached_property
    def up(self):
        """degree -> {generator: partner one degree up}"""
        up = defaultdict(dict)
        for k, layer in self.pairs.items():
            for lower, upper in layer:
                up[k - 1][lower] = upper
        return up

    @cached_property
    def down(self):
        """degree -> {generator: partner one degree down}"""
        down = defaultdict(dict)
        for k, layer in self.pairs.items():
            for lower, upper in layer:
                down[k][upper] = lower
        return down

    def __len__(self):
        return sum(len(layer) for layer in self.pairs.values())

    def is_matched(self, k, i):
        return i in self.up.get(k, {}) or i in self.down.get(k, {})


def empty_matching(complex_=None):
    return Matching({})


@dataclass(frozen=True)
class CycleWitness:
    """
    A directed cycle of the Morse graph, a_1 -> b_1 -> a_2 -> ... -> b_p -> a_1.

    `labels` alternates a_i (degree `degree`) and b_i (degree `degree` - 1).
    """

    degree: int
    labels: tuple

    @property
    def uppers(self):
        return self.labels[0::2]

    @property
    def lowers(self):
        return self.labels[1::2]

    def __len__(self):
        return len(self.labels) // 2

    def render(self, fmt=str):
        return " -> ".join(fmt(x) for x in self.labels + self.labels[:1])

    def __str__(self):
        return self.render()


def validate_matching(complex_, matching):
    """
    Check that a matching pairs each generator at most once, along unit entries.

    Returns:
        Tuple of (success: bool, message: str)
    """
    seen = set()
    for k, layer in sorted(matching.pairs.items()):
        if k < 1 or k > complex_.top:
            return False, f"layer {k} is outside degrees 1..{complex_.top}"
        d = complex_.differential(k)
        for lower, upper in layer:
            if not (0 <= lower < complex_.size(k - 1) and 0 <= upper < complex_.size(k)):
                return False, f"pair ({lower}, {upper}) out of range in layer {k}"
            for key in ((k - 1, lower), (k, upper)):
                if key in seen:
                    return False, f"generator {complex_.label(*key)} matched twice"
                seen.add(key)
            entry = d.get(lower, upper)
            if entry == 0:
                return False, (f"matched entry not an edge: {complex_.label(k, upper)} "
                               f"-> {complex_.label(k - 1, lower)}")
            if abs(entry) != 1:
                return False, (f"matched entry {entry} is not a unit: {complex_.label(k, upper)} "
                               f"-> {complex_.label(k - 1, lower)}")
    return True, f"{len(matching)} pairs"


def _layer_graph(complex_, matching, k):
    """
    Degree-k part of the Morse graph with the degree k-1 steps contracted.

    Nodes are the degree-k generators matched down. Edge a -> a2 (attribute
    `via` = b) when d(a) hits b, b is not a's own partner, and b is matched
    up to a2.
    """
    up = matching.up.get(k - 1, {})
    down = matching.down.get(k, {})
    g = nx.DiGraph()
    g.add_nodes_from(down)
    for (b, a), _ in complex_.differential(k).entries.items():
        a2 = up.get(b)
        if a2 is None or a2 == a or a not in down:
            continue
        g.add_edge(a, a2, via=b)
    return g


def check_acyclic(complex_, matching):
    """
    Look for a directed cycle in the Morse graph.

    Any such cycle alternates between two adjacent degrees, so each layer is
    checked on its own.

    Returns:
        None if the matching is a Morse matching, else a CycleWitness
    """
    for k in sorted(matching.pairs):
        g = _layer_graph(complex_, matching, k)
        try:
            edges = nx.find_cycle(g)
        except nx.NetworkXNoCycle:
            continue
        start = min(range(len(edges)), key=lambda i: edges[i][0])
        edges = edges[start:] + edges[:start]
        labels = []
        for a, a2 in edges:
            labels.append(complex_.label(k, a))
            labels.append(complex_.label(k - 1, g.edges[a, a2]['via']))
        witness = CycleWitness(k, tuple(labels))
        logger.info("%s: zig-zag cycle of length %d in degree %d", complex_.name, len(witness), k)
        return witness
    return None


def verify_witness(complex_, matching, witness):
    """Re-check every step of a witness against the differential and the matching."""
    k = witness.degree
    d = complex_.differential(k)
    up = matching.up.get(k - 1, {})
    down = matching.down.get(k, {})
    uppers = [complex_.index_of(k, a) for a in witness.uppers]
    lowers = [complex_.index_of(k - 1, b) for b in witness.lowers]
    if None in uppers or None in lowers or not uppers:
        return False
    for i, (a, b) in enumerate(zip(uppers, lowers)):
        a_next = uppers[(i + 1) % len(uppers)]
        if d.get(b, a) == 0 or down.get(a) == b or up.get(b) != a_next or a_next == a:
            return False
    return True


def reduce(complex_, matching):
    """
    Reduce a complex along an acyclic matching.

    The reduced differential of a critical u sums, over every zig-zag path
    u -> b -> a' -> b' -> ... ending at a critical generator, the product of
    the forward entries and the negated inverses of the matched entries. The
    path sums are accumulated bottom-up along a topological order of each
    layer, so no path is listed explicitly.

    Raises:
        MatchingError: if the matching is invalid or has a zig-zag cycle
        ChainComplexError: if the reduced differential does not square to zero
    """
    ok, message = validate_matching(complex_, matching)
    if not ok:
        raise MatchingError(message)
    witness = check_acyclic(complex_, matching)
    if witness is not None:
        raise MatchingError(f"not a Morse matching, zig-zag cycle: {witness}")

    critical = {}
    position = {}
    for k in range(complex_.top + 1):
        critical[k] = [i for i in range(complex_.size(k)) if not matching.is_matched(k, i)]
        position[k] = {i: p for p, i in enumerate(critical[k])}

    differentials = {}
    for k in range(1, complex_.top + 1):
        d = complex_.differential(k)
        up = matching.up.get(k - 1, {})
        down = matching.down.get(k, {})
        crit_lower = position[k - 1]
        phi = {}

        def image(b):
            if b in crit_lower:
                return {crit_lower[b]: 1}
            return phi.get(b, {})

        layer = _layer_graph(complex_, matching, k)
        for a in reversed(list(nx.topological_sort(layer))):
            b = down[a]
            unit = d.get(b, a)
            acc = defaultdict(int)
            for b2, value in d.column(a):
                if b2 == b:
                    continue
                for p, c in image(b2).items():
                    acc[p] += value * c
            phi[b] = {p: -unit * v for p, v in acc.items() if v}

        triples = []
        for col, u in enumerate(critical[k]):
            for b, value in d.column(u):
                if b in up or b in crit_lower:
                    for p, c in image(b).items():
                        triples.append((p, col, value * c))
        differentials[k] = SparseIntegerMatrix.from_triples(len(critical[k - 1]), len(critical[k]), triples)

    reduced = ReducedComplex(
        bases={k: [complex_.label(k, i) for i in idx] for k, idx in critical.items()},
        differentials=differentials,
        grading=complex_.grading,
        name=f"{complex_.name}/reduced",
        critical=critical,
    )
    reduced.check()
    logger.debug("%s: %s generators reduced to %s", complex_.name, complex_.sizes, reduced.sizes)
    return reduced


def homology_equivalence_check(complex_, reduced):
    """True iff both complexes have the same ranks and torsion in every degree."""
    return complex_.homology() == reduced.homology()


# =============================================================================
# Witness bookkeeping for sequence-labelled complexes
# =============================================================================

def _first_difference(longer, shorter):
    for i, x in enumerate(shorter):
        if longer[i] != x:
            return i
    return len(shorter)


def witness_shape(witness):
    """
    Per step i: the position d_i deleted from a_i to reach b_i, and the
    insertion (c_i, u_i) that turns b_i into a_{i+1} by placing u_i right
    after position c_i.
    """
    uppers, lowers = witness.uppers, witness.lowers
    shape = []
    for i, (a, b) in enumerate(zip(uppers, lowers)):
        a_next = uppers[(i + 1) % len(uppers)]
        d_i = _first_difference(a, b)
        slot = _first_difference(a_next, b)
        shape.append((d_i, slot - 1, a_next[slot]))
    return shape


def check_witness_shape(witness):
    """
    Every zig-zag cycle of a prefix matching has d_{i+1} != c_i + 1,
    d_{i+1} <= c_i + 2 and d_i <= c_i + 1.

    Returns:
        Tuple of (success: bool, message: str)
    """
    shape = witness_shape(witness)
    p = len(shape)
    for i, (d_i, c_i, _) in enumerate(shape):
        d_next = shape[(i + 1) % p][0]
        if d_next == c_i + 1:
            return False, f"step {i + 1}: d_(i+1) = c_i + 1 = {d_next}"
        if d_next > c_i + 2:
            return False, f"step {i + 1}: d_(i+1) = {d_next} > c_i + 2 = {c_i + 2}"
        if d_i > c_i + 1:
            return False, f"step {i + 1}: d_i = {d_i} > c_i + 1 = {c_i + 1}"
    return True, f"{p} steps"


def prefix_lengths(sequence, dist):
    """(l(x_0, x_1), l(x_0, x_1, x_2), ..., l(x_0, ..., x_k)), for diagnostics."""
    total = 0
    lengths = []
    for u, v in zip(sequence, sequence[1:]):
        total += dist[u][v]
        lengths.append(total)
    return tuple(lengths)
