"""
Magnitude chain complex of a graph

Generators of MC_{k,l} are vertex sequences (x_0, ..., x_k) with distinct
consecutive vertices and total length l(x) = sum d(x_i, x_{i+1}) = l.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

import config
from .errors import GeneratorCapExceeded
from .graphs import apsp
from .matrices import SparseIntegerMatrix
from .morse import BasedComplex

logger = logging.getLogger(__name__)


def length_ell(vertices, dist):
    """l(x_0, ..., x_k); 0 for a single vertex."""
    return sum(dist[u][v] for u, v in zip(vertices, vertices[1:]))


@dataclass(frozen=True)
class IndexSet:
    """I_{k,l}: all generators of one grading, lexicographically ordered."""

    k: int
    l: int
    sequences: tuple = ()

    @cached_property
    def lookup(self):
        return {seq: i for i, seq in enumerate(self.sequences)}

    def index_of(self, sequence):
        return self.lookup.get(tuple(sequence))

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)

    def __getitem__(self, i):
        return self.sequences[i]

    def __contains__(self, sequence):
        return tuple(sequence) in self.lookup


def count_generators(graph, k, l, dist=None):
    """
    |I_{k,l}| by dynamic programming over (last vertex, length so far).

    Never materialises the sequences, so it is safe to call before
    deciding whether a grading fits under the generator cap.
    """
    if k < 0 or l < 0 or k > l:
        return 0
    if k == 0:
        return graph.vertex_count if l == 0 else 0
    dist = dist or apsp(graph)
    n = graph.vertex_count
    # ways[s][v]: sequences with the steps taken so far, length s, ending at v
    ways = [[0] * n for _ in range(l + 1)]
    ways[0] = [1] * n
    for step in range(k):
        remaining = k - step - 1
        nxt = [[0] * n for _ in range(l + 1)]
        for s in range(l + 1):
            row = ways[s]
            for v in range(n):
                if not row[v]:
                    continue
                for w in range(n):
                    t = s + dist[v][w]
                    if w != v and t + remaining <= l:
                        nxt[t][w] += row[v]
        ways = nxt
    return sum(ways[l])


def enumerate_generators(graph, k, l, dist=None, cap=None):
    """
    I_{k,l}(G) in lexicographic order.

    Sequences are grown depth-first; a branch is cut as soon as the length
    used so far leaves too little (each step costs at least 1) or too much
    (each step costs at most the diameter) for the remaining steps.

    Raises:
        GeneratorCapExceeded: if |I_{k,l}| is above `cap` (default config.GENERATOR_CAP)
    """
    dist = dist or apsp(graph)
    cap = config.GENERATOR_CAP if cap is None else cap
    count = count_generators(graph, k, l, dist)
    if count > cap:
        raise GeneratorCapExceeded(k, l, count, cap)
    if count == 0:
        return IndexSet(k, l, ())

    n = graph.vertex_count
    diameter = dist.diameter
    found = []
    prefix = []

    def extend(s):
        steps_left = k - (len(prefix) - 1)
        if steps_left == 0:
            if s == l:
                found.append(tuple(prefix))
            return
        last = prefix[-1]
        for w in range(n):
            if w == last:
                continue
            t = s + dist[last][w]
            if t + steps_left - 1 > l or t + (steps_left - 1) * diameter < l:
                continue
            prefix.append(w)
            extend(t)
            prefix.pop()

    for v in range(n):
        prefix.append(v)
        extend(0)
        prefix.pop()
    logger.debug("I_{%d,%d}(%s): %d generators", k, l, graph.name, len(found))
    return IndexSet(k, l, tuple(found))


def boundary_matrix(graph, k, l, dist=None, source=None, target=None, cap=None):
    """
    The differential MC_{k,l} -> MC_{k-1,l}.

    Column j is the boundary of source[j]: entry (-1)^i at the row of the
    sequence with x_i removed, for interior i whose removal keeps the length.
    For k = 0 this is the zero map to the empty degree -1.

    Args:
        graph: Graph
        k, l: Grading of the source
        dist: Precomputed DistanceMatrix
        source, target: Precomputed I_{k,l} and I_{k-1,l}

    Returns:
        SparseIntegerMatrix of shape (|I_{k-1,l}|, |I_{k,l}|)
    """
    dist = dist or apsp(graph)
    source = source or enumerate_generators(graph, k, l, dist, cap)
    if k == 0:
        return SparseIntegerMatrix.zero(0, len(source))
    target = target or enumerate_generators(graph, k - 1, l, dist, cap)
    entries = {}
    for col, seq in enumerate(source):
        for i in range(1, k):
            a, x, b = seq[i - 1], seq[i], seq[i + 1]
            if dist[a][x] + dist[x][b] == dist[a][b]:
                row = target.index_of(seq[:i] + seq[i + 1:])
                entries[(row, col)] = -1 if i % 2 else 1
    return SparseIntegerMatrix(len(target), len(source), entries)


def magnitude_complex(graph, l, dist=None, cap=None):
    """MC_{*,l}(G) as a BasedComplex in degrees 0..l, bases labelled by sequences."""
    dist = dist or apsp(graph)
    bases = {k: enumerate_generators(graph, k, l, dist, cap) for k in range(l + 1)}
    differentials = {
        k: boundary_matrix(graph, k, l, dist, source=bases[k], target=bases[k - 1])
        for k in range(1, l + 1)
    }
    logger.info("MC_{*,%d}(%s): generator counts %s", l, graph.name, [len(b) for b in bases.values()])
    return BasedComplex(bases, differentials, grading=l, name=f"MC(*,{l})({graph.name})")
