"""
Unmatched (critical) sequences of rule-generated matchings

`enumerate_unmatched` is the ground truth. The describe_* functions build
the same sets inductively, and the recurrences count them for cycles.
"""

from functools import lru_cache

from .chains import enumerate_generators, length_ell
from .graphs import apsp
from .rules import SignedCycleContext, match_state


def enumerate_unmatched(rule, graph, k, l, cap=None):
    """Unmatched generators of I_{k,l} in lexicographic order."""
    dist = rule.dist if graph is rule.graph else apsp(graph)
    return [seq for seq in enumerate_generators(graph, k, l, dist, cap)
            if match_state(rule, seq, dist).kind == 'unmatched']


def describe_unmatched_tree(graph, k, l):
    """(v) for every vertex, and for k >= 1 the walks u, v, u, v, ... along an edge."""
    if l != k:
        return []
    if k == 0:
        return [(v,) for v in range(graph.vertex_count)]
    walks = []
    for u in range(graph.vertex_count):
        for v in graph.adjacency[u]:
            walks.append(tuple(u if i % 2 == 0 else v for i in range(k + 1)))
    return sorted(walks)


def _grow(seeds, extend, k, l, dist):
    """Close `seeds` under `extend` and keep the (k, l) layer."""
    layer = [s for s in seeds if length_ell(s, dist) <= l and len(s) - 1 <= k]
    found = set()
    while layer:
        nxt = []
        for seq in layer:
            if len(seq) - 1 == k:
                if length_ell(seq, dist) == l:
                    found.add(seq)
                continue
            for child in extend(seq):
                if length_ell(child, dist) <= l:
                    nxt.append(child)
        layer = nxt
    return sorted(found)


def describe_unmatched_odd(m, k, l):
    """
    Unmatched sequences of the odd cycle rule on C_{2m+1}: every (v), every
    edge (u, v), then repeatedly
      a step of length m after a unit step, in the same direction,
      a unit step after a step of length m, in the same direction,
      a unit step against the direction of the previous step.
    """
    ctx = SignedCycleContext(2 * m + 1)
    n = ctx.n
    dist = [[ctx.distance(u, v) for v in range(n)] for u in range(n)]
    if k == 0:
        return [(v,) for v in range(n)] if l == 0 else []

    def extend(seq):
        a, b = seq[-2], seq[-1]
        direction = _sign(ctx.delta(a, b))
        for v in range(n):
            if v == b:
                continue
            step = ctx.delta(b, v)
            same = _sign(step) == direction
            if dist[a][b] == 1 and abs(step) == m and same:
                yield seq + (v,)
            elif dist[a][b] == m and abs(step) == 1 and same:
                yield seq + (v,)
            elif abs(step) == 1 and not same:
                yield seq + (v,)

    seeds = [(u, v) for u in range(n) for v in range(n) if dist[u][v] == 1]
    return _grow(seeds, extend, k, l, dist)


def is_special_sequence(sequence, m):
    """Even length-index k with chi(x_{2i}, x_{2i+1}, x_{2i+2}) for every i, on C_{2m}."""
    ctx = SignedCycleContext(2 * m)
    k = len(sequence) - 1
    if k % 2:
        return False
    return all(ctx.chi(sequence[i], sequence[i + 1], sequence[i + 2]) for i in range(0, k, 2))


def special_prefix_length(sequence, m):
    """The largest j such that (x_0, ..., x_j) is special."""
    ctx = SignedCycleContext(2 * m)
    j = 0
    while j + 2 < len(sequence) and ctx.chi(sequence[j], sequence[j + 1], sequence[j + 2]):
        j += 2
    return j


def describe_unmatched_even(m, k, l):
    """
    Unmatched sequences of the even cycle rule on C_{2m}: special sequences,
    special sequences followed by one unit step, and extensions of an
    unmatched sequence ending in a unit step by a unit step the other way.
    """
    ctx = SignedCycleContext(2 * m)
    n = ctx.n
    dist = [[ctx.distance(u, v) for v in range(n)] for u in range(n)]

    specials = [(v,) for v in range(n)]
    frontier = list(specials)
    while frontier:
        grown = []
        for seq in frontier:
            for a in range(n):
                if ctx.delta(seq[-1], a) != -1:
                    continue
                for b in range(n):
                    if ctx.chi(seq[-1], a, b):
                        child = seq + (a, b)
                        if length_ell(child, dist) <= l and len(child) - 1 <= k:
                            grown.append(child)
        specials.extend(grown)
        frontier = grown

    seeds = list(specials)
    for seq in specials:
        seeds.extend(seq + (v,) for v in range(n) if dist[seq[-1]][v] == 1)

    def extend(seq):
        if len(seq) < 2 or dist[seq[-2]][seq[-1]] != 1:
            return
        direction = _sign(ctx.delta(seq[-2], seq[-1]))
        for v in range(n):
            if dist[seq[-1]][v] == 1 and _sign(ctx.delta(seq[-1], v)) != direction:
                yield seq + (v,)

    return _grow(seeds, extend, k, l, dist)


def _sign(x):
    return (x > 0) - (x < 0)


@lru_cache(maxsize=None)
def t_odd(m, k, l):
    """Rank of MH_{k,l}(C_{2m+1})."""
    if k < 0 or l < 0:
        return 0
    if (k, l) == (0, 0):
        return 2 * m + 1
    if (k, l) == (1, 1):
        return 4 * m + 2
    return t_odd(m, k - 1, l - 1) + 2 * t_odd(m, k - 2, l - m - 1)


@lru_cache(maxsize=None)
def t_even(m, k, l):
    """Rank of MH_{k,l}(C_{2m})."""
    if k < 0 or l < 0:
        return 0
    if (k, l) == (0, 0):
        return 2 * m
    if (k, l) == (1, 1):
        return 4 * m
    return max(t_even(m, k - 1, l - 1), t_even(m, k - 2, l - m))
