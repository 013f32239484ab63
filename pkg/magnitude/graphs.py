"""
Finite simple graphs, graph distances, named constructors and metric predicates
Vertices are dense 0-based indices; labels are cosmetic
"""

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import sqrt

import networkx as nx
import numpy as np

from .errors import GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with sorted adjacency."""

    vertex_count: int
    adjacency: tuple
    labels: tuple = None
    name: str = field(default='graph', compare=False)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def label(self, v):
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def edges(self):
        """All edges (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @cached_property
    def neighbor_sets(self):
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def is_connected(self):
        return self.vertex_count > 0 and nx.is_connected(self.to_networkx())

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, nx_graph, name='graph', labels=None):
        """Relabel an arbitrary networkx graph onto 0..n-1 in sorted node order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges()]
        return build_graph(len(nodes), edges, labels=labels, name=name)

    def __str__(self):
        return f"{self.name} (n={self.vertex_count}, m={self.edge_count})"


def build_graph(n, edges, labels=None, name='graph'):
    """
    Build a graph from a vertex count and an edge list.

    Duplicate edges (in either orientation) are merged. Disconnected graphs
    are accepted here and flagged by `Graph.is_connected`; distance and
    homology operations refuse them.

    Args:
        n: Number of vertices
        edges: Iterable of (u, v) pairs with 0 <= u, v < n
        labels: Optional per-vertex display names
        name: Graph id used in reports

    Returns:
        Graph

    Raises:
        GraphError: on a self-loop, an out-of-range index or a bad label count
    """
    if n < 1:
        raise GraphError(f"a graph needs at least one vertex, got n={n}")
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    graph = Graph(n, tuple(tuple(sorted(s)) for s in nbrs), labels, name)
    if not graph.is_connected:
        logger.warning("graph %s is disconnected; homology operations will refuse it", name)
    return graph


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs graph distances; `dist[u][v]` is d(u, v)."""

    rows: tuple

    def __getitem__(self, u):
        return self.rows[u]

    def __len__(self):
        return len(self.rows)

    @cached_property
    def array(self):
        return np.array(self.rows, dtype=np.int64)

    @property
    def diameter(self):
        return max(max(row) for row in self.rows)

    def profile(self, v):
        """Number of vertices at each distance from v, indexed by distance."""
        counts = Counter(self.rows[v])
        return tuple(counts.get(i, 0) for i in range(max(counts) + 1))


def apsp(graph):
    """
    All-pairs shortest path distances by breadth-first search from every vertex.

    Raises:
        GraphError: if the graph is disconnected
    """
    if not graph.is_connected:
        raise GraphError(f"{graph.name} is disconnected; distances are undefined")
    g = graph.to_networkx()
    rows = []
    for s in range(graph.vertex_count):
        lengths = nx.single_source_shortest_path_length(g, s)
        rows.append(tuple(lengths[v] for v in range(graph.vertex_count)))
    return DistanceMatrix(tuple(rows))


# =============================================================================
# Named constructors
# =============================================================================

def path_graph(n):
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_networkx(nx.path_graph(n), name=f"path:{n}")


def cycle_graph(n):
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n), name=f"cycle:{n}")


def complete_graph(n):
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n), name=f"complete:{n}")


def star_graph(n):
    """K_{1,n}: vertex 0 is the centre."""
    if n < 1:
        raise GraphError(f"star needs n >= 1 leaves, got {n}")
    return Graph.from_networkx(nx.star_graph(n), name=f"star:{n}")


def tree_graph(edges):
    """A tree given by its edge list; vertex count is inferred."""
    edges = [tuple(e) for e in edges]
    n = 1 + max((max(e) for e in edges), default=0)
    graph = build_graph(n, edges, name='tree:' + ','.join(f"{u}-{v}" for u, v in edges))
    if not nx.is_tree(graph.to_networkx()):
        raise GraphError(f"edge list {edges} is not a tree")
    return graph


def join(g, h):
    """G ⋆ H: disjoint union plus every edge between the two sides."""
    offset = g.vertex_count
    edges = list(g.edges())
    edges += [(u + offset, v + offset) for u, v in h.edges()]
    edges += [(u, v + offset) for u in range(g.vertex_count) for v in range(h.vertex_count)]
    return build_graph(g.vertex_count + h.vertex_count, edges, name=f"join({g.name},{h.name})")


def complement(g):
    edges = [(u, v) for u, v in itertools.combinations(range(g.vertex_count), 2)
             if v not in g.neighbor_sets[u]]
    return build_graph(g.vertex_count, edges, labels=g.labels, name=f"complement({g.name})")


PHI = (1 + sqrt(5)) / 2


def _icosahedron_coordinates():
    points = []
    for a, b in itertools.product((-1, 1), repeat=2):
        points.append((0.0, a, b * PHI))
    for a, b in itertools.product((-1, 1), repeat=2):
        points.append((a, b * PHI, 0.0))
    for a, b in itertools.product((-1, 1), repeat=2):
        points.append((a * PHI, 0.0, b))
    return np.array(points, dtype=float)


# Vertex i of the built-in icosahedron sits at row i; edges have length 2
ICOSAHEDRON_COORDINATES = _icosahedron_coordinates()


def icosahedron():
    """The icosahedral graph on the golden-ratio coordinates above."""
    pts = ICOSAHEDRON_COORDINATES
    edges = [(i, j) for i, j in itertools.combinations(range(len(pts)), 2)
             if abs(float(np.sum((pts[i] - pts[j]) ** 2)) - 4.0) < 1e-9]
    return build_graph(len(pts), edges, name='icosahedron')


def _cayley_z4z4(generators, name):
    def index(a, b):
        return 4 * (a % 4) + (b % 4)

    edges = set()
    for a, b in itertools.product(range(4), repeat=2):
        for ga, gb in generators:
            u, v = index(a, b), index(a + ga, b + gb)
            edges.add((min(u, v), max(u, v)))
    labels = [f"({a},{b})" for a, b in itertools.product(range(4), repeat=2)]
    return build_graph(16, sorted(edges), labels=labels, name=name)


def rook44():
    """4×4 rook graph: Cayley graph of Z/4×Z/4 with generators (0,x), (x,0)."""
    gens = [(0, x) for x in (1, 2, 3)] + [(x, 0) for x in (1, 2, 3)]
    return _cayley_z4z4(gens, 'rook44')


def shrikhande():
    """Shrikhande graph: Cayley graph of Z/4×Z/4 with generators ±(0,1), ±(1,0), ±(1,1)."""
    gens = [(0, 1), (0, -1), (1, 0), (-1, 0), (1, 1), (-1, -1)]
    return _cayley_z4z4(gens, 'shrikhande')


def dodecahedron():
    return Graph.from_networkx(nx.dodecahedral_graph(), name='dodecahedron')


def desargues():
    return Graph.from_networkx(nx.desargues_graph(), name='desargues')


def fan(n=3):
    """K_1 ⋆ P_n."""
    g = join(complete_graph(1), path_graph(n))
    return Graph(g.vertex_count, g.adjacency, g.labels, f"fan:{n}")


def block3():
    """Three triangles glued in a chain at cut vertices 2 and 4."""
    edges = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)]
    return build_graph(7, edges, name='block3')


def nonmorse_graph():
    """Six-vertex graph carrying a valid prefix matching that is not Morse.

    Display labels are 1..6; edges 1-2, 1-3, 2-4, 2-5, 3-4, 3-5, 4-6, 5-6.
    """
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    return build_graph(6, edges, labels=[str(i) for i in range(1, 7)], name='nonmorse')


# name -> (constructor, number of integer parameters)
NAMED_CONSTRUCTORS = {
    'path': (path_graph, 1),
    'cycle': (cycle_graph, 1),
    'complete': (complete_graph, 1),
    'star': (star_graph, 1),
    'fan': (fan, 1),
    'icosahedron': (icosahedron, 0),
    'rook44': (rook44, 0),
    'shrikhande': (shrikhande, 0),
    'dodecahedron': (dodecahedron, 0),
    'desargues': (desargues, 0),
    'block3': (block3, 0),
    'nonmorse': (nonmorse_graph, 0),
}


def named_graph(name, *params):
    """
    Construct a graph by name.

    `tree` takes an edge list, `join` two graphs and `complement` one graph;
    every other name takes the integer parameters listed in NAMED_CONSTRUCTORS.

    Raises:
        GraphError: unknown name or invalid parameters
    """
    if name == 'tree':
        return tree_graph(params[0] if len(params) == 1 else params)
    if name == 'join':
        if len(params) != 2:
            raise GraphError("join takes exactly two graphs")
        return join(*params)
    if name == 'complement':
        if len(params) != 1:
            raise GraphError("complement takes exactly one graph")
        return complement(params[0])
    if name not in NAMED_CONSTRUCTORS:
        raise GraphError(f"unknown graph name: {name}")
    constructor, arity = NAMED_CONSTRUCTORS[name]
    if name == 'fan' and not params:
        return constructor()
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
    try:
        params = [int(p) for p in params]
    except (TypeError, ValueError):
        raise GraphError(f"{name} parameters must be integers, got {params}")
    return constructor(*params)


# =============================================================================
# Metric predicates
# =============================================================================

def shortest_path_counts(graph, dist=None):
    """Number of shortest paths between every ordered pair, exact integers."""
    dist = dist or apsp(graph)
    n = graph.vertex_count
    counts = []
    for s in range(n):
        row = [0] * n
        row[s] = 1
        for v in sorted(range(n), key=lambda x: dist[s][x]):
            if v == s:
                continue
            row[v] = sum(row[u] for u in graph.adjacency[v] if dist[s][u] == dist[s][v] - 1)
        counts.append(row)
    return counts


def is_geodetic(graph, dist=None):
    """True iff every pair of vertices has exactly one shortest path."""
    return all(c == 1 for row in shortest_path_counts(graph, dist) for c in row)


def is_tree(graph):
    return nx.is_tree(graph.to_networkx())


def is_pawful(graph, dist=None):
    """
    Diameter at most 2, and every triple u, v, w with d(u,v) = d(v,w) = 2 and
    d(u,w) = 1 has a common neighbour x (the apex of a paw).
    """
    dist = dist or apsp(graph)
    if dist.diameter > 2:
        return False
    return not list(pawless_triples(graph, dist))


def pawless_triples(graph, dist):
    """Triples (u, v, w) with d(u,v) = d(v,w) = 2, d(u,w) = 1 and no common neighbour."""
    nbrs = graph.neighbor_sets
    for u, w in itertools.permutations(range(graph.vertex_count), 2):
        if dist[u][w] != 1:
            continue
        for v in range(graph.vertex_count):
            if dist[u][v] == 2 and dist[v][w] == 2 and not (nbrs[u] & nbrs[v] & nbrs[w]):
                yield (u, v, w)


def _quadruple_views(dist):
    d = dist.array
    return {
        'xy': d[:, :, None, None], 'zw': d[None, None, :, :],
        'yz': d[None, :, :, None], 'xw': d[:, None, None, :],
        'xz': d[:, None, :, None], 'yw': d[None, :, None, :],
    }


def is_ptolemaic(graph, dist=None):
    """Ptolemy's inequality d(x,y)d(z,w) + d(y,z)d(x,w) >= d(x,z)d(y,w) for all quadruples."""
    v = _quadruple_views(dist or apsp(graph))
    return bool(np.all(v['xy'] * v['zw'] + v['yz'] * v['xw'] >= v['xz'] * v['yw']))


def ptolemaic_char2(graph, dist=None):
    """Chained geodesics x-y-z and y-z-w (y != z) always compose into a geodesic x-w."""
    v = _quadruple_views(dist or apsp(graph))
    chained = (v['yz'] != 0) & (v['xy'] + v['yz'] == v['xz']) & (v['yz'] + v['zw'] == v['yw'])
    return bool(np.all(~chained | (v['xy'] + v['yz'] + v['zw'] == v['xw'])))


def ptolemaic_char3(graph, dist=None):
    """The localized form of ptolemaic_char2 where x-y and y-z are edges."""
    v = _quadruple_views(dist or apsp(graph))
    chained = (v['xy'] == 1) & (v['yz'] == 1) & (v['xz'] == 2) & (v['yz'] + v['zw'] == v['yw'])
    return bool(np.all(~chained | (v['xy'] + v['yz'] + v['zw'] == v['xw'])))


def is_chordal(graph):
    return nx.is_chordal(graph.to_networkx())


def is_distance_hereditary(graph, dist=None):
    """
    Every connected induced subgraph is isometric.

    Checked over all vertex subsets, so only meant for desk-scale graphs.
    """
    dist = dist or apsp(graph)
    g = graph.to_networkx()
    for size in range(3, graph.vertex_count + 1):
        for members in itertools.combinations(range(graph.vertex_count), size):
            if not _is_isometric(g.subgraph(members), members, dist):
                return False
    return True


def _is_isometric(sub, members, dist):
    """True for a disconnected induced subgraph, which has no distances to compare."""
    for s in members:
        seen = nx.single_source_shortest_path_length(sub, s)
        if len(seen) < len(members):
            return True
        if any(seen[t] != dist[s][t] for t in members):
            return False
    return True


def is_block_graph(graph):
    """Connected, and every biconnected component is a clique."""
    if not graph.is_connected:
        return False
    g = graph.to_networkx()
    for component in nx.biconnected_components(g):
        size = len(component)
        if g.subgraph(component).number_of_edges() != size * (size - 1) // 2:
            return False
    return True


# =============================================================================
# Corpora
# =============================================================================

def small_connected_graphs(max_n):
    """Every connected graph on 1..max_n vertices (max_n <= 7), one per isomorphism type."""
    if max_n > 7:
        raise GraphError("the graph atlas stops at 7 vertices")
    for i, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(g):
            yield Graph.from_networkx(g, name=f"atlas:{i}")


def all_trees(max_n):
    """Every tree on 1..max_n vertices, one per isomorphism type."""
    yield build_graph(1, [], name='tree:1')
    for n in range(2, max_n + 1):
        for i, t in enumerate(nx.nonisomorphic_trees(n)):
            yield Graph.from_networkx(t, name=f"tree:{n}:{i}")


def random_connected_graphs(count, max_n, seed):
    """`count` connected G(n, p) graphs with 2 <= n <= max_n, reproducible from `seed`."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.3, 0.9)
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32))
        if not nx.is_connected(g):
            continue
        produced += 1
        yield Graph.from_networkx(g, name=f"random:{seed}:{produced}")
