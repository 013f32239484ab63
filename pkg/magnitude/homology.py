"""
Exact integer homology: sparse Smith normal form, homology groups and tables
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd

from .errors import ChainComplexError
from .matrices import SparseIntegerMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithForm:
    """Rank and invariant factors d_1 | d_2 | ... | d_rank of an integer matrix."""

    rank: int
    invariant_factors: tuple = ()

    @property
    def torsion(self):
        return tuple(d for d in self.invariant_factors if d > 1)


@dataclass(frozen=True)
class HomologyGroup:
    """Z^rank plus the cyclic groups Z/t for t in torsion."""

    rank: int
    torsion: tuple = ()

    def is_zero(self):
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


class _Eliminator:
    """Row/column index of a sparse matrix under unimodular operations."""

    def __init__(self, matrix):
        self.rows = defaultdict(dict)
        self.cols = defaultdict(set)
        for (r, c), v in matrix.entries.items():
            self.rows[r][c] = v
            self.cols[c].add(r)

    def _set(self, r, c, value):
        if value:
            self.rows[r][c] = value
            self.cols[c].add(r)
        else:
            self.rows[r].pop(c, None)
            self.cols[c].discard(r)

    def add_row_multiple(self, target, source, factor):
        """row[target] -= factor * row[source]"""
        for c, v in list(self.rows[source].items()):
            self._set(target, c, self.rows[target].get(c, 0) - factor * v)

    def add_col_multiple(self, target, source, factor):
        """col[target] -= factor * col[source]"""
        for r in list(self.cols[source]):
            v = self.rows[r][source]
            self._set(r, target, self.rows[r].get(target, 0) - factor * v)

    def drop(self, r, c):
        for c2 in self.rows.pop(r, {}):
            self.cols[c2].discard(r)
        for r2 in self.cols.pop(c, set()):
            self.rows[r2].pop(c, None)

    def entries(self):
        return ((r, c, v) for r, row in self.rows.items() for c, v in row.items())

    def unit_pass(self):
        """
        Eliminate every pivot reachable through a +-1 entry.

        Columns are visited sparsest first; within a column the unit entry in
        the sparsest row is used, which keeps fill-in low. Returns the number
        of pivots removed.
        """
        pivots = 0
        progress = True
        while progress:
            progress = False
            for c in sorted((c for c in self.cols if self.cols[c]), key=lambda c: len(self.cols[c])):
                if not self.cols.get(c):
                    continue
                candidates = [r for r in self.cols[c] if abs(self.rows[r][c]) == 1]
                if not candidates:
                    continue
                r = min(candidates, key=lambda x: (len(self.rows[x]), x))
                unit = self.rows[r][c]
                for r2 in list(self.cols[c]):
                    if r2 != r:
                        self.add_row_multiple(r2, r, self.rows[r2][c] * unit)
                self.drop(r, c)
                pivots += 1
                progress = True
        return pivots

    def general_pass(self):
        """Euclidean elimination on what is left; returns the isolated pivot values."""
        diagonal = []
        while True:
            remaining = list(self.entries())
            if not remaining:
                return diagonal
            r, c, p = min(remaining, key=lambda e: (abs(e[2]), e[0], e[1]))
            while True:
                for r2 in list(self.cols[c]):
                    if r2 != r:
                        self.add_row_multiple(r2, r, self.rows[r2][c] // p)
                for c2 in list(self.rows[r]):
                    if c2 != c:
                        self.add_col_multiple(c2, c, self.rows[r][c2] // p)
                leftovers = [(r2, c, self.rows[r2][c]) for r2 in self.cols[c] if r2 != r]
                leftovers += [(r, c2, v) for c2, v in self.rows[r].items() if c2 != c]
                if not leftovers:
                    break
                r, c, p = min(leftovers, key=lambda e: (abs(e[2]), e[0], e[1]))
            diagonal.append(abs(p))
            self.drop(r, c)


def _divisibility_chain(values):
    values = sorted(values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            a, b = values[i], values[j]
            g = gcd(a, b)
            values[i], values[j] = g, a * b // g
    return tuple(sorted(values))


def smith_normal_form(matrix):
    """
    Smith normal form of a sparse integer matrix.

    Unit pivots are eliminated first with a least-fill-in choice; whatever
    remains is diagonalised by Euclidean row and column reduction and the
    diagonal is finally normalised into a divisibility chain.

    Args:
        matrix: SparseIntegerMatrix

    Returns:
        SmithForm
    """
    if matrix.is_zero():
        return SmithForm(0, ())
    work = _Eliminator(matrix)
    units = work.unit_pass()
    rest = work.general_pass()
    factors = (1,) * units + _divisibility_chain(rest)
    logger.debug("smith form of %dx%d (nnz %d): rank %d, %d unit pivots",
                 matrix.rows, matrix.cols, matrix.nnz, len(factors), units)
    return SmithForm(len(factors), factors)


def _check_composable(d_k, d_k_plus_1):
    if d_k.cols != d_k_plus_1.rows:
        raise ChainComplexError(f"differentials do not compose: {d_k.shape} after {d_k_plus_1.shape}")
    if not (d_k @ d_k_plus_1).is_zero():
        raise ChainComplexError(f"differential squared is not zero ({d_k.shape} after {d_k_plus_1.shape})")


def homology(d_k, d_k_plus_1):
    """
    H_k of  C_{k+1} --d_{k+1}--> C_k --d_k--> C_{k-1}.

    Raises:
        ChainComplexError: if d_k . d_{k+1} is not zero
    """
    _check_composable(d_k, d_k_plus_1)
    outgoing = smith_normal_form(d_k)
    incoming = smith_normal_form(d_k_plus_1)
    return HomologyGroup(d_k.cols - outgoing.rank - incoming.rank, incoming.torsion)


def chain_homology(sizes, differentials, check=True):
    """
    Homology in every degree of a complex concentrated in degrees 0..len(sizes)-1.

    Each Smith form is computed once and shared by the two degrees it touches.

    Args:
        sizes: Number of generators per degree
        differentials: degree k -> SparseIntegerMatrix C_k -> C_{k-1}; absent means zero
        check: Verify that consecutive differentials compose to zero

    Returns:
        dict degree -> HomologyGroup
    """
    top = len(sizes) - 1

    def matrix(k):
        if k in differentials:
            return differentials[k]
        rows = sizes[k - 1] if k >= 1 else 0
        cols = sizes[k] if k <= top else 0
        return SparseIntegerMatrix.zero(rows, cols)

    if check:
        for k in range(1, top):
            _check_composable(matrix(k), matrix(k + 1))
    forms = {k: smith_normal_form(matrix(k)) for k in range(1, top + 1)}
    empty = SmithForm(0, ())
    groups = {}
    for k in range(top + 1):
        out_rank = forms.get(k, empty).rank
        incoming = forms.get(k + 1, empty)
        groups[k] = HomologyGroup(sizes[k] - out_rank - incoming.rank, incoming.torsion)
    return groups


@dataclass
class HomologyTable:
    """
    MH_{k,l} for 0 <= k <= l <= lmax.

    `entries` maps (k, l) to HomologyGroup; `metadata` carries run details
    (seed, timings) that are written out but not compared.
    """

    graph: str
    method: str
    lmax: int
    entries: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict, compare=False)

    def group(self, k, l):
        return self.entries.get((k, l), HomologyGroup(0))

    def rank(self, k, l):
        return self.group(k, l).rank

    def euler(self, l):
        """Sum over k of (-1)^k rank MH_{k,l}."""
        return sum((-1) ** k * self.rank(k, l) for k in range(l + 1))

    def off_diagonal(self):
        """Nonzero entries with k != l, in (l, k) order."""
        return [(k, l, g) for (k, l), g in sorted(self.entries.items(), key=lambda e: (e[0][1], e[0][0]))
                if k != l and not g.is_zero()]

    def has_torsion(self):
        return any(g.torsion for g in self.entries.values())

    def to_dict(self):
        return {
            'graph': self.graph,
            'method': self.method,
            'lmax': self.lmax,
            'metadata': self.metadata,
            'entries': [
                {'k': k, 'l': l, 'rank': g.rank, 'torsion': list(g.torsion)}
                for (k, l), g in sorted(self.entries.items(), key=lambda e: (e[0][1], e[0][0]))
            ],
        }

    @classmethod
    def from_dict(cls, data):
        entries = {(e['k'], e['l']): HomologyGroup(e['rank'], tuple(e.get('torsion', ())))
                   for e in data['entries']}
        lmax = data.get('lmax', max((l for _, l in entries), default=0))
        return cls(data['graph'], data['method'], lmax, entries, data.get('metadata', {}))
