"""
Sparse integer matrices for boundary maps
"""

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property


@dataclass
class SparseIntegerMatrix:
    """
    rows x cols integer matrix stored as {(row, col): value}.

    Zero values are never stored, so `entries` has no duplicate positions and
    `nnz` is its length. Values are Python ints and never overflow.
    """

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, {})

    @classmethod
    def from_triples(cls, rows, cols, triples):
        """Accumulate (row, col, value) triples; repeated positions are summed."""
        acc = defaultdict(int)
        for r, c, v in triples:
            acc[(r, c)] += v
        return cls(rows, cols, {pos: v for pos, v in acc.items() if v})

    @classmethod
    def from_dense(cls, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {(r, c): int(v) for r, row in enumerate(data) for c, v in enumerate(row) if v}
        return cls(rows, cols, entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return len(self.entries)

    def get(self, row, col):
        return self.entries.get((row, col), 0)

    def is_zero(self):
        return not self.entries

    @cached_property
    def by_column(self):
        """col -> list of (row, value), rows ascending."""
        columns = defaultdict(list)
        for (r, c), v in sorted(self.entries.items()):
            columns[c].append((r, v))
        return dict(columns)

    def column(self, col):
        return self.by_column.get(col, [])

    def triples(self):
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]

    def to_dense(self):
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def transpose(self):
        return SparseIntegerMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        acc = defaultdict(int)
        left = self.by_column
        for (j, c), b in other.entries.items():
            for i, a in left.get(j, ()):
                acc[(i, c)] += a * b
        return SparseIntegerMatrix(self.rows, other.cols, {pos: v for pos, v in acc.items() if v})

    def __eq__(self, other):
        if not isinstance(other, SparseIntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries
