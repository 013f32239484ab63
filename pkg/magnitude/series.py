"""
Magnitude of a graph as a truncated power series in q
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chains import count_generators
from .errors import GraphError, MagnitudeError
from .graphs import apsp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerSeries:
    """sum c_i q^i for i < order, with exact rational coefficients."""

    coefficients: tuple

    @classmethod
    def from_coefficients(cls, coefficients, order=None):
        coefficients = [Fraction(c) for c in coefficients]
        order = len(coefficients) if order is None else order
        coefficients = (coefficients + [Fraction(0)] * order)[:order]
        return cls(tuple(coefficients))

    @property
    def order(self):
        return len(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def _truncate_pair(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries.from_coefficients([other], self.order)
        order = min(self.order, other.order)
        return self.coefficients[:order], other.coefficients[:order], order

    def __add__(self, other):
        a, b, _ = self._truncate_pair(other)
        return PowerSeries(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return PowerSeries(tuple(-x for x in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b, order = self._truncate_pair(other)
        out = [Fraction(0)] * order
        for i, x in enumerate(a):
            if x:
                for j in range(order - i):
                    out[i + j] += x * b[j]
        return PowerSeries(tuple(out))

    def inverse(self):
        """1/f, defined when the constant term is nonzero."""
        a = self.coefficients
        if not a or a[0] == 0:
            raise MagnitudeError("power series with zero constant term has no inverse")
        out = [Fraction(0)] * self.order
        out[0] = 1 / a[0]
        for i in range(1, self.order):
            out[i] = -sum(a[j] * out[i - j] for j in range(1, i + 1)) / a[0]
        return PowerSeries(tuple(out))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def integers(self):
        """Coefficients as ints; raises if any is not an integer."""
        if not self.is_integral():
            raise MagnitudeError(f"non-integer coefficient in {self}")
        return [int(c) for c in self.coefficients]

    def __str__(self):
        return format_polynomial(self.coefficients) + f" + O(q^{self.order})"


def format_polynomial(coefficients):
    terms = []
    for i, c in enumerate(coefficients):
        if c == 0:
            continue
        magnitude = abs(c)
        if i == 0:
            body = str(magnitude)
        else:
            power = "q" if i == 1 else f"q^{i}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class RationalFunction:
    """numerator / denominator with integer polynomial coefficients, lowest degree first."""

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise MagnitudeError("denominator must have a nonzero constant term")

    def expand(self, order):
        """Power series expansion to `order` terms by long division."""
        num = PowerSeries.from_coefficients(self.numerator, order)
        den = PowerSeries.from_coefficients(self.denominator, order)
        return num * den.inverse()

    def __str__(self):
        return f"({format_polynomial(self.numerator)})/({format_polynomial(self.denominator)})"


def magnitude_series(graph, order, dist=None):
    """
    The magnitude #G = sum of the entries of Z^{-1}, Z_uv = q^{d(u,v)}, to `order` terms.

    Z = I + N where every entry of N is divisible by q, so
    Z^{-1} = sum_i (-N)^i and only the first `order` powers matter.
    Each vertex vector is kept as an array of polynomial coefficients.

    Raises:
        GraphError: for a disconnected graph
        MagnitudeError: if order < 1 or a coefficient is not an integer
    """
    if order < 1:
        raise MagnitudeError(f"order must be at least 1, got {order}")
    dist = dist or apsp(graph)
    d = dist.array
    n = graph.vertex_count
    # shells[t]: adjacency-by-distance matrix for distance t
    shells = {t: (d == t).astype(np.int64).astype(object) for t in range(1, min(order, dist.diameter + 1))}

    # current[s, v] = coefficient of q^s in ((-N)^i 1)_v
    current = np.zeros((order, n), dtype=object)
    current[0, :] = 1
    total = current.sum(axis=1)
    for _ in range(1, order):
        nxt = np.zeros((order, n), dtype=object)
        for t, shell in shells.items():
            nxt[t:, :] -= (shell @ current[:order - t, :].T).T
        current = nxt
        if not current.any():
            break
        total = total + current.sum(axis=1)
    series = PowerSeries(tuple(Fraction(int(c)) for c in total))
    series.integers()
    logger.debug("magnitude of %s to order %d: %s", graph.name, order, series)
    return series


def speyer_magnitude(graph, basepoint=0, dist=None):
    """
    Closed form #G = |V| / sum_x q^{d(a,x)} for graphs where every vertex sees
    the same number of vertices at each distance.

    Raises:
        GraphError: naming two vertices with different distance profiles
    """
    dist = dist or apsp(graph)
    reference = dist.profile(basepoint)
    for v in range(graph.vertex_count):
        if dist.profile(v) != reference:
            raise GraphError(
                f"{graph.name}: vertices {graph.label(basepoint)} and {graph.label(v)} have different "
                f"distance profiles {reference} and {dist.profile(v)}"
            )
    return RationalFunction((graph.vertex_count,), tuple(reference))


def chain_euler(graph, l, dist=None):
    """sum_k (-1)^k |I_{k,l}(G)|, the coefficient of q^l in #G."""
    if l < 0:
        raise MagnitudeError(f"l must be non-negative, got {l}")
    dist = dist or apsp(graph)
    return sum((-1) ** k * count_generators(graph, k, l, dist) for k in range(l + 1))
