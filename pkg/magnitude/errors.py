"""
Exception hierarchy for the magnitude package
"""


class MagnitudeError(Exception):
    """Base class for all errors raised by the package."""


class GraphError(MagnitudeError):
    """Invalid graph input: self-loop, bad index, disconnected, unknown name."""


class GeneratorCapExceeded(MagnitudeError):
    """A grading has more generators than the configured cap."""

    def __init__(self, k, l, count, cap):
        self.k = k
        self.l = l
        self.count = count
        self.cap = cap
        super().__init__(
            f"I_{{{k},{l}}} has {count} generators, above the cap of {cap} "
            f"(set MAGNITUDE_GENERATOR_CAP to raise it)"
        )


class ChainComplexError(MagnitudeError):
    """A differential squared is not zero."""


class RuleError(MagnitudeError):
    """A matching rule produced an outcome it is not allowed to produce."""


class RulePreconditionError(RuleError):
    """A matching rule was requested for a graph it does not apply to."""


class MatchingError(MagnitudeError):
    """A matching is not a matching, or is not acyclic where it must be."""


class ConsistencyError(MagnitudeError):
    """Two computations that must agree did not (Euler characteristic, naive vs Morse)."""
