"""Exception types shared across the package."""


class StarlogError(Exception):
    """Base class for all starlog errors."""


class ZeroConstantTerm(StarlogError):
    """Division by a series whose constant term vanishes."""


class NotUnitConstantTerm(StarlogError):
    """log / power of a series whose constant term is not 1."""


class NonzeroConstantTerm(StarlogError):
    """exp / integration of a series whose constant term is not 0."""


class DomainError(StarlogError):
    """Polylogarithm argument or order outside the supported range."""


class InvalidParams(StarlogError):
    """Class parameters (j, k, A, B) violate the defining constraints."""


class InvalidSeed(StarlogError):
    """Schwarz seed fails its certification condition."""


class TruncationTooSmall(StarlogError):
    """Requested truncation order cannot hold a single log coefficient."""


class SupportViolation(StarlogError):
    """log(f/z) has a nonzero coefficient off the multiples of m."""


class WeightOutOfRange(StarlogError):
    """Weight exponent t > 2: the telescoping weight factors turn negative."""


class BExcluded(StarlogError):
    """B = -1 is excluded by the hypothesis of the n^2-weighted bound."""


class DivergentSeries(StarlogError):
    """The weighted bound series diverges for the requested (B, t)."""


class HypothesisViolated(StarlogError):
    """Partial-sum dominance hypothesis fails in the weight-transfer check."""


class SharpnessFailure(StarlogError):
    """Extremal coefficient fails the term-by-term equality check."""

    def __init__(self, message: str, n: int | None = None):
        super().__init__(message)
        self.n = n


class SlowModeRequired(StarlogError):
    """Requested certification needs the explicit slow mode (|B| near 1)."""


class ConfigError(StarlogError):
    """Malformed CLI configuration."""
