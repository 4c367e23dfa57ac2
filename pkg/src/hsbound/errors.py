"""Exception types raised by hsbound.

Every error derives from :class:`HSBoundError`, which is itself a
:class:`ValueError`, so callers can catch broadly or narrowly.
"""


class HSBoundError(ValueError):
    """Base class for all hsbound errors."""


class InvalidSample(HSBoundError):
    """Input cannot form a sample (too short, non-finite, wrong shape)."""


class DegenerateSample(HSBoundError):
    """All values are equal, so the standard deviation is zero."""


class InvalidN(HSBoundError):
    """Sample size outside the domain of the requested operation."""


class InvalidIndex(HSBoundError):
    """Order-statistic index outside ``[1, n]``."""


class InvalidJ(HSBoundError):
    """Low-block size outside ``[1, n - 1]``."""


class InvalidScale(HSBoundError):
    """Scale factor is not strictly positive."""


class InvalidParams(HSBoundError):
    """Bad search or construction parameters."""


class InvalidSplit(HSBoundError):
    """``(p, q)`` violates ``p > 0, q > 0, p + q <= 1``."""


class InvalidStandardized(HSBoundError):
    """Vector does not satisfy the centering/normalization constraints."""


class NoSignChange(HSBoundError):
    """Standardized vector has no strictly negative or no strictly positive entry."""


class OddN(HSBoundError):
    """Even-n case analysis requested for an odd sample size."""


class InvalidDistribution(HSBoundError):
    """Atoms do not describe a finite-support probability distribution."""


class ZeroVariance(HSBoundError):
    """Distribution has zero variance."""


class MeanAtomExhaustive(HSBoundError):
    """All probability mass lies on one side of (or at) the mean."""


class InvalidRange(HSBoundError):
    """Sweep range is empty or starts below 3."""


class ParseError(HSBoundError):
    """Dataset text could not be parsed."""
