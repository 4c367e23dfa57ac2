"""Mean, population standard deviation, median and standardization.

All statistics use the population divisor ``n``. The array kernels accept
either a :class:`Sample` or a plain array; arrays of shape ``(..., n)`` are
treated row-wise along the last axis, which is what the verification
harness uses to evaluate large random corpora in one call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import DegenerateSample, InvalidSample, InvalidStandardized

#: absolute tolerance on standardized quantities
EPS_STD = 1e-9


@dataclass(frozen=True)
class Sample:
    """A sorted, finite data vector of length at least 2.

    Values are sorted on construction, so callers may pass data in any order.
    """

    values: NDArray[np.float64]

    def __init__(self, values: ArrayLike):
        arr = np.asarray(values, dtype=float)
        if arr.ndim != 1:
            raise InvalidSample(f"sample must be one-dimensional, got shape {arr.shape}")
        if arr.size < 2:
            raise InvalidSample(f"sample needs at least 2 values, got {arr.size}")
        if not np.all(np.isfinite(arr)):
            raise InvalidSample("sample contains non-finite values")
        arr = np.sort(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def nondegenerate(self) -> bool:
        return bool(self.values[0] < self.values[-1])

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sample):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash(self.values.tobytes())


@dataclass(frozen=True)
class StandardizedSample:
    """Sorted z-scores with ``sum(z) == 0`` and ``sum(z**2) == n`` (to ``n * EPS_STD``)."""

    z: NDArray[np.float64]

    def __init__(self, z: ArrayLike, *, tol: float = EPS_STD):
        arr = np.asarray(z, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise InvalidStandardized("z must be a 1-D vector with at least 2 entries")
        if not np.all(np.isfinite(arr)):
            raise InvalidStandardized("z contains non-finite values")
        if np.any(np.diff(arr) < 0):
            raise InvalidStandardized("z must be sorted nondecreasing")
        n = arr.size
        s1 = float(np.sum(arr))
        s2 = float(np.sum(arr * arr))
        if abs(s1) > n * tol:
            raise InvalidStandardized(f"sum(z) = {s1!r}, expected 0")
        if abs(s2 - n) > n * tol:
            raise InvalidStandardized(f"sum(z**2) = {s2!r}, expected {n}")
        if not arr[0] < arr[-1]:
            raise InvalidStandardized("z must not be constant")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "z", arr)

    @property
    def n(self) -> int:
        return int(self.z.size)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StandardizedSample):
            return NotImplemented
        return np.array_equal(self.z, other.z)

    def __hash__(self) -> int:
        return hash(self.z.tobytes())


class SummaryStats(NamedTuple):
    n: int
    mean: float
    sd: float
    median: float


class ChainTerms(NamedTuple):
    """The four terms of ``|med - mean| <= MAD(med) <= MAD(mean) <= sd``."""

    t1: float
    t2: float
    t3: float
    t4: float


SampleLike = Union[Sample, StandardizedSample, ArrayLike]


def _rows(s: SampleLike) -> NDArray[np.float64]:
    """Return sorted data along the last axis."""
    if isinstance(s, Sample):
        return s.values
    if isinstance(s, StandardizedSample):
        return s.z
    arr = np.asarray(s, dtype=float)
    if arr.ndim == 0 or arr.shape[-1] < 1:
        raise InvalidSample("need at least one value per row")
    return np.sort(arr, axis=-1)


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def _shifted(x: NDArray[np.float64]):
    """Return ``(pivot, d, dm)`` with ``d = x - pivot`` and ``dm = mean(d)``.

    Working relative to the smallest value keeps the mean's rounding error on
    the scale of the spread rather than the location; one extra pass corrects
    what rounding is left in ``dm``.
    """
    pivot = x[..., :1]
    d = x - pivot
    dm = np.mean(d, axis=-1, keepdims=True)
    dm = dm + np.mean(d - dm, axis=-1, keepdims=True)
    return pivot, d, dm


def mean(s: SampleLike):
    """Arithmetic mean, row-wise for 2-D input."""
    pivot, _, dm = _shifted(_rows(s))
    return _scalar((pivot + dm)[..., 0])


def _sd_dev(dev: NDArray[np.float64], ddof: int = 0) -> NDArray[np.float64]:
    n = dev.shape[-1]
    # divide by the largest deviation first so tiny spreads do not underflow to sd == 0
    big = np.max(np.abs(dev), axis=-1, keepdims=True)
    safe = np.where(big > 0, big, 1.0)
    return big[..., 0] * np.sqrt(np.sum((dev / safe) ** 2, axis=-1) / (n - ddof))


def _require_spread(sd: NDArray[np.float64]) -> None:
    # subnormal spreads cannot be standardized to any useful accuracy
    if np.any(sd < np.finfo(float).tiny):
        raise DegenerateSample("standard deviation is zero (all values equal) or subnormal")


def _sd(x: NDArray[np.float64], ddof: int = 0) -> NDArray[np.float64]:
    _, d, dm = _shifted(x)
    return _sd_dev(d - dm, ddof)


def stddev_population(s: SampleLike):
    """Standard deviation with divisor ``n``."""
    return _scalar(_sd(_rows(s)))


def stddev_sample(s: SampleLike):
    """Standard deviation with divisor ``n - 1``.

    Only for reporting; no bound in this package holds for it.
    """
    x = _rows(s)
    if x.shape[-1] < 2:
        raise InvalidSample("divisor n - 1 needs at least 2 values")
    return _scalar(_sd(x, ddof=1))


def _median_sorted(x: NDArray[np.float64]) -> NDArray[np.float64]:
    n = x.shape[-1]
    k = n // 2
    if n % 2:
        return x[..., k]
    return (x[..., k - 1] + x[..., k]) / 2


def median(s: SampleLike):
    """Middle order statistic for odd n, mean of the two middle ones for even n."""
    return _scalar(_median_sorted(_rows(s)))


def summarize(s: SampleLike) -> SummaryStats:
    x = _rows(s)
    if x.ndim != 1:
        raise InvalidSample("summarize takes a single sample")
    return SummaryStats(int(x.size), mean(x), stddev_population(x), median(x))


def zscores(s: SampleLike) -> NDArray[np.float64]:
    """``(x - mean) / sd`` row-wise; raises if any row is constant."""
    _, d, dm = _shifted(_rows(s))
    dev = d - dm
    sd = _sd_dev(dev)
    _require_spread(sd)
    return dev / sd[..., None]


def standardize(s: SampleLike) -> StandardizedSample:
    x = _rows(s)
    if x.ndim != 1:
        raise InvalidSample("standardize takes a single sample; use zscores for batches")
    return StandardizedSample(zscores(x))


def nonparam_skewness(s: SampleLike):
    """``(median - mean) / sd``, the Hotelling-Solomons skewness ratio.

    >>> nonparam_skewness([0, 0, 0, 0, 1])
    -0.5
    """
    _, d, dm = _shifted(_rows(s))
    sd = _sd_dev(d - dm)
    _require_spread(sd)
    return _scalar((_median_sorted(d) - dm[..., 0]) / sd)


def sum_abs_dev(s: SampleLike, mu):
    """``sum(|x_i - mu|)``; ``mu`` broadcasts against the leading axes."""
    x = _rows(s)
    mu = np.asarray(mu, dtype=float)
    return _scalar(np.sum(np.abs(x - mu[..., None]), axis=-1))


def chain_terms(s: SampleLike) -> ChainTerms:
    """Return ``(t1, t2, t3, t4)`` with ``t1 <= t2 <= t3 <= t4``.

    ``t1 = |med - mean|``, ``t2`` and ``t3`` are the mean absolute deviations
    about the median and about the mean, ``t4`` is the population sd.
    Works row-wise on 2-D input, returning arrays.
    """
    _, d, dm = _shifted(_rows(s))
    n = d.shape[-1]
    med = _median_sorted(d)
    dm = dm[..., 0]
    t1 = np.abs(med - dm)
    t2 = np.sum(np.abs(d - med[..., None]), axis=-1) / n
    t3 = np.sum(np.abs(d - dm[..., None]), axis=-1) / n
    t4 = _sd_dev(d - dm[..., None])
    return ChainTerms(*(_scalar(t) for t in (t1, t2, t3, t4)))
