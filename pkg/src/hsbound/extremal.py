"""Two-level standardized samples, including the ones that attain the sharp bound."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .bounds import _as_int
from .core_stats import EPS_STD, Sample, StandardizedSample
from .errors import InvalidJ, InvalidN, InvalidParams, InvalidScale


@dataclass(frozen=True)
class TwoBlockConfig:
    """``j`` copies of ``low`` followed by ``n - j`` copies of ``high``."""

    n: int
    j: int
    low: float
    high: float

    def __post_init__(self):
        n, j = self.n, self.j
        if n < 3:
            raise InvalidN(f"two-block configurations need n >= 3, got {n}")
        if not 1 <= j <= n - 1:
            raise InvalidJ(f"j = {j} outside [1, {n - 1}]")
        if not self.low < self.high:
            raise InvalidParams("low must be strictly below high")
        centre = j * self.low + (n - j) * self.high
        norm = j * self.low**2 + (n - j) * self.high**2
        if abs(centre) > n * EPS_STD or abs(norm - n) > n * EPS_STD:
            raise InvalidParams(
                f"not standardized: weighted sum {centre!r}, weighted sum of squares {norm!r}"
            )

    def values(self) -> NDArray[np.float64]:
        return np.concatenate([np.full(self.j, self.low), np.full(self.n - self.j, self.high)])

    def expand(self) -> StandardizedSample:
        return StandardizedSample(self.values())


def two_block_z(n: int, j: int) -> TwoBlockConfig:
    """The standardized two-level sample with a low block of size ``j``.

    Solving ``j*low + (n-j)*high = 0`` and ``j*low**2 + (n-j)*high**2 = n``
    with ``low < high`` gives ``low = -sqrt((n-j)/j)``, ``high = sqrt(j/(n-j))``.
    """
    n = _as_int(n)
    j = _as_int(j, InvalidJ)
    if n < 3:
        raise InvalidN(f"two_block_z needs n >= 3, got {n}")
    if not 1 <= j <= n - 1:
        raise InvalidJ(f"j = {j} outside [1, {n - 1}]")
    return TwoBlockConfig(n, j, -math.sqrt((n - j) / j), math.sqrt(j / (n - j)))


def extremal_j(n: int, sign: int) -> int:
    """Low-block size of the configuration attaining ``sign * sharp_bound(n)``."""
    n = _as_int(n)
    if n < 3:
        raise InvalidN(f"extremal configurations need n >= 3, got {n}")
    if sign not in (1, -1):
        raise InvalidParams(f"sign must be +1 or -1, got {sign!r}")
    k = n // 2
    if n % 2:
        return k if sign > 0 else k + 1
    return k - 1 if sign > 0 else k + 1


def extremal_z(n: int, sign: int) -> StandardizedSample:
    """Standardized sample whose median equals ``sign * sharp_bound(n)``.

    ``sign = +1`` puts the median above the mean. For odd ``n = 2k+1`` the low
    block has ``k`` (sign +1) or ``k + 1`` (sign -1) entries; for even
    ``n = 2k`` it has ``k - 1`` or ``k + 1``.
    """
    return two_block_z(n, extremal_j(n, sign)).expand()


def rescale(z: StandardizedSample | ArrayLike, location: float = 0.0, scale: float = 1.0) -> Sample:
    """Map standardized values to ``location + scale * z``."""
    scale = float(scale)
    if not (math.isfinite(scale) and scale > 0):
        raise InvalidScale(f"scale must be positive and finite, got {scale!r}")
    arr = z.z if isinstance(z, StandardizedSample) else np.asarray(z, dtype=float)
    return Sample(float(location) + scale * arr)
