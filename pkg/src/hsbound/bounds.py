"""Closed-form bounds on the skewness ratio ``(median - mean) / sd``."""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidIndex, InvalidN, InvalidSplit

# p + q is usually a float sum of probabilities; allow it to overshoot 1 by roundoff.
_SPLIT_SLACK = 1e-12


def _as_int(n, err=InvalidN) -> int:
    if isinstance(n, bool):
        raise err(f"expected an integer, got {n!r}")
    try:
        return operator.index(n)
    except TypeError:
        raise err(f"expected an integer, got {n!r}") from None


def classical_bound() -> float:
    """The Hotelling-Solomons bound: ``|median - mean| / sd <= 1``."""
    return 1.0


def sharp_bound(n: int) -> float:
    """Sample-size dependent bound on ``|median - mean| / sd``.

    ``sqrt(k / (k + 1))`` for ``n = 2k + 1`` and ``sqrt((k - 1) / (k + 1))``
    for ``n = 2k``. Defined for ``n >= 2``; ``n = 2`` gives 0 because the
    median and mean coincide.
    """
    n = _as_int(n)
    if n < 2:
        raise InvalidN(f"sharp_bound needs n >= 2, got {n}")
    k = n // 2
    if n % 2:
        return math.sqrt(k / (k + 1))
    return math.sqrt((k - 1) / (k + 1))


class OrderStatRange(NamedTuple):
    lo: float
    hi: float


def order_stat_range(n: int, i: int) -> OrderStatRange:
    """Range of the standardized ``i``-th order statistic ``(x_(i) - mean) / sd``.

    ``i`` is 1-based. The extreme order statistics get their own one-signed
    ranges; the generic formula is used for ``2 <= i <= n - 1``.
    """
    n = _as_int(n)
    i = _as_int(i, InvalidIndex)
    if n < 2:
        raise InvalidN(f"order_stat_range needs n >= 2, got {n}")
    if not 1 <= i <= n:
        raise InvalidIndex(f"index {i} outside [1, {n}]")
    if i == 1:
        return OrderStatRange(-math.sqrt(n - 1), -math.sqrt(1 / (n - 1)))
    if i == n:
        return OrderStatRange(math.sqrt(1 / (n - 1)), math.sqrt(n - 1))
    return OrderStatRange(-math.sqrt((n - i) / i), math.sqrt((i - 1) / (n + 1 - i)))


@dataclass(frozen=True)
class ProbabilitySplit:
    """Masses strictly above (``p``) and strictly below (``q``) the mean."""

    p: float
    q: float

    def __post_init__(self):
        p, q = float(self.p), float(self.q)
        if not (math.isfinite(p) and math.isfinite(q)):
            raise InvalidSplit(f"p and q must be finite, got p={p!r}, q={q!r}")
        if p <= 0 or q <= 0:
            raise InvalidSplit(f"p and q must be positive, got p={p!r}, q={q!r}")
        if p + q > 1 + _SPLIT_SLACK:
            raise InvalidSplit(f"p + q must not exceed 1, got {p + q!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


class LemmaTerms(NamedTuple):
    lhs: float
    a1: float
    a2: float
    a3: float

    @property
    def min_rhs(self) -> float:
        return min(self.a1, self.a2, self.a3)


def lemma_pq_terms(ps: ProbabilitySplit) -> LemmaTerms:
    """``pq/(p+q)`` alongside the three quantities it never exceeds.

    >>> lemma_pq_terms(ProbabilitySplit(0.5, 0.5))
    LemmaTerms(lhs=0.25, a1=0.25, a2=0.25, a3=0.25)
    """
    p, q = ps.p, ps.q
    return LemmaTerms(p * q / (p + q), p * (1 - p), q * (1 - q), (p + q) / 4)


def majindar_bound(ps: ProbabilitySplit) -> float:
    """``2 * sqrt(pq / (p + q))``, a bound on ``|E[X] - M| / sd(X)``."""
    return 2 * math.sqrt(lemma_pq_terms(ps).lhs)
