"""Numerical verification of the sharp bound.

Contents:

* :func:`check_sample` reports a sample's ratio against both bounds.
* :func:`two_block_sweep` is an exact oracle over every two-level configuration.
* :func:`random_search_max` is a seeded perturb-and-project hill climber.
* :func:`imbalance_decomposition` and :func:`case_classify` expose the
  ``(ell, m, a)`` bookkeeping and the even-n case split as checkable quantities.
* :func:`majindar_check` tests the probabilistic bound on finite-support laws.
* :func:`random_samples` and :func:`random_distribution` generate test corpora.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .bounds import ProbabilitySplit, _as_int, classical_bound, majindar_bound, sharp_bound
from .core_stats import (
    EPS_STD,
    Sample,
    SampleLike,
    StandardizedSample,
    _median_sorted,
    nonparam_skewness,
    standardize,
)
from .errors import (
    InvalidDistribution,
    InvalidN,
    InvalidParams,
    MeanAtomExhaustive,
    NoSignChange,
    OddN,
    ZeroVariance,
)
from .extremal import two_block_z

#: slack below which a sample counts as attaining the sharp bound
EXTREMAL_TOL = 1e-9
#: slack used for the Majindar comparison and its boundary flag
MAJINDAR_TOL = 1e-9


def _z_rows(z) -> NDArray[np.float64]:
    if isinstance(z, StandardizedSample):
        return z.z
    return np.asarray(z, dtype=float)


# ---------------------------------------------------------------------------
# (ell, m, a) decomposition


@dataclass(frozen=True)
class ImbalanceDecomposition:
    """Negative count ``ell``, non-positive boundary ``m`` and negative mass ``a``.

    Entries ``1..ell`` are negative, ``m+1..n`` positive, anything between is
    zero to within ``EPS_STD``.
    """

    n: int
    ell: int
    m: int
    a: float
    upper_mass: float

    @property
    def cs_bound(self) -> float:
        """Cauchy-Schwarz ceiling ``n**2 / (n/ell + n/(n-m))`` on ``a**2``."""
        return _cs_bound(self.n, self.ell, self.m)

    def satisfies_cs(self, tol: float = 1e-9) -> bool:
        return self.a**2 <= self.cs_bound + tol


def _cs_bound(n, ell, m):
    return n**2 / (n / ell + n / (n - m))


def imbalance_rows(z: ArrayLike, tol: float = EPS_STD):
    """Vectorized decomposition of sorted standardized rows.

    Returns ``(ell, m, a, upper_mass)`` as arrays; rows without a sign change
    get ``ell == 0`` or ``m == n`` and must be filtered by the caller.
    """
    z = np.asarray(z, dtype=float)
    n = z.shape[-1]
    neg = z < -tol
    pos = z > tol
    ell = neg.sum(axis=-1)
    m = n - pos.sum(axis=-1)
    a = -np.where(neg, z, 0.0).sum(axis=-1)
    upper = np.where(pos, z, 0.0).sum(axis=-1)
    return ell, m, a, upper


def imbalance_decomposition(z: StandardizedSample | ArrayLike) -> ImbalanceDecomposition:
    arr = _z_rows(z)
    n = arr.size
    ell, m, a, upper = imbalance_rows(arr[None, :])
    ell, m = int(ell[0]), int(m[0])
    if ell == 0 or m == n:
        raise NoSignChange("standardized vector needs both negative and positive entries")
    return ImbalanceDecomposition(n, ell, m, float(a[0]), float(upper[0]))


def cs_holds_rows(z: ArrayLike, tol: float = 1e-9) -> NDArray[np.bool_]:
    """Row-wise ``a**2 <= n**2/(n/ell + n/(n-m)) + tol``; raises on rows without a sign change."""
    z = np.asarray(z, dtype=float)
    n = z.shape[-1]
    ell, m, a, _ = imbalance_rows(z)
    if np.any(ell == 0) or np.any(m == n):
        raise NoSignChange("some rows have no sign change")
    return a**2 <= _cs_bound(n, ell, m) + tol


# ---------------------------------------------------------------------------
# even-n case split


class EvenCase(str, enum.Enum):
    ZERO = "Zero"
    I = "I"  # noqa: E741
    II = "II"
    III = "III"
    IV = "IV"


CASE_ORDER = (EvenCase.ZERO, EvenCase.I, EvenCase.II, EvenCase.III, EvenCase.IV)


def case_rows(z: ArrayLike, tol: float = EPS_STD) -> NDArray[np.int_]:
    """Case codes for sorted standardized rows of even length ``2k``.

    Codes index :data:`CASE_ORDER`: 0 is ``Zero``, 1..4 are Cases I..IV.
    """
    z = np.asarray(z, dtype=float)
    n = z.shape[-1]
    if n % 2:
        raise OddN(f"case split is defined for even n, got {n}")
    k = n // 2
    zk, zk1 = z[..., k - 1], z[..., k]
    total = zk + zk1
    return np.select(
        [
            np.abs(total) <= tol,
            (total > 0) & (zk <= 0),
            (total < 0) & (zk1 >= 0),
            total > 0,
            total < 0,
        ],
        [0, 1, 2, 3, 4],
        default=-1,
    )


def case_classify(z: StandardizedSample | ArrayLike) -> EvenCase:
    """Case I-IV of the even-n argument, or ``Zero`` when the median vanishes."""
    return CASE_ORDER[int(case_rows(_z_rows(z)[None, :])[0])]


# ---------------------------------------------------------------------------
# sample reports


@dataclass(frozen=True)
class BoundReport:
    n: int
    ratio: float
    classical: float
    sharp: float
    slack: float
    is_extremal: bool
    case_label: Optional[EvenCase] = None

    @property
    def within_classical(self) -> bool:
        return abs(self.ratio) <= self.classical + EPS_STD

    @property
    def within_sharp(self) -> bool:
        return abs(self.ratio) <= self.sharp + EPS_STD

    @property
    def holds(self) -> bool:
        return self.within_classical and self.within_sharp


def check_sample(s: SampleLike) -> BoundReport:
    if not isinstance(s, Sample):
        s = Sample(s)
    if s.n < 3:
        raise InvalidN(f"the sharp bound is stated for n >= 3, got {s.n}")
    ratio = nonparam_skewness(s)
    sharp = sharp_bound(s.n)
    slack = sharp - abs(ratio)
    label = case_classify(standardize(s)) if s.n % 2 == 0 else None
    return BoundReport(s.n, ratio, classical_bound(), sharp, slack, slack <= EXTREMAL_TOL, label)


# ---------------------------------------------------------------------------
# exact two-block oracle


@dataclass(frozen=True)
class SweepResult:
    n: int
    j_star: int
    max_ratio: float
    per_j: tuple[tuple[int, float], ...]
    maximizers: tuple[int, ...] = field(default=())


def two_block_sweep(n: int, tie_tol: float = 1e-12) -> SweepResult:
    """Evaluate the skewness ratio of every two-block configuration of size ``n``.

    Each configuration is expanded and run through the ordinary
    mean/sd/median path, so the result is an independent check on
    :func:`~hsbound.extremal.extremal_z`. ``per_j`` holds signed ratios;
    ``max_ratio`` is the largest absolute one and ``j_star`` the smallest
    ``j`` attaining it. ``maximizers`` lists every ``j`` within ``tie_tol``.
    """
    n = _as_int(n)
    if n < 3:
        raise InvalidN(f"two_block_sweep needs n >= 3, got {n}")
    rows = np.stack([two_block_z(n, j).values() for j in range(1, n)])
    ratios = nonparam_skewness(rows)
    absr = np.abs(ratios)
    best = int(np.argmax(absr))
    max_ratio = float(absr[best])
    ties = tuple(int(j) + 1 for j in np.flatnonzero(absr >= max_ratio - tie_tol))
    per_j = tuple((j, float(r)) for j, r in zip(range(1, n), ratios))
    return SweepResult(n, best + 1, max_ratio, per_j, ties)


# ---------------------------------------------------------------------------
# randomized search


@dataclass(frozen=True)
class SearchResult:
    n: int
    best_ratio: float
    best_z: StandardizedSample
    best_restart: int
    per_restart: tuple[float, ...]


def _project(x: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.bool_]]:
    """Center, scale to ``sum(z**2) == n`` and sort each row.

    Also returns a mask of rows that were usable (not constant).
    """
    n = x.shape[-1]
    x = x - x.mean(axis=-1, keepdims=True)
    norm = np.sqrt((x * x).sum(axis=-1, keepdims=True))
    ok = norm[..., 0] > 0
    safe = np.where(norm > 0, norm, 1.0)
    x = x * (math.sqrt(n) / safe)
    x.sort(axis=-1)
    return x, ok


def _substreams(seed: int, restarts: int) -> list[tuple[np.random.Generator, np.random.Generator]]:
    # per restart: a Gaussian stream and a uniform stream, keyed on (seed, restart index);
    # keeping them apart makes the draws independent of how iterations are chunked
    root = np.random.SeedSequence(int(seed) % 2**64)
    return [
        tuple(np.random.default_rng(s) for s in child.spawn(2))
        for child in root.spawn(restarts)
    ]


def random_search_max(
    n: int,
    restarts: int = 200,
    iters: int = 2000,
    seed: int = 0,
    *,
    step: float = 0.3,
    coordinate_prob: float = 0.8,
    chunk: int = 256,
) -> SearchResult:
    """Maximize ``|median(z)|`` over standardized samples by hill climbing.

    Every restart draws a Gaussian start, then repeatedly perturbs,
    re-centers, re-normalizes and re-sorts, keeping the candidate only if the
    objective strictly increases. A perturbation moves a single random
    coordinate with probability ``coordinate_prob`` and all coordinates
    otherwise; single-coordinate moves are what let the search close in on
    the tied blocks of the extremal samples. The step size grows after an
    accepted move and shrinks after a rejected one.

    Restarts use separate random substreams spawned from ``seed``, so a
    restart's trajectory depends only on ``(seed, restart index)``. They are
    advanced together as one array for speed; the result equals running them
    one after another. Ties in the final reduction go to the lowest restart.
    """
    n = _as_int(n)
    if n < 3:
        raise InvalidN(f"random_search_max needs n >= 3, got {n}")
    restarts = _as_int(restarts, InvalidParams)
    iters = _as_int(iters, InvalidParams)
    if restarts < 1:
        raise InvalidParams(f"restarts must be positive, got {restarts}")
    if iters < 0:
        raise InvalidParams(f"iters must be nonnegative, got {iters}")
    if not step > 0:
        raise InvalidParams(f"step must be positive, got {step}")
    if not 0 <= coordinate_prob <= 1:
        raise InvalidParams(f"coordinate_prob must lie in [0, 1], got {coordinate_prob}")

    streams = _substreams(seed, restarts)
    x = np.stack([gauss.standard_normal(n) for gauss, _ in streams])
    x, ok = _project(x)
    while not ok.all():  # measure-zero event, redraw the offending starts
        for r in np.flatnonzero(~ok):
            x[r] = streams[r][0].standard_normal(n)
        x, ok = _project(x)
    cur = np.abs(_median_sorted(x))
    sigma = np.full(restarts, float(step))

    done = 0
    while done < iters:
        c = min(chunk, iters - done)
        noise = np.empty((c, restarts, n))
        single = np.empty((c, restarts), dtype=bool)
        coord = np.empty((c, restarts), dtype=np.intp)
        for r, (gauss, unif) in enumerate(streams):
            noise[:, r] = gauss.standard_normal((c, n))
            u = unif.uniform(size=(c, 2))
            single[:, r] = u[:, 0] < coordinate_prob
            coord[:, r] = np.minimum((u[:, 1] * n).astype(np.intp), n - 1)
        keep = ~single[..., None] | (np.arange(n) == coord[..., None])
        noise *= keep
        for t in range(c):
            cand, ok = _project(x + sigma[:, None] * noise[t])
            val = np.abs(_median_sorted(cand))
            acc = ok & (val > cur)
            x[acc] = cand[acc]
            cur[acc] = val[acc]
            sigma = np.clip(np.where(acc, sigma * 1.2, sigma * 0.95), 1e-8, 2.0)
        done += c

    best = int(np.argmax(cur))
    return SearchResult(
        n, float(cur[best]), StandardizedSample(x[best]), best, tuple(float(v) for v in cur)
    )


# ---------------------------------------------------------------------------
# finite-support distributions


@dataclass(frozen=True)
class DiscreteDistribution:
    """Atoms ``(value, prob)`` with distinct sorted values and total mass 1."""

    values: tuple[float, ...]
    probs: tuple[float, ...]

    def __init__(self, atoms: Iterable[tuple[float, float]]):
        pairs = sorted((float(v), float(p)) for v, p in atoms)
        if len(pairs) < 2:
            raise InvalidDistribution("need at least two atoms")
        vals = [v for v, _ in pairs]
        probs = [p for _, p in pairs]
        if not all(math.isfinite(v) for v in vals):
            raise InvalidDistribution("atom values must be finite")
        if any(b == a for a, b in zip(vals, vals[1:])):
            raise InvalidDistribution("atom values must be distinct")
        if not all(0 < p <= 1 for p in probs):
            raise InvalidDistribution("atom probabilities must lie in (0, 1]")
        if abs(math.fsum(probs) - 1) > 1e-12:
            raise InvalidDistribution(f"probabilities sum to {math.fsum(probs)!r}, not 1")
        object.__setattr__(self, "values", tuple(vals))
        object.__setattr__(self, "probs", tuple(probs))

    @property
    def atoms(self) -> tuple[tuple[float, float], ...]:
        return tuple(zip(self.values, self.probs))

    def mean(self) -> float:
        return math.fsum(v * p for v, p in self.atoms)

    def variance(self) -> float:
        mu = self.mean()
        return math.fsum(p * (v - mu) ** 2 for v, p in self.atoms)

    def median_interval(self, tol: float = 1e-12) -> tuple[float, float]:
        """Endpoints of ``{m : P(X <= m) >= 1/2 and P(X >= m) >= 1/2}``."""
        cdf = np.cumsum(self.probs)
        sf = np.cumsum(self.probs[::-1])[::-1]
        lo = self.values[int(np.argmax(cdf >= 0.5 - tol))]
        hi = self.values[int(np.flatnonzero(sf >= 0.5 - tol)[-1])]
        return lo, hi

    def median(self) -> float:
        lo, hi = self.median_interval()
        return (lo + hi) / 2


@dataclass(frozen=True)
class MajindarResult:
    ratio: float
    bound: float
    ok: bool
    boundary: bool
    mean: float
    median: float
    sd: float
    p: float
    q: float


def majindar_check(d: DiscreteDistribution, tol: float = MAJINDAR_TOL) -> MajindarResult:
    """Compare ``|E[X] - M| / sd`` with ``2 sqrt(pq / (p + q))``.

    ``M`` is the midpoint of the median interval. An atom within roundoff of
    the mean counts as sitting at the mean, contributing to neither ``p`` nor ``q``.
    """
    mu = d.mean()
    var = d.variance()
    if not var > 0:
        raise ZeroVariance("distribution has zero variance")
    at_mean = 1e-12 * max(1.0, max(abs(v) for v in d.values))
    p = math.fsum(pr for v, pr in d.atoms if v > mu + at_mean)
    q = math.fsum(pr for v, pr in d.atoms if v < mu - at_mean)
    if p == 0 or q == 0:
        raise MeanAtomExhaustive("all mass lies on one side of the mean")
    med = d.median()
    sd = math.sqrt(var)
    ratio = abs(mu - med) / sd
    bound = majindar_bound(ProbabilitySplit(p, q))
    return MajindarResult(
        ratio, bound, ratio <= bound + tol, abs(ratio - bound) <= tol, mu, med, sd, p, q
    )


# ---------------------------------------------------------------------------
# random corpora


def _draw_rows(n: int, count: int, rng: np.random.Generator) -> NDArray[np.float64]:
    kind = rng.integers(0, 3, size=count)
    uniform = rng.uniform(size=(count, n))
    heavy = rng.standard_t(2.0, size=(count, n))
    prob = rng.uniform(0.05, 0.95, size=(count, 1))
    two_point = (rng.uniform(size=(count, n)) < prob).astype(float)
    x = np.choose(kind[:, None], [uniform, heavy, two_point])
    loc = rng.normal(0.0, 10.0, size=(count, 1))
    scale = np.exp(rng.normal(0.0, 2.0, size=(count, 1)))
    return loc + scale * x


def random_samples(n: int, count: int, rng: np.random.Generator) -> NDArray[np.float64]:
    """``count`` sorted nondegenerate samples of size ``n`` as rows.

    Rows are i.i.d. from a mixture of uniform, Student-t(2) and two-point
    laws, each with a random location and log-normal scale. Constant rows
    are redrawn.
    """
    n = _as_int(n)
    if n < 2:
        raise InvalidN(f"samples need n >= 2, got {n}")
    x = _draw_rows(n, count, rng)
    while True:
        x.sort(axis=-1)
        bad = np.flatnonzero(~(x[:, 0] < x[:, -1]))
        if bad.size == 0:
            return x
        x[bad] = _draw_rows(n, bad.size, rng)


def random_distribution(rng: np.random.Generator, max_atoms: int = 6) -> DiscreteDistribution:
    """A random 2..``max_atoms`` atom distribution.

    Half the draws use integer support with probabilities on a coarse grid,
    which exercises ties at the mean and median-interval edges; the rest use
    continuous values with Dirichlet weights.
    """
    size = int(rng.integers(2, max_atoms + 1))
    if rng.uniform() < 0.5:
        vals = rng.choice(np.arange(-5, 6), size=size, replace=False).astype(float)
        denom = int(rng.choice([2, 4, 6, 8, 12]))
        denom = max(denom, size)
        cuts = np.sort(rng.choice(np.arange(1, denom), size=size - 1, replace=False))
        counts = np.diff(np.concatenate([[0], cuts, [denom]]))
        probs = counts / denom
    else:
        vals = rng.normal(0.0, 3.0, size=size)
        probs = rng.dirichlet(np.ones(size))
        probs = probs / probs.sum()
    return DiscreteDistribution(zip(vals.tolist(), probs.tolist()))
