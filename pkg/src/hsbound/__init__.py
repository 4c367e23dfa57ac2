"""Sharp Hotelling-Solomons bounds on ``|median - mean| / sd``.

The classical bound is 1. For a sample of size ``n = 2k + 1`` the ratio never
exceeds ``sqrt(k / (k + 1))``, and for ``n = 2k`` it never exceeds
``sqrt((k - 1) / (k + 1))``. Both are attained by two-level samples.
"""

__version__ = "0.1.0"

from .bounds import (
    LemmaTerms,
    OrderStatRange,
    ProbabilitySplit,
    classical_bound,
    lemma_pq_terms,
    majindar_bound,
    order_stat_range,
    sharp_bound,
)
from .core_stats import (
    EPS_STD,
    ChainTerms,
    Sample,
    StandardizedSample,
    SummaryStats,
    chain_terms,
    mean,
    median,
    nonparam_skewness,
    standardize,
    stddev_population,
    sum_abs_dev,
    summarize,
    zscores,
)
from .errors import *  # noqa: F401,F403
from .extremal import TwoBlockConfig, extremal_j, extremal_z, rescale, two_block_z
from .verify import (
    BoundReport,
    DiscreteDistribution,
    EvenCase,
    ImbalanceDecomposition,
    MajindarResult,
    SearchResult,
    SweepResult,
    case_classify,
    check_sample,
    imbalance_decomposition,
    majindar_check,
    random_distribution,
    random_samples,
    random_search_max,
    two_block_sweep,
)
