"""
The probabilistic version
=========================

For a random variable with mean ``E``, median ``M`` and masses ``p`` above
and ``q`` below the mean, ``|E - M| / sd < 2 sqrt(pq / (p + q))``. The bound
is at most 1 and is tighter when one side carries little mass.
"""

import numpy as np

from hsbound import (
    DiscreteDistribution,
    ProbabilitySplit,
    lemma_pq_terms,
    majindar_bound,
    majindar_check,
    random_distribution,
)
from hsbound.errors import MeanAtomExhaustive

###############################################################################
# The bound and the three simpler quantities that dominate ``pq / (p + q)``.

for p, q in [(0.5, 0.5), (0.3, 0.2), (0.1, 0.1), (0.05, 0.9)]:
    ps = ProbabilitySplit(p, q)
    t = lemma_pq_terms(ps)
    print(f"p={p:<5} q={q:<5} bound={majindar_bound(ps):.6f}  lhs={t.lhs:.6f}  "
          f"p(1-p)={t.a1:.6f}  q(1-q)={t.a2:.6f}  (p+q)/4={t.a3:.6f}")

###############################################################################
# A skewed two-point law. The median is the midpoint of the median interval.

d = DiscreteDistribution([(0, 0.75), (1, 0.25)])
print(majindar_check(d))

###############################################################################
# Random finite-support laws: the ratio always stays below the bound.

rng = np.random.default_rng(3)
gaps = []
while len(gaps) < 5000:
    try:
        res = majindar_check(random_distribution(rng))
    except MeanAtomExhaustive:
        continue
    gaps.append(res.bound - res.ratio)
gaps = np.array(gaps)
print(f"min gap {gaps.min():.4f}, median gap {np.median(gaps):.4f}, all ok: {bool((gaps >= -1e-9).all())}")
