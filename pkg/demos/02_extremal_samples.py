"""
Samples that attain the bound
=============================

Every ceiling is attained by a sample with just two distinct values. This
script builds those samples, checks them, and shows that any shift or
positive rescaling keeps them extremal.
"""

import numpy as np

from hsbound import (
    case_classify,
    check_sample,
    extremal_j,
    extremal_z,
    imbalance_decomposition,
    nonparam_skewness,
    rescale,
    sharp_bound,
    two_block_z,
)

###############################################################################
# The standardized extremal sample for n = 5 with the median above the mean:
# two low values and three high ones.

z = extremal_z(5, +1)
print(z.z)
print("median of z:", z.z[2], "bound:", sharp_bound(5))

###############################################################################
# Any dataset ``location + scale * z`` has the same skewness ratio.

data = rescale(z, location=100.0, scale=15.0)
print(data.values)
rep = check_sample(data)
print(rep)

###############################################################################
# Which low-block size is extremal? For odd n it is k or k + 1; for even n
# it is k - 1 or k + 1. The balanced split j = k gives ratio 0 for even n.

for n in (5, 6, 7, 8):
    print(n, {sign: extremal_j(n, sign) for sign in (+1, -1)})

n = 8
for j in range(1, n):
    cfg = two_block_z(n, j)
    print(f"j={j}: low={cfg.low:+.4f} high={cfg.high:+.4f} ratio={nonparam_skewness(cfg.values()):+.6f}")

###############################################################################
# The even-n extremal samples fall into Cases III and IV of the four-way split
# on the two middle z values; the Cauchy-Schwarz ceiling on the negative mass
# ``a`` holds with equality.

for sign in (+1, -1):
    z = extremal_z(10, sign)
    d = imbalance_decomposition(z)
    print(sign, case_classify(z).value, d.ell, d.m, round(d.a**2, 12), round(d.cs_bound, 12))

###############################################################################
# Nudging one value of an extremal sample only lowers the ratio.

x = rescale(extremal_z(7, -1), 0, 1).values.copy()
rng = np.random.default_rng(0)
for _ in range(3):
    y = x + rng.normal(scale=1e-3, size=x.size)
    print(abs(nonparam_skewness(y)), "<=", sharp_bound(7))
