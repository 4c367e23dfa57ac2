"""
How far can the median sit from the mean?
=========================================

The classical Hotelling-Solomons inequality says ``|median - mean| <= sd``
(population sd, divisor n). For a finite sample the ratio never reaches 1:
the ceiling depends on the sample size and on its parity.
"""

import math

from hsbound import classical_bound, order_stat_range, sharp_bound

###############################################################################
# The ceiling for small samples. Odd sizes ``n = 2k + 1`` allow
# ``sqrt(k / (k + 1))``; even sizes ``n = 2k`` only ``sqrt((k - 1) / (k + 1))``,
# so adding one observation to an odd sample lowers the ceiling.

print(f"{'n':>4} {'bound':>10} {'bound^2':>10}")
for n in range(2, 13):
    b = sharp_bound(n)
    print(f"{n:>4} {b:>10.6f} {b * b:>10.6f}")

###############################################################################
# Both parities creep up to the classical value 1 but never reach it.

for n in (11, 101, 1001, 10001):
    print(n, sharp_bound(n), sharp_bound(n + 1), classical_bound() - sharp_bound(n))

###############################################################################
# For odd n the ceiling is the same as the upper end of the range of the
# standardized middle order statistic ``(x_(k+1) - mean) / sd``.

for k in range(1, 6):
    n = 2 * k + 1
    lo, hi = order_stat_range(n, k + 1)
    print(f"n={n}: middle order statistic in [{lo:+.6f}, {hi:+.6f}], bound {sharp_bound(n):.6f}")
    assert math.isclose(hi, sharp_bound(n))
