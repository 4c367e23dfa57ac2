import math

import numpy as np
import pytest

from hsbound.bounds import sharp_bound
from hsbound.core_stats import Sample, StandardizedSample, median, nonparam_skewness
from hsbound.errors import InvalidJ, InvalidN, InvalidParams, InvalidScale
from hsbound.extremal import TwoBlockConfig, extremal_j, extremal_z, rescale, two_block_z

SQ = math.sqrt


class TestTwoBlock:
    def test_n6_j2(self):
        c = two_block_z(6, 2)
        assert c.low == pytest.approx(-SQ(2), abs=1e-15)
        assert c.high == pytest.approx(SQ(1 / 2), abs=1e-15)

    def test_balanced(self):
        c = two_block_z(4, 2)
        assert (c.low, c.high) == (-1, 1)

    def test_n5_j2(self):
        c = two_block_z(5, 2)
        assert c.low == pytest.approx(-SQ(3 / 2), abs=1e-15)
        assert c.high == pytest.approx(SQ(2 / 3), abs=1e-15)

    @pytest.mark.parametrize("j", [0, 6, -2])
    def test_bad_j(self, j):
        with pytest.raises(InvalidJ):
            two_block_z(6, j)

    def test_bad_n(self):
        with pytest.raises(InvalidN):
            two_block_z(2, 1)

    @pytest.mark.parametrize("n", range(3, 201))
    def test_constraints(self, n):
        for j in range(1, n):
            c = two_block_z(n, j)
            assert c.low < c.high
            assert abs(j * c.low + (n - j) * c.high) <= 1e-12
            assert abs(j * c.low**2 + (n - j) * c.high**2 - n) <= 1e-12

    def test_expand_is_sorted_low_first(self):
        z = two_block_z(7, 3).expand()
        assert isinstance(z, StandardizedSample)
        assert np.all(np.diff(z.z) >= 0)
        assert np.all(z.z[:3] < 0) and np.all(z.z[3:] > 0)

    def test_config_validation(self):
        with pytest.raises(InvalidParams):
            TwoBlockConfig(4, 2, -1.0, 2.0)
        with pytest.raises(InvalidParams):
            TwoBlockConfig(4, 2, 1.0, -1.0)

    @pytest.mark.parametrize("k", range(1, 60))
    def test_odd_skewness_closed_form(self, k):
        n = 2 * k + 1
        for j in range(1, n):
            got = nonparam_skewness(two_block_z(n, j).values())
            want = SQ(j / (n - j)) if j <= k else -SQ((n - j) / j)
            assert got == pytest.approx(want, abs=1e-12)


class TestExtremal:
    def test_n5_plus(self):
        z = extremal_z(5, 1).z
        want = [-SQ(3 / 2)] * 2 + [SQ(2 / 3)] * 3
        np.testing.assert_allclose(z, want, rtol=0, atol=1e-15)
        assert z[2] == pytest.approx(SQ(2 / 3), abs=1e-15)

    def test_n6_plus(self):
        z = extremal_z(6, 1).z
        want = [-SQ(2)] * 2 + [SQ(1 / 2)] * 4
        np.testing.assert_allclose(z, want, rtol=0, atol=1e-15)
        assert (z[2] + z[3]) / 2 == pytest.approx(SQ(1 / 2), abs=1e-15)

    def test_n6_minus(self):
        assert median(extremal_z(6, -1)) == pytest.approx(-SQ(1 / 2), abs=1e-15)

    def test_n4_both_signs(self):
        assert extremal_j(4, 1) == 1 and extremal_j(4, -1) == 3
        assert median(extremal_z(4, 1)) == pytest.approx(SQ(1 / 3), abs=1e-15)
        assert median(extremal_z(4, -1)) == pytest.approx(-SQ(1 / 3), abs=1e-15)

    def test_bad_n(self):
        with pytest.raises(InvalidN):
            extremal_z(2, 1)

    def test_bad_sign(self):
        with pytest.raises(InvalidParams):
            extremal_z(5, 0)

    @pytest.mark.parametrize("n", range(3, 201))
    @pytest.mark.parametrize("sign", [1, -1])
    def test_attainment(self, n, sign):
        r = nonparam_skewness(rescale(extremal_z(n, sign), 0, 1))
        assert abs(r - sign * sharp_bound(n)) <= 1e-12

    @pytest.mark.parametrize("n", range(3, 60))
    def test_family_membership(self, n):
        k = n // 2
        allowed = {k, k + 1} if n % 2 else {k - 1, k + 1}
        for sign in (1, -1):
            j = extremal_j(n, sign)
            assert j in allowed
            assert extremal_z(n, sign) == two_block_z(n, j).expand()


class TestRescale:
    def test_identity(self):
        z = extremal_z(7, -1)
        assert np.array_equal(rescale(z, 0, 1).values, z.z)

    def test_shift_scale_keeps_ratio(self):
        s = rescale(extremal_z(5, 1), 10, 2)
        assert isinstance(s, Sample)
        assert nonparam_skewness(s) == pytest.approx(SQ(2 / 3), abs=1e-12)

    def test_n4_negative(self):
        s = rescale(extremal_z(4, -1), -3, 0.5)
        assert nonparam_skewness(s) == pytest.approx(-SQ(1 / 3), abs=1e-12)

    @pytest.mark.parametrize("scale", [0, -1, float("inf")])
    def test_bad_scale(self, scale):
        with pytest.raises(InvalidScale):
            rescale(extremal_z(5, 1), 0, scale)
