"""Color-count bound bookkeeping."""

from strongodd.bounds import (
    Bound,
    CAP_BITS,
    HUGE,
    exact,
    rtw_bound,
    sum_bound,
    sum_clique_bound,
    summand_bound,
    tw_bound,
    tw_clique_bound,
)


class TestBase:
    def test_base_case_formula(self):
        for m in range(1, 8):
            assert tw_bound(0, 1, m).value == 1 << (m + 1)
        # Degenerate counts clamp to one.
        assert tw_bound(0, 0, 0).value == 4

    def test_small_exact_values(self):
        # f(1,1,1) = 2*(3*f(0,1,2)*2^(2*f(0,1,2))*g(0) + 1) with f(0,1,2)=8, g(0)=4.
        inner = 1 << 3
        expected = 2 * (3 * inner * (1 << (2 * inner)) * 4 + 1)
        assert tw_bound(1, 1, 1).value == expected
        assert tw_clique_bound(1).value == expected

    def test_clique_bound_is_tw_bound_at_one_one(self):
        for k in range(0, 3):
            assert tw_clique_bound(k).value == tw_bound(k, 1, 1).value \
                or (tw_clique_bound(k).huge and tw_bound(k, 1, 1).huge)

    def test_rtw_formula_exact_at_k0(self):
        for m in range(0, 3):
            inner = tw_bound(0, 3, m).value
            assert rtw_bound(0, m).value == 6 * inner * (1 << (max(m, 1) * inner))

    def test_summand_formula(self):
        for k, t, m in [(0, 0, 0), (0, 1, 0), (0, 2, 1)]:
            assert summand_bound(k, t, m).value == rtw_bound(k, m + t).value + t

    def test_sum_base_formula(self):
        m = 1
        f3 = summand_bound(0, 0, m)
        expected = f3.value * (1 << (m * f3.value)) * tw_bound(0, 0, m).value
        assert sum_bound(0, 0, m, 0).value == expected

    def test_huge_values_compare_soundly(self):
        b = tw_bound(2, 2, 2)
        assert b.huge
        assert b.at_least(10**9)
        assert rtw_bound(1, 2).huge
        assert sum_clique_bound(1, 1, 1).huge

    def test_exact_cap(self):
        assert exact(1 << (CAP_BITS + 1)).huge
        assert not exact(1 << (CAP_BITS // 2)).huge

    def test_monotone_comparisons(self):
        assert tw_bound(1, 1, 1).at_least(100)
        assert not Bound(3).at_least(4)
        assert HUGE.at_least(10**100)
