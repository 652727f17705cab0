"""Search driver and ratio statistics over seeded corpora."""

import pytest

from spherezone.search import question1_stats, search_max_CL


class TestSearch:
    def test_n5_all_records_have_CL_3(self):
        records, summary = search_max_CL(5, trials=6, seed=0)
        assert len(records) == 6
        assert all(r.C_L == 3 for r in records)
        assert summary.max_C_L == 3
        assert summary.best_seed == 0
        assert len(summary.best_lines) == 5

    def test_n4_forced_value(self):
        records, summary = search_max_CL(4, trials=4, seed=10)
        assert all(r.C_L == 2 for r in records)
        assert summary.max_C_L == 2

    def test_records_are_deterministic(self):
        r1, s1 = search_max_CL(6, trials=3, seed=7)
        r2, s2 = search_max_CL(6, trials=3, seed=7)
        assert [r.C_L for r in r1] == [r.C_L for r in r2]
        assert s1.best_lines == s2.best_lines

    def test_best_so_far_flags(self):
        records, _ = search_max_CL(6, trials=5, seed=0)
        assert records[0].best_so_far
        best = -1
        for r in records:
            assert r.best_so_far == (r.C_L > best)
            best = max(best, r.C_L)

    def test_hillclimb_runs(self):
        records, summary = search_max_CL(5, trials=2, seed=3,
                                         strategy="hillclimb", climb_steps=5)
        assert all(r.C_L == 3 for r in records)
        assert summary.max_C_L == 3

    def test_input_validation(self):
        with pytest.raises(ValueError):
            search_max_CL(3, trials=1)
        with pytest.raises(ValueError):
            search_max_CL(5, trials=1, strategy="annealing")

    def test_line_ratios_bounded(self):
        records, _ = search_max_CL(7, trials=3, seed=2)
        for r in records:
            assert len(r.line_ratios) == 7
            for ratio in r.line_ratios:
                assert 2 * 6 * ratio <= 11 * 6 - 2


class TestQuestion1Stats:
    def test_n4_ratio_exactly_3(self):
        stats = question1_stats(4, trials=5, seed=0)
        assert stats.mean == 3.0
        assert stats.max == 3.0
        assert stats.histogram == {3.0: 5}
        assert stats.per_line_bound_ok

    def test_n5_ratio_exactly_3_5(self):
        stats = question1_stats(5, trials=5, seed=0)
        assert stats.mean == 3.5
        assert stats.max == 3.5
        assert stats.per_line_bound_ok

    def test_larger_n_below_asymptote(self):
        stats = question1_stats(9, trials=4, seed=1)
        assert 3.0 < stats.mean < 5.5
        assert stats.per_line_bound_ok
        assert sum(stats.histogram.values()) == 4

    def test_input_validation(self):
        with pytest.raises(ValueError):
            question1_stats(3, trials=1)
