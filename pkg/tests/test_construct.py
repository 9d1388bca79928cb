import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scoreseq import (
    InfeasiblePrefix,
    IntervalParams,
    ScoreSequence,
    SlicingState,
    bound_e,
    extremal_summary,
    matrix_stats,
    mini_max,
    naive_construct,
    pigeonhole_construct,
    score_slicing,
    verify_realization,
)

from golden import SCORES_SIX, TABLE_BALANCED

sequences = st.lists(st.integers(0, 40), min_size=2, max_size=12).map(
    lambda xs: ScoreSequence(tuple(sorted(xs)))
)


class TestNaiveConstruct:
    def test_three_players(self):
        M = naive_construct([1, 2, 3])
        assert M.entries == ((0, 1, 0), (0, 0, 2), (3, 0, 0))

    def test_two_zeros(self):
        assert naive_construct([0, 0]).entries == ((0, 0), (0, 0))

    def test_two_fives(self):
        assert naive_construct([5, 5]).entries == ((0, 5), (5, 0))

    def test_unsorted_input_keeps_row_order(self):
        raw = [4, 0, 2]
        M = naive_construct(raw)
        assert M.row_sums() == (4, 0, 2)

    @given(st.lists(st.integers(0, 30), min_size=2, max_size=10))
    def test_row_sums_and_entry_bound(self, raw):
        M = naive_construct(raw)
        assert M.row_sums() == tuple(raw)
        assert max(max(row) for row in M.entries) <= max(raw)


class TestPigeonholeConstruct:
    def test_three_threes(self):
        M = pigeonhole_construct(ScoreSequence((3, 3, 3)))
        for i, row in enumerate(M.entries):
            assert sorted(v for j, v in enumerate(row) if j != i) == [1, 2]
        assert max(max(row) for row in M.entries) == 2

    def test_two_two_four(self):
        M = pigeonhole_construct(ScoreSequence((2, 2, 4)))
        assert M.entries == ((0, 1, 1), (1, 0, 1), (2, 2, 0))
        report = verify_realization(
            M, ScoreSequence((2, 2, 4)), IntervalParams(0, 4)
        )
        assert report.valid

    def test_two_zeros(self):
        assert pigeonhole_construct(ScoreSequence((0, 0))).entries == ((0, 0), (0, 0))

    @given(sequences)
    def test_row_sums_entry_cap_and_pair_cap(self, D):
        M = pigeonhole_construct(D)
        h = bound_e(D)
        assert M.row_sums() == D.scores
        assert max(max(row) for row in M.entries) <= h
        stats = matrix_stats(M)
        assert stats.max_pair_total <= 2 * h


def _primed_state(scores, b):
    n = len(scores)
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, i):
            grid[i][j] = b
    return SlicingState(k=n, p=[0, *scores], grid=grid)


class TestScoreSlicing:
    def test_six_player_first_slice(self):
        state = _primed_state(SCORES_SIX, b=9)
        state = score_slicing(state, IntervalParams(8, 9))
        assert state.p == [0, 9, 9, 19, 20, 23]
        grid = state.grid
        assert grid[5][6] == 9
        assert grid[6][5] == 0
        assert grid[6][4] == 8
        assert grid[6][3] == 8
        assert grid[6][2] == 9
        assert grid[6][1] == 9

    def test_six_player_second_slice(self):
        state = _primed_state(SCORES_SIX, b=9)
        params = IntervalParams(8, 9)
        state = score_slicing(state, params)
        state = score_slicing(state, params)
        assert state.p == [0, 9, 9, 15, 15]

    def test_zero_case(self):
        state = _primed_state((0, 0, 0), b=0)
        state = score_slicing(state, IntervalParams(0, 0))
        assert state.p == [0, 0, 0]
        assert all(v == 0 for row in state.grid for v in row)

    def test_infeasible_score_raises(self):
        # player 3 holds more points than two matches can carry
        state = _primed_state((0, 0, 7), b=3)
        with pytest.raises(InfeasiblePrefix):
            score_slicing(state, IntervalParams(0, 3))

    def test_needs_three_open_players(self):
        state = _primed_state((1, 1), b=2)
        with pytest.raises(ValueError):
            score_slicing(state, IntervalParams(0, 2))


class TestMiniMax:
    def test_six_player_window_and_extremes(self):
        summary, M = mini_max(ScoreSequence(SCORES_SIX))
        assert (summary.e, summary.f, summary.g) == (7, 9, 8)
        assert M.row_sums() == SCORES_SIX
        stats = matrix_stats(M)
        assert stats.max_pair_total == 9
        assert stats.min_pair_total == 8

    def test_six_player_pinned_output(self):
        # deterministic tie-breaking makes the whole table reproducible
        _, M = mini_max(ScoreSequence(SCORES_SIX))
        assert M.entries == TABLE_BALANCED

    def test_two_players(self):
        summary, M = mini_max(ScoreSequence((2, 2)))
        assert M.entries == ((0, 2), (2, 0))
        assert summary.f == summary.g == 4

    def test_three_ones_single_point_cycle(self):
        summary, M = mini_max(ScoreSequence((1, 1, 1)))
        assert summary.f == summary.g == 1
        stats = matrix_stats(M)
        assert stats.max_pair_total == stats.min_pair_total == 1
        assert M.row_sums() == (1, 1, 1)

    def test_zeros_forties(self):
        summary, M = mini_max(ScoreSequence((0, 0, 0, 40, 40, 40)))
        assert (summary.e, summary.f, summary.g) == (8, 10, 0)
        assert M.row_sums() == (0, 0, 0, 40, 40, 40)
        stats = matrix_stats(M)
        assert stats.max_pair_total == 10
        assert stats.min_pair_total == 0

    def test_five_hundred_seeded_randoms(self):
        rng = random.Random(193)
        for _ in range(500):
            n = rng.randint(2, 12)
            top = rng.randint(0, 30)
            D = ScoreSequence(tuple(sorted(rng.randint(0, top) for _ in range(n))))
            summary, M = mini_max(D)
            report = verify_realization(
                M, D, IntervalParams(summary.g, summary.f)
            )
            assert report.valid, (D.scores, report.failures)
            stats = matrix_stats(M)
            assert stats.max_pair_total == summary.f, D.scores
            assert stats.min_pair_total == summary.g, D.scores

    @given(sequences)
    @settings(max_examples=150, deadline=None)
    def test_always_attains_both_extremes(self, D):
        summary, M = mini_max(D)
        assert verify_realization(
            M, D, IntervalParams(summary.g, summary.f)
        ).valid
        stats = matrix_stats(M)
        assert stats.max_pair_total == summary.f
        assert stats.min_pair_total == summary.g

    @given(sequences)
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_summary_of_own_stats(self, D):
        summary, M = mini_max(D)
        assert extremal_summary(D) == summary
