import math

import numpy as np
import pytest
from scipy import special as sp
from scipy import stats as sp_stats

from labeltune.evaluation import (
    UndefinedTestError,
    bootstrap_std,
    compare_runs,
    format_mean_std,
    macro_f1,
    regularized_incomplete_beta,
    sample_episode,
    student_t_two_sided_p,
    welch_t_test,
)


class TestMacroF1:
    def test_perfect_predictions(self):
        gold = [0, 1, 2, 0, 1, 2]
        assert macro_f1(gold, gold, 3).macro_f1 == 1.0

    def test_all_majority_hand_case(self):
        gold = [0, 0, 1, 1]
        pred = [0, 0, 0, 0]
        report = macro_f1(gold, pred, 2)
        assert report.per_class[0].f1 == pytest.approx(2.0 / 3.0, rel=1e-12)
        assert report.per_class[1].f1 == 0.0
        assert report.macro_f1 == pytest.approx(1.0 / 3.0, rel=1e-12)

    def test_uniform_random_near_chance(self):
        rng = np.random.default_rng(0)
        k = 4
        gold = np.repeat(np.arange(k), 2500)
        pred = rng.integers(0, k, gold.shape[0])
        assert abs(macro_f1(gold, pred, k).macro_f1 - 1.0 / k) < 0.01

    def test_absent_classes_contribute_zero(self):
        report = macro_f1([0, 0], [0, 0], 4)
        assert report.macro_f1 == pytest.approx(0.25)
        assert [c.f1 for c in report.per_class] == [1.0, 0.0, 0.0, 0.0]

    def test_permutation_invariance(self):
        rng = np.random.default_rng(1)
        gold = rng.integers(0, 3, 40)
        pred = rng.integers(0, 3, 40)
        perm = rng.permutation(40)
        assert (
            macro_f1(gold, pred, 3).macro_f1
            == macro_f1(gold[perm], pred[perm], 3).macro_f1
        )

    def test_bounds_and_identity(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            gold = rng.integers(0, 3, 30)
            pred = rng.integers(0, 3, 30)
            score = macro_f1(gold, pred, 3).macro_f1
            assert 0.0 <= score <= 1.0

    def test_precision_recall_zero_denominators(self):
        report = macro_f1([1], [0], 2)
        assert report.per_class[0].precision == 0.0
        assert report.per_class[0].recall == 0.0
        assert report.per_class[1].f1 == 0.0

    def test_errors(self):
        with pytest.raises(ValueError, match="lengths"):
            macro_f1([0, 1], [0], 2)
        with pytest.raises(ValueError, match="indices"):
            macro_f1([0, 5], [0, 1], 2)
        with pytest.raises(ValueError):
            macro_f1([], [], 2)


class TestSampleEpisode:
    def test_exact_stratification(self):
        labels = [0] * 50 + [1] * 50 + [2] * 50
        episode = sample_episode(labels, 3, 8, seed=0)
        assert episode.train_indices.shape[0] == 24
        z = np.asarray(labels)[episode.train_indices]
        assert [int(np.sum(z == k)) for k in range(3)] == [8, 8, 8]
        assert episode.flagged_labels == []

    def test_without_replacement(self):
        labels = [0] * 50 + [1] * 50
        episode = sample_episode(labels, 2, 30, seed=3)
        assert len(set(episode.train_indices.tolist())) == 60

    def test_deterministic(self):
        labels = [0] * 30 + [1] * 30
        e1 = sample_episode(labels, 2, 8, seed=4)
        e2 = sample_episode(labels, 2, 8, seed=4)
        np.testing.assert_array_equal(e1.train_indices, e2.train_indices)

    def test_five_seeds_distinct(self):
        labels = [0] * 200 + [1] * 200
        episodes = [sample_episode(labels, 2, 8, seed=s) for s in range(5)]
        keys = {tuple(sorted(e.train_indices.tolist())) for e in episodes}
        assert len(keys) == 5

    def test_short_labels_flagged(self):
        labels = [0] * 20 + [1] * 3
        episode = sample_episode(labels, 2, 8, seed=0)
        assert episode.flagged_labels == [1]
        z = np.asarray(labels)[episode.train_indices]
        assert int(np.sum(z == 1)) == 3

    def test_zero_example_label_rejected(self):
        with pytest.raises(ValueError, match="label 1"):
            sample_episode([0, 0, 0], 2, 2, seed=0)

    def test_experimental_grid_shape(self):
        # the standard protocol: 5 seeds x sizes {8, 64, 512} = 15 episodes
        labels = [0] * 600 + [1] * 600
        episodes = [
            sample_episode(labels, 2, n, seed=s)
            for n in (8, 64, 512)
            for s in range(5)
        ]
        assert len(episodes) == 15
        for episode in episodes:
            assert episode.train_indices.shape[0] == 2 * episode.n_per_label
        keys = {tuple(sorted(e.train_indices.tolist())) for e in episodes}
        assert len(keys) == 15


class TestBootstrapStd:
    def test_perfect_classifier_zero_std(self):
        gold = [0, 1] * 20
        assert bootstrap_std(gold, gold, 2, resamples=100, seed=0) == 0.0

    def test_single_example_zero_std(self):
        assert bootstrap_std([1], [0], 2, resamples=50, seed=0) == 0.0

    def test_against_high_resolution_oracle(self):
        # oracle: an independent vectorized 100k-resample run over this
        # exact construction gave std = 0.0283778474
        rng = np.random.default_rng(123)
        gold = np.repeat([0, 1], 100)
        pred = gold.copy()
        flip = rng.choice(200, size=40, replace=False)
        pred[flip] = 1 - pred[flip]
        oracle = 0.0283778474
        got = bootstrap_std(gold, pred, 2, resamples=1000, seed=0)
        assert abs(got - oracle) / oracle < 0.30

    def test_deterministic(self):
        gold = [0, 1, 0, 1, 1, 0] * 10
        pred = [0, 1, 1, 1, 0, 0] * 10
        assert bootstrap_std(gold, pred, 2, seed=5) == bootstrap_std(gold, pred, 2, seed=5)

    def test_too_few_resamples(self):
        with pytest.raises(ValueError, match="resamples"):
            bootstrap_std([0], [0], 1, resamples=1)


class TestIncompleteBeta:
    def test_symmetry_identity(self):
        grid_a = [0.5, 1.0, 2.5, 4.0, 10.0, 50.0]
        grid_b = [0.5, 1.0, 3.0, 8.0, 25.0]
        grid_x = [0.001, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999]
        for a in grid_a:
            for b in grid_b:
                for x in grid_x:
                    left = regularized_incomplete_beta(a, b, x)
                    right = regularized_incomplete_beta(b, a, 1.0 - x)
                    assert abs(left + right - 1.0) <= 1e-10

    def test_against_scipy(self):
        for a in (0.5, 2.0, 7.5, 40.0):
            for b in (0.5, 1.5, 9.0):
                for x in (0.01, 0.3, 0.5, 0.77, 0.99):
                    assert regularized_incomplete_beta(a, b, x) == pytest.approx(
                        float(sp.betainc(a, b, x)), abs=1e-10
                    )

    def test_edges(self):
        assert regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0
        assert regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0
        with pytest.raises(ValueError):
            regularized_incomplete_beta(-1.0, 2.0, 0.5)


class TestWelch:
    def test_hand_derived_example(self):
        a = [10.0, 11.0, 12.0, 13.0, 14.0]
        b = [20.0, 21.0, 22.0, 23.0, 24.0]
        verdict = welch_t_test(a, b)
        assert verdict.t_statistic == pytest.approx(-10.0, rel=1e-12)
        assert verdict.degrees_of_freedom == pytest.approx(8.0, rel=1e-12)
        assert verdict.p_value == pytest.approx(8.488e-06, rel=1e-3)
        assert verdict.p_value < 0.001
        assert verdict.significant

    def test_against_scipy(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            a = rng.standard_normal(6) + 0.3
            b = 1.5 * rng.standard_normal(9)
            verdict = welch_t_test(a, b)
            ref = sp_stats.ttest_ind(a, b, equal_var=False)
            assert verdict.t_statistic == pytest.approx(float(ref.statistic), rel=1e-10)
            assert verdict.p_value == pytest.approx(float(ref.pvalue), rel=1e-8)

    def test_identical_samples_with_variance(self):
        a = [1.0, 2.0, 3.0]
        verdict = welch_t_test(a, a)
        assert verdict.t_statistic == 0.0
        assert verdict.p_value == 1.0
        assert not verdict.significant

    def test_zero_combined_variance(self):
        with pytest.raises(UndefinedTestError, match="variance"):
            welch_t_test([2.0, 2.0], [2.0, 2.0])

    def test_small_samples(self):
        with pytest.raises(UndefinedTestError):
            welch_t_test([1.0], [1.0, 2.0])

    def test_antisymmetry(self):
        a = [1.0, 2.0, 4.0]
        b = [5.0, 6.5, 9.0]
        va = welch_t_test(a, b)
        vb = welch_t_test(b, a)
        assert va.t_statistic == -vb.t_statistic
        assert va.p_value == vb.p_value

    def test_p_monotone_in_gap(self):
        base = np.array([0.0, 1.0, 2.0, 3.0])
        previous = 1.1
        for gap in (0.5, 1.0, 2.0, 4.0, 8.0):
            p = welch_t_test(base, base + gap).p_value
            assert p < previous
            previous = p

    def test_t_zero_p_one(self):
        assert student_t_two_sided_p(0.0, 5.0) == 1.0


class TestCompareRuns:
    def test_identical_runs_not_significant(self):
        scores = [0.61, 0.60, 0.63, 0.59, 0.62]
        result = compare_runs(scores, scores)
        assert not result.verdict.significant
        assert result.mean_a == result.mean_b

    def test_separated_runs_significant(self):
        result = compare_runs([0.2, 0.21, 0.22, 0.2, 0.21], [0.8, 0.81, 0.8, 0.82, 0.79])
        assert result.verdict.significant

    def test_formatting(self):
        assert format_mean_std(62.9, 0.7) == "62.9_{0.7}"
        result = compare_runs([0.628, 0.630, 0.636, 0.622, 0.629], [0.5, 0.51, 0.52, 0.49, 0.48])
        assert result.formatted_a == "62.9_{0.5}"

    def test_propagates_welch_errors(self):
        with pytest.raises(UndefinedTestError):
            compare_runs([0.5, 0.5], [0.5, 0.5])
