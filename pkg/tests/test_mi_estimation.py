import math

import numpy as np
import pytest

from mida import (
    HistogramSpec, JointCountTable, bayes_error_bounds, bin_feature, conditional_entropy, entropy_counts,
    entropy_discrete, exact_mi_table, joint_count_table, merge_rows, mi_feature_class, mi_feature_feature,
)
from mida._utils import dense_labels
from mida.MidaError import EstimationError


def brute_force_mi(rows, cols):
    """I(R; C) in bits from two discrete sequences, by explicit probability sums."""
    n = len(rows)
    total = 0.0
    for r in set(rows):
        for c in set(cols):
            n_rc = sum(1 for a, b in zip(rows, cols) if a == r and b == c)
            if n_rc:
                p_rc = n_rc / n
                p_r = rows.count(r) / n
                p_c = cols.count(c) / n
                total += p_rc * math.log2(p_rc / (p_r * p_c))
    return total


class TestEntropy:
    def test_fair_coin(self):
        assert entropy_discrete([0, 1]) == pytest.approx(1.0, abs=1e-15)

    def test_constant_labels(self):
        assert entropy_discrete([3, 3, 3, 3]) == 0.0

    def test_unbalanced_labels(self):
        assert entropy_discrete([0, 0, 1, 1, 1, 1]) == pytest.approx(0.9183, abs=1e-4)

    def test_string_labels(self):
        assert entropy_discrete(["a", "b", "a", "b"]) == pytest.approx(1.0, abs=1e-15)

    def test_counts_with_zero_cells(self):
        assert entropy_counts([2, 0, 2]) == pytest.approx(1.0, abs=1e-15)

    def test_empty_sample(self):
        with pytest.raises(EstimationError, match="empty sample"):
            entropy_discrete([])


class TestBinFeature:
    def test_two_bins(self):
        assert bin_feature([0, 1, 2, 3], HistogramSpec(2)).tolist() == [0, 0, 1, 1]

    def test_constant_feature_single_bin(self):
        assert bin_feature([5, 5, 5], HistogramSpec(4)).tolist() == [0, 0, 0]

    def test_edge_goes_to_upper_bin(self):
        assert bin_feature([0.0, 0.49, 0.5, 1.0], HistogramSpec(2)).tolist() == [0, 0, 1, 1]

    def test_indices_in_range(self, rng):
        for bins in (1, 3, 16, 50):
            values = rng.normal(size=200)
            index = bin_feature(values, HistogramSpec(bins))
            assert index.min() >= 0 and index.max() <= bins - 1
            assert index[np.argmax(values)] == bins - 1

    def test_range_wider_than_float_max(self):
        index = bin_feature([-1e308, 0.0, 1e308], HistogramSpec(4))
        assert index.tolist() == [0, 2, 3]

    def test_non_finite_input(self):
        with pytest.raises(EstimationError, match="non-finite input"):
            bin_feature([0.0, np.nan, 1.0])

    def test_invalid_bin_count(self):
        with pytest.raises(EstimationError):
            HistogramSpec(0)


class TestMiFeatureClass:
    def test_constant_feature_has_no_information(self):
        assert mi_feature_class([1, 1, 1, 1], [0, 1, 0, 1]).value == 0.0

    def test_perfectly_separating_feature(self):
        estimate = mi_feature_class([0, 0, 10, 10], [0, 0, 1, 1], HistogramSpec(2))
        assert estimate.value == pytest.approx(1.0, abs=1e-15)

    def test_three_bins_against_hand_count(self):
        values, labels = [1, 2, 3, 4, 5, 6], [0, 0, 0, 1, 1, 1]
        # bins: {1, 2} -> 0, {3, 4} -> 1, {5, 6} -> 2
        expected = brute_force_mi([0, 0, 1, 1, 2, 2], labels)
        estimate = mi_feature_class(values, labels, HistogramSpec(3))
        assert expected == pytest.approx(2 / 3, abs=1e-12)
        assert estimate.value == pytest.approx(expected, abs=1e-12)

    def test_equals_entropy_difference(self, rng):
        values, labels = rng.normal(size=300), rng.integers(0, 3, 300)
        estimate = mi_feature_class(values, labels)
        assert estimate.value == pytest.approx(estimate.h_col - conditional_entropy(values, labels), abs=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(EstimationError, match="length mismatch"):
            mi_feature_class([1, 2, 3], [0, 1])


class TestMiFeatureFeature:
    def test_identical_features(self):
        values = [0, 1, 2, 3] * 5
        assert mi_feature_feature(values, values, HistogramSpec(4)).value == pytest.approx(2.0, abs=1e-12)

    def test_constant_feature(self):
        assert mi_feature_feature([7, 7, 7, 7], [1, 2, 3, 4]).value == 0.0

    def test_reversed_pairs(self):
        estimate = mi_feature_feature([1, 1, 2, 2], [2, 2, 1, 1], HistogramSpec(2))
        assert estimate.value == pytest.approx(1.0, abs=1e-15)

    def test_length_mismatch(self):
        with pytest.raises(EstimationError, match="length mismatch"):
            mi_feature_feature([1, 2, 3], [1, 2])


class TestExactMiTable:
    def test_identity_table(self):
        assert exact_mi_table(JointCountTable(np.eye(2, dtype=int))) == pytest.approx(1.0, abs=1e-15)

    def test_uniform_table(self):
        assert exact_mi_table(JointCountTable(np.ones((3, 4), dtype=int))) == 0.0

    def test_noisy_channel(self):
        assert exact_mi_table(JointCountTable(np.array([[3, 1], [1, 3]]))) == pytest.approx(0.1887, abs=1e-4)

    def test_empty_table(self):
        with pytest.raises(EstimationError, match="empty sample"):
            exact_mi_table(JointCountTable(np.zeros((2, 2), dtype=int)))

    def test_negative_counts_rejected(self):
        with pytest.raises(EstimationError):
            JointCountTable(np.array([[1, -1], [0, 2]]))

    def test_merge_rows(self):
        merged = merge_rows(JointCountTable(np.array([[1, 0], [2, 3], [0, 4]])), [0, 1, 0])
        assert merged.counts.tolist() == [[1, 4], [2, 3]]


class TestBayesErrorBounds:
    def test_no_residual_uncertainty(self):
        assert bayes_error_bounds(1.0, 1.0, 2) == (0.0, 0.0)

    def test_uninformative_binary(self):
        lower, upper = bayes_error_bounds(1.0, 0.0, 2)
        assert lower == 0.0
        assert upper == pytest.approx(0.5)

    def test_four_classes(self):
        lower, upper = bayes_error_bounds(2.0, 0.5, 4)
        assert lower == pytest.approx(0.25)
        assert upper == pytest.approx(0.75)

    def test_single_class(self):
        with pytest.raises(EstimationError):
            bayes_error_bounds(0.0, 0.0, 1)

    def test_mi_above_entropy(self):
        with pytest.raises(EstimationError):
            bayes_error_bounds(1.0, 1.5, 2)


class TestEstimatorProperties:
    """Randomized checks over seeded draws."""

    CASES = 200

    def test_bounds_and_agreement_with_count_table(self, rng):
        for _ in range(self.CASES):
            m = int(rng.integers(5, 200))
            spec = HistogramSpec(int(rng.integers(1, 21)))
            values = rng.normal(size=m) * rng.uniform(0.1, 10.0)
            labels = rng.integers(0, int(rng.integers(1, 6)), m)
            estimate = mi_feature_class(values, labels, spec)

            assert estimate.value >= 0.0
            assert estimate.value <= min(estimate.h_row, estimate.h_col) + 1e-9

            classes, dense = dense_labels(labels)
            table = joint_count_table(bin_feature(values, spec), dense, spec.bin_count, classes.size)
            assert estimate.value == pytest.approx(exact_mi_table(table), abs=1e-12)

    def test_feature_pair_bounds_and_agreement_with_count_table(self, rng):
        for _ in range(self.CASES):
            m = int(rng.integers(2, 200))
            spec = HistogramSpec(int(rng.integers(1, 21)))
            a = rng.normal(size=m)
            b = rng.uniform(-1.0, 1.0) * a + rng.exponential(size=m)
            estimate = mi_feature_feature(a, b, spec)

            assert estimate.value >= 0.0
            assert estimate.value <= min(estimate.h_row, estimate.h_col) + 1e-9

            table = joint_count_table(bin_feature(a, spec), bin_feature(b, spec), spec.bin_count, spec.bin_count)
            assert estimate.value == pytest.approx(exact_mi_table(table), abs=1e-12)

    def test_symmetry_is_exact(self, rng):
        for _ in range(self.CASES):
            m = int(rng.integers(2, 150))
            spec = HistogramSpec(int(rng.integers(1, 21)))
            a, b = rng.normal(size=m), rng.exponential(size=m)
            assert mi_feature_feature(a, b, spec).value == mi_feature_feature(b, a, spec).value

    def test_class_relabeling_is_exact(self, rng):
        for _ in range(self.CASES):
            m = int(rng.integers(2, 150))
            n_classes = int(rng.integers(2, 6))
            values, labels = rng.normal(size=m), rng.integers(0, n_classes, m)
            permutation = rng.permutation(n_classes)
            assert mi_feature_class(values, labels).value == mi_feature_class(values, permutation[labels]).value

    def test_data_processing_inequality(self, rng):
        for _ in range(self.CASES):
            rows, cols = int(rng.integers(2, 7)), int(rng.integers(2, 6))
            counts = rng.integers(0, 10, (rows, cols))
            counts[rng.integers(rows), rng.integers(cols)] += 1
            table = JointCountTable(counts)
            mapping = rng.integers(0, rows - 1, rows)
            assert exact_mi_table(merge_rows(table, mapping)) <= exact_mi_table(table) + 1e-12
