import numpy as np
import pytest

from mida import (
    Dataset, MIProfile, bin_feature, build_scatter_pair, compute_mi_profile, mi_feature_class, mi_feature_feature,
)
from mida.MidaError import DegenerateLabelsError, EstimationError, UninformativeFeaturesError


class TestComputeMiProfile:
    def test_shapes_and_zero_diagonal(self, informative_dataset):
        profile = compute_mi_profile(informative_dataset)
        assert profile.relevance.shape == (3,)
        assert profile.redundancy.shape == (3, 3)
        assert np.all(np.diag(profile.redundancy) == 0.0)
        assert np.array_equal(profile.redundancy, profile.redundancy.T)
        assert np.all(profile.redundancy >= 0.0)

    def test_informative_feature_is_most_relevant(self, informative_dataset):
        relevance = compute_mi_profile(informative_dataset).relevance
        assert relevance[0] > relevance[1]
        assert relevance[0] > relevance[2]

    def test_entries_match_pairwise_estimates(self, informative_dataset):
        x, labels = informative_dataset.features, informative_dataset.labels
        profile = compute_mi_profile(informative_dataset)
        for i in range(3):
            assert profile.relevance[i] == mi_feature_class(x[:, i], labels).value
            for j in range(3):
                if i != j:
                    assert profile.redundancy[i, j] == mi_feature_feature(x[:, i], x[:, j]).value

    def test_duplicated_column_redundancy_is_its_entropy(self, rng):
        column = rng.normal(size=300)
        dataset = Dataset("dup", np.column_stack([column, column]), rng.integers(0, 2, 300))
        profile = compute_mi_profile(dataset)
        assert profile.redundancy[0, 1] == pytest.approx(mi_feature_feature(column, column).h_row, abs=1e-12)

    def test_single_feature(self, rng):
        dataset = Dataset("one", rng.normal(size=(50, 1)), rng.integers(0, 2, 50))
        profile = compute_mi_profile(dataset)
        assert profile.relevance.shape == (1,)
        assert profile.redundancy.tolist() == [[0.0]]

    def test_column_permutation_equivariance(self, blobs_dataset, rng):
        permutation = rng.permutation(blobs_dataset.n_features)
        profile = compute_mi_profile(blobs_dataset)
        permuted = compute_mi_profile(blobs_dataset.with_features(blobs_dataset.features[:, permutation]))
        assert np.array_equal(permuted.relevance, profile.relevance[permutation])
        assert np.array_equal(permuted.redundancy, profile.redundancy[np.ix_(permutation, permutation)])

    def test_per_feature_affine_maps_keep_the_profile(self, rng):
        # integer grid 0..15 with 16 bins: every value sits at least 1/16 of a unit away from an edge
        for _ in range(200):
            m, n = int(rng.integers(20, 80)), int(rng.integers(2, 5))
            labels = np.arange(m) % int(rng.integers(2, 4))
            grid = rng.integers(0, 16, (m, n)).astype(np.float64)
            grid[:, 0] = np.minimum(grid[:, 0] + 3 * labels, 15.0)
            grid[0], grid[1] = 0.0, 15.0
            scale, shift = rng.uniform(0.5, 3.0, n), rng.uniform(-5.0, 5.0, n)
            dataset = Dataset("grid", grid, labels)
            mapped = dataset.with_features(grid * scale + shift)

            for i in range(n):
                assert np.array_equal(bin_feature(grid[:, i]), bin_feature(mapped.features[:, i]))
            profile, moved = compute_mi_profile(dataset), compute_mi_profile(mapped)
            assert np.array_equal(profile.relevance, moved.relevance)
            assert np.array_equal(profile.redundancy, moved.redundancy)

    def test_parallel_matches_serial(self, blobs_dataset):
        serial = compute_mi_profile(blobs_dataset)
        parallel = compute_mi_profile(blobs_dataset, n_jobs=2)
        assert np.array_equal(serial.relevance, parallel.relevance)
        assert np.array_equal(serial.redundancy, parallel.redundancy)

    def test_single_class_is_degenerate(self, rng):
        dataset = Dataset("single", rng.normal(size=(20, 3)), np.zeros(20, dtype=int))
        with pytest.raises(DegenerateLabelsError, match="degenerate labels"):
            compute_mi_profile(dataset)

    def test_single_sample(self):
        with pytest.raises(EstimationError):
            compute_mi_profile(Dataset("tiny", np.ones((1, 2)), np.array([0])))


class TestBuildScatterPair:
    PROFILE = MIProfile(relevance=np.array([0.5, 0.3]), redundancy=np.array([[0.0, 0.1], [0.1, 0.0]]))

    def test_two_feature_example(self):
        scatter = build_scatter_pair(self.PROFILE, 2)
        assert scatter.s_b.tolist() == [[0.5, 0.0], [0.0, 0.3]]
        assert scatter.s_w.tolist() == [[0.0, 2.1], [2.1, 0.0]]
        assert scatter.ct == 2

    def test_ct_zero_keeps_redundancy(self):
        scatter = build_scatter_pair(self.PROFILE, 0)
        assert scatter.s_w.tolist() == [[0.0, 0.1], [0.1, 0.0]]

    def test_symmetry_and_zero_diagonal(self, blobs_dataset):
        profile = compute_mi_profile(blobs_dataset)
        for ct in range(4):
            scatter = build_scatter_pair(profile, ct)
            assert np.array_equal(scatter.s_w, scatter.s_w.T)
            assert np.all(np.diag(scatter.s_w) == 0.0)
            assert np.all(scatter.s_b[~np.eye(6, dtype=bool)] == 0.0)

    def test_ct_step_adds_ones_off_diagonal(self, blobs_dataset):
        profile = compute_mi_profile(blobs_dataset)
        step = np.ones((6, 6)) - np.eye(6)
        for ct in range(5):
            lower, upper = build_scatter_pair(profile, ct), build_scatter_pair(profile, ct + 1)
            assert np.allclose(upper.s_w - lower.s_w, step, rtol=0.0, atol=1e-12)
            assert np.array_equal(upper.s_b, lower.s_b)

    def test_permutation_equivariance(self, blobs_dataset, rng):
        profile = compute_mi_profile(blobs_dataset)
        permutation = rng.permutation(6)
        permuted = MIProfile(profile.relevance[permutation], profile.redundancy[np.ix_(permutation, permutation)])
        for ct in (0, 3):
            scatter, swapped = build_scatter_pair(profile, ct), build_scatter_pair(permuted, ct)
            assert np.array_equal(swapped.s_b, scatter.s_b[np.ix_(permutation, permutation)])
            assert np.array_equal(swapped.s_w, scatter.s_w[np.ix_(permutation, permutation)])

    def test_all_zero_relevance(self):
        profile = MIProfile(relevance=np.zeros(3), redundancy=np.zeros((3, 3)))
        with pytest.raises(UninformativeFeaturesError, match="uninformative feature set"):
            build_scatter_pair(profile, 1)

    @pytest.mark.parametrize("ct", [-1, 1.5])
    def test_invalid_ct(self, ct):
        with pytest.raises(EstimationError):
            build_scatter_pair(self.PROFILE, ct)
