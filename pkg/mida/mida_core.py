"""Mutual information discriminant analysis: ct grid search on the K criterion and final projection."""
from multiprocessing import Pool
from typing import Optional, Tuple

import numpy as np

from ._constants import DEFAULT_CT_MAX, DEFAULT_EPSILON_SCALE
from ._types import Dataset, HistogramSpec, MidaModel, MIProfile
from ._utils import as_label_vector, as_matrix, dense_labels
from .geneig import project, projection_matrix, solve_fisher_rao
from .logger import setup_logger
from .mi_estimation import DEFAULT_SPEC, _mi_from_counts, bin_feature, joint_count_table
from .MidaError import EstimationError, ShapeMismatchError
from .scatter_builder import build_scatter_pair, compute_mi_profile

logger = setup_logger(__name__)


def quality_K(y, labels, spec: HistogramSpec = DEFAULT_SPEC) -> float:
    """Sum over extracted features of I(y_i; C) minus the mean I(y_i; y_j) over earlier features j < i.

    The first feature has no earlier features and contributes its relevance alone.
    """
    y = as_matrix(y, "y")
    labels = as_label_vector(labels)
    if y.shape[0] != labels.shape[0]:
        raise EstimationError(f"length mismatch between projection and labels: {y.shape[0]} != {labels.shape[0]}")
    t = y.shape[1]
    if t < 1:
        raise EstimationError("quality_K needs at least one projected feature")

    classes, dense = dense_labels(labels)
    binned = [bin_feature(y[:, i], spec) for i in range(t)]
    k = 0.0
    for i in range(t):
        relevance = _mi_from_counts(joint_count_table(binned[i], dense, spec.bin_count, classes.size).counts)
        if i == 0:
            k += relevance
            continue
        redundancy = [
            _mi_from_counts(joint_count_table(binned[i], binned[j], spec.bin_count, spec.bin_count).counts)
            for j in range(i)
        ]
        k += relevance - sum(redundancy) / i
    return k


def _k_for_ct(args) -> float:
    profile, x, labels, t, spec, ct, epsilon_scale = args
    scatter = build_scatter_pair(profile, ct)
    solution = solve_fisher_rao(scatter.s_b, scatter.s_w, t, epsilon_scale)
    return quality_K(project(x, projection_matrix(solution)), labels, spec)


def _check_request(dataset: Dataset, t: int, l_max: int) -> None:
    if not 1 <= t <= dataset.n_features:
        raise EstimationError(f"t must satisfy 1 <= t <= N={dataset.n_features}, got {t}")
    if int(l_max) != l_max or l_max < 0:
        raise EstimationError(f"l_max must be a nonnegative integer, got {l_max!r}")


def select_ct(dataset: Dataset,
              t: int,
              l_max: int = DEFAULT_CT_MAX,
              spec: HistogramSpec = DEFAULT_SPEC,
              *,
              profile: Optional[MIProfile] = None,
              epsilon_scale: float = DEFAULT_EPSILON_SCALE,
              n_jobs: int = 1,
              ) -> Tuple[int, np.ndarray]:
    """Evaluate K for every integer ct in [0, l_max] and return (ct_opt, k_curve).

    Ties go to the smallest ct. The MI profile is computed once and shared by the grid.
    """
    _check_request(dataset, t, l_max)
    if profile is None:
        profile = compute_mi_profile(dataset, spec, n_jobs=n_jobs)

    tasks = [(profile, dataset.features, dataset.labels, t, spec, ct, epsilon_scale) for ct in range(int(l_max) + 1)]
    if n_jobs > 1 and len(tasks) > 1:
        with Pool(min(n_jobs, len(tasks))) as pool:
            k_curve = np.array(pool.map(_k_for_ct, tasks), dtype=np.float64)
    else:
        k_curve = np.array([_k_for_ct(task) for task in tasks], dtype=np.float64)

    ct_opt = int(np.argmax(k_curve))
    assert np.all(k_curve[ct_opt] >= k_curve)
    logger.debug(f"K curve for t={t}: {np.round(k_curve, 4).tolist()} -> ct_opt={ct_opt}")
    return ct_opt, k_curve


def fit_mida(dataset: Dataset,
             t: int,
             l_max: int = DEFAULT_CT_MAX,
             spec: HistogramSpec = DEFAULT_SPEC,
             *,
             profile: Optional[MIProfile] = None,
             epsilon_scale: float = DEFAULT_EPSILON_SCALE,
             n_jobs: int = 1,
             ) -> MidaModel:
    _check_request(dataset, t, l_max)
    if profile is None:
        profile = compute_mi_profile(dataset, spec, n_jobs=n_jobs)

    ct_opt, k_curve = select_ct(dataset, t, l_max, spec, profile=profile, epsilon_scale=epsilon_scale, n_jobs=n_jobs)
    scatter = build_scatter_pair(profile, ct_opt)
    solution = solve_fisher_rao(scatter.s_b, scatter.s_w, t, epsilon_scale)
    logger.remarks(f"MIDA fit on {dataset.name!r}: t={t}, ct_opt={ct_opt}, K={k_curve[ct_opt]:.4f}")
    return MidaModel(
        w=projection_matrix(solution),
        ct_opt=ct_opt,
        k_curve=k_curve,
        spec=spec,
        t=t,
        regularization_shift=solution.regularization_shift,
        eigenvalues=solution.eigenvalues,
        relevance=profile.relevance.copy(),
    )


def transform(model, x) -> np.ndarray:
    """Project samples with a fitted model (MIDA or any baseline)."""
    x = as_matrix(x)
    if x.shape[1] != model.w.n_features:
        raise ShapeMismatchError("transform input columns", model.w.n_features, x.shape[1])
    return project(x, model.w)
