"""PCA and LDA reference extractors sharing the ProjectionMatrix / transform interface."""
import numpy as np
import scipy.linalg

from ._constants import DEFAULT_EPSILON_SCALE
from ._types import Dataset, LdaScatter, ProjectionMatrix, ProjectionModel
from ._utils import as_matrix
from .geneig import descending_order, orient_columns, projection_matrix, solve_fisher_rao
from .logger import setup_logger
from .MidaError import DegenerateLabelsError, EigenSolverError, EstimationError

logger = setup_logger(__name__)


def lda_scatter(dataset: Dataset) -> LdaScatter:
    """Between-class scatter as an unweighted sum over class means, within-class scatter pooled and scaled by 1/n."""
    x, labels = dataset.features, dataset.labels
    n_classes = dataset.n_classes
    if np.unique(labels).size < 2:
        raise DegenerateLabelsError(np.unique(labels).size)

    global_mean = x.mean(axis=0)
    class_counts = np.bincount(labels, minlength=n_classes)
    class_means = np.vstack([x[labels == c].mean(axis=0) for c in range(n_classes)])

    deviations = class_means - global_mean
    s_b = deviations.T @ deviations
    centered = x - class_means[labels]
    s_w = (centered.T @ centered) / x.shape[0]
    return LdaScatter(s_b=s_b, s_w=s_w, class_means=class_means, global_mean=global_mean, class_counts=class_counts)


def fit_lda(dataset: Dataset, t: int, epsilon_scale: float = DEFAULT_EPSILON_SCALE) -> ProjectionModel:
    if t < 1:
        raise EstimationError(f"t must be >= 1, got {t}")
    scatter = lda_scatter(dataset)
    t_effective = min(t, dataset.n_classes - 1, dataset.n_features)
    if t_effective < t:
        logger.warning(f"LDA on {dataset.name!r} can extract only {t_effective} features (requested {t})")

    solution = solve_fisher_rao(scatter.s_b, scatter.s_w, t_effective, epsilon_scale)
    return ProjectionModel(
        method="lda",
        w=projection_matrix(solution),
        eigenvalues=solution.eigenvalues,
        t_requested=t,
        t_effective=t_effective,
        regularization_shift=solution.regularization_shift,
    )


def fit_pca(x, t: int) -> ProjectionModel:
    x = as_matrix(x)
    m, n = x.shape
    if m < 2:
        raise EstimationError(f"PCA needs at least 2 samples, got {m}")
    if not 1 <= t <= n:
        raise EigenSolverError("t must satisfy 1 <= t <= N", {"t": t, "N": n})

    centered = x - x.mean(axis=0)
    covariance = (centered.T @ centered) / (m - 1)
    variances, components = scipy.linalg.eigh((covariance + covariance.T) / 2.0)
    order = descending_order(variances)[:t]
    return ProjectionModel(
        method="pca",
        w=ProjectionMatrix(w=orient_columns(components[:, order])),
        eigenvalues=variances[order],
        t_requested=t,
        t_effective=t,
    )
