"""Evaluation protocol: abs-max normalization, 1-NN, stratified k-fold CV and accuracy aggregation."""
from collections import namedtuple
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from ._constants import (
    DEFAULT_BIN_COUNT, DEFAULT_CT_MAX, DEFAULT_EPSILON_SCALE, DEFAULT_FOLDS, DEFAULT_KNN_K, DEFAULT_SEED,
    KNN_QUERY_BLOCK, NORMALIZATION_VARIANTS,
)
from ._types import AccuracyRecord, AccuracyTable, Dataset, FoldPlan, HistogramSpec
from ._utils import as_label_vector, as_matrix
from .extractors import get_extractor
from .logger import setup_logger
from .MidaError import ConfigError, EstimationError, ShapeMismatchError

logger = setup_logger(__name__)


def normalize_absmax(train, other, variant: str = "per-feature") -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Divide both matrices by the training split's absolute maximum (per column, or one global scale)."""
    if variant not in NORMALIZATION_VARIANTS:
        raise ConfigError(f"Unknown normalization {variant!r}. Please choose from: {', '.join(NORMALIZATION_VARIANTS)}.")
    train = as_matrix(train, "train")
    other = as_matrix(other, "other")
    if train.shape[0] == 0:
        raise EstimationError("empty sample: training split has no rows")
    if other.shape[1] != train.shape[1]:
        raise ShapeMismatchError("normalization input columns", train.shape[1], other.shape[1])

    scale = np.max(np.abs(train), axis=0)
    if variant == "global":
        scale = np.full(train.shape[1], scale.max())
    scale = np.where(scale == 0.0, 1.0, scale)
    return train / scale, other / scale, scale


def stratified_folds(labels, k: int = DEFAULT_FOLDS, seed: int = DEFAULT_SEED) -> FoldPlan:
    """Shuffle each class with a seeded generator and deal its samples round-robin over the folds.

    The dealing position carries over from one class to the next so fold sizes stay balanced.
    """
    labels = as_label_vector(labels)
    if k < 2:
        raise ConfigError(f"k must be >= 2, got {k}")
    if k > labels.shape[0]:
        raise ConfigError(f"k={k} folds requested for only {labels.shape[0]} samples")

    rng = np.random.default_rng(seed)
    assignment = np.empty(labels.shape[0], dtype=np.int64)
    position = 0
    for cls in np.unique(labels):
        members = rng.permutation(np.flatnonzero(labels == cls))
        assignment[members] = (position + np.arange(members.size)) % k
        position = (position + members.size) % k
    return FoldPlan(fold_assignment=assignment, seed=seed, k=k)


def knn_classify(train, train_labels, queries, k: int = DEFAULT_KNN_K) -> np.ndarray:
    """Euclidean k-NN; distance ties go to the smaller training index, vote ties to the nearest tied label."""
    train = as_matrix(train, "train")
    queries = as_matrix(queries, "queries")
    train_labels = as_label_vector(train_labels)
    if train.shape[0] == 0:
        raise EstimationError("empty sample: no training points")
    if train.shape[1] != queries.shape[1]:
        raise ShapeMismatchError("query dimension", train.shape[1], queries.shape[1])
    if train_labels.shape[0] != train.shape[0]:
        raise ShapeMismatchError("training labels", train.shape[0], train_labels.shape[0])
    k = min(k, train.shape[0])

    predictions = np.empty(queries.shape[0], dtype=train_labels.dtype)
    for start in range(0, queries.shape[0], KNN_QUERY_BLOCK):
        block = cdist(queries[start:start + KNN_QUERY_BLOCK], train, metric="sqeuclidean")
        if k == 1:
            predictions[start:start + block.shape[0]] = train_labels[np.argmin(block, axis=1)]
            continue
        neighbours = np.argsort(block, axis=1, kind="stable")[:, :k]
        for row, idx in enumerate(neighbours):
            votes = train_labels[idx]
            values, counts = np.unique(votes, return_counts=True)
            winners = set(values[counts == counts.max()].tolist())
            predictions[start + row] = next(v for v in votes if v in winners)
    return predictions


FoldFit = namedtuple("FoldFit", ["extractor", "models", "x_train", "x_test", "train_idx", "test_idx"])


def cv_settings(config: Optional[Dict] = None) -> Dict:
    settings = {
        "bins": DEFAULT_BIN_COUNT,
        "ct_max": DEFAULT_CT_MAX,
        "normalization": "per-feature",
        "knn_k": DEFAULT_KNN_K,
        "epsilon_scale": DEFAULT_EPSILON_SCALE,
        "n_jobs": 1,
    }
    settings.update(config or {})
    return settings


def fit_fold(dataset: Dataset, plan: FoldPlan, fold: int, method: str, dims: Sequence[int],
             config: Optional[Dict] = None) -> FoldFit:
    """Normalize one fold and fit the extractor for every requested dimension on its training rows only."""
    settings = cv_settings(config)
    train_idx, test_idx = plan.split(fold)
    x_train, x_test, _ = normalize_absmax(dataset.features[train_idx], dataset.features[test_idx],
                                          settings["normalization"])
    training = dataset.subset(train_idx).with_features(x_train)

    extractor = get_extractor(method, spec=HistogramSpec(settings["bins"]), ct_max=settings["ct_max"],
                              epsilon_scale=settings["epsilon_scale"])
    return FoldFit(extractor, extractor.fit_dims(training, dims), x_train, x_test, train_idx, test_idx)


def _fold_records(args) -> List[AccuracyRecord]:
    dataset, plan, fold, method, dims, settings = args
    fit = fit_fold(dataset, plan, fold, method, dims, settings)

    common = dict(dataset=dataset.name, method=method, fold=fold, seed=plan.seed,
                  bins=settings["bins"], ct_max=settings["ct_max"])
    records = []
    for dim in dims:
        model = fit.models.get(dim)
        if model is None:
            records.append(AccuracyRecord(dim=dim, accuracy=float("nan"), skipped=True, **common))
            continue
        predicted = knn_classify(fit.extractor.transform(model, fit.x_train), dataset.labels[fit.train_idx],
                                 fit.extractor.transform(model, fit.x_test), settings["knn_k"])
        accuracy = float(np.mean(predicted == dataset.labels[fit.test_idx]))
        records.append(AccuracyRecord(dim=dim, accuracy=accuracy, skipped=False, **common))
    return records


def run_cv(dataset: Dataset,
           method: str,
           dims: Sequence[int],
           folds: int = DEFAULT_FOLDS,
           seed: int = DEFAULT_SEED,
           config: Optional[Dict] = None,
           ) -> AccuracyTable:
    """k-fold CV of one extraction method followed by k-NN, one record per (fold, dim)."""
    settings = cv_settings(config)
    dims = sorted({int(d) for d in dims})
    if not dims or dims[0] < 1:
        raise ConfigError(f"dims must be a nonempty list of integers >= 1, got {dims}")
    get_extractor(method)

    plan = stratified_folds(dataset.labels, folds, seed)
    tasks = [(dataset, plan, fold, method, dims, settings) for fold in range(plan.k)]
    if settings["n_jobs"] > 1:
        with Pool(min(settings["n_jobs"], plan.k)) as pool:
            per_fold = pool.map(_fold_records, tasks)
    else:
        per_fold = [_fold_records(task) for task in tasks]

    table = AccuracyTable()
    for records in per_fold:
        table.extend(records)
    for dim in dims:
        mean = table.mean_accuracy(method, dim, dataset.name)
        if not np.isnan(mean):
            logger.remarks(f"{dataset.name} {method} dim={dim}: mean accuracy {100 * mean:.1f}% over {plan.k} folds")
    return table
