"""Plug-in histogram estimators of entropy and one-dimensional mutual information.

All quantities are in bits. Every estimate is the exact information quantity
of the empirical (binned) distribution; sums run through ``math.fsum`` so the
result does not depend on the order of the table cells.
"""
import math
from typing import Sequence, Tuple

import numpy as np

from ._types import HistogramSpec, JointCountTable, MIEstimate
from ._utils import as_finite_vector, as_label_vector, dense_labels, ensure_same_length
from .MidaError import EstimationError

DEFAULT_SPEC = HistogramSpec()


def entropy_counts(counts) -> float:
    counts = np.asarray(counts, dtype=np.float64).ravel()
    total = counts.sum()
    if total <= 0:
        raise EstimationError("empty sample: count vector sums to zero")
    p = counts[counts > 0] / total
    return max(0.0, -math.fsum(p * np.log2(p)))


def entropy_discrete(labels) -> float:
    labels = as_label_vector(labels)
    _, counts = np.unique(labels, return_counts=True)
    return entropy_counts(counts)


def bin_feature(values, spec: HistogramSpec = DEFAULT_SPEC) -> np.ndarray:
    """Equal-width bin index in [0, bin_count - 1] of every value; the maximum lands in the last bin."""
    values = as_finite_vector(values, "feature")
    lo, hi = float(values.min()), float(values.max())
    if hi <= lo or spec.bin_count == 1:
        return np.zeros(values.shape[0], dtype=np.int64)
    # Convex combinations of the end points stay finite even when hi - lo overflows
    fractions = np.arange(1, spec.bin_count) / spec.bin_count
    inner_edges = np.clip(lo * (1.0 - fractions) + hi * fractions, lo, hi)
    return np.searchsorted(inner_edges, values, side="right").astype(np.int64)


def joint_count_table(row_index: np.ndarray, col_index: np.ndarray, n_rows: int, n_cols: int) -> JointCountTable:
    codes = np.asarray(row_index, dtype=np.int64) * n_cols + np.asarray(col_index, dtype=np.int64)
    counts = np.bincount(codes, minlength=n_rows * n_cols).reshape(n_rows, n_cols)
    return JointCountTable(counts)


def _mi_from_counts(counts: np.ndarray) -> float:
    counts = np.asarray(counts, dtype=np.float64)
    total = counts.sum()
    row = counts.sum(axis=1)
    col = counts.sum(axis=0)
    i, j = np.nonzero(counts)
    n_ij = counts[i, j]
    terms = (n_ij / total) * np.log2((n_ij * total) / (row[i] * col[j]))
    return max(0.0, math.fsum(terms))


def exact_mi_table(table: JointCountTable) -> float:
    if table.total <= 0:
        raise EstimationError("empty sample: count table total must be positive")
    return _mi_from_counts(table.counts)


def _estimate(table: JointCountTable) -> MIEstimate:
    return MIEstimate(
        value=exact_mi_table(table),
        h_row=entropy_counts(table.counts.sum(axis=1)),
        h_col=entropy_counts(table.counts.sum(axis=0)),
    )


def mi_feature_class(feature, labels, spec: HistogramSpec = DEFAULT_SPEC) -> MIEstimate:
    """I(X; C) of one continuous feature against the class label, computed as H(C) - H(C|X)."""
    feature = as_finite_vector(feature, "feature")
    labels = as_label_vector(labels)
    ensure_same_length(feature, labels, "feature and labels")
    classes, dense = dense_labels(labels)
    return _estimate(joint_count_table(bin_feature(feature, spec), dense, spec.bin_count, classes.size))


def mi_feature_feature(f_i, f_j, spec: HistogramSpec = DEFAULT_SPEC) -> MIEstimate:
    f_i = as_finite_vector(f_i, "f_i")
    f_j = as_finite_vector(f_j, "f_j")
    ensure_same_length(f_i, f_j, "f_i and f_j")
    return _estimate(joint_count_table(bin_feature(f_i, spec), bin_feature(f_j, spec), spec.bin_count, spec.bin_count))


def conditional_entropy(feature, labels, spec: HistogramSpec = DEFAULT_SPEC) -> float:
    """H(C | X): the class uncertainty left after observing the binned feature."""
    estimate = mi_feature_class(feature, labels, spec)
    return max(0.0, estimate.h_col - estimate.value)


def merge_rows(table: JointCountTable, mapping: Sequence[int]) -> JointCountTable:
    """Collapse rows through a deterministic map g: row r goes to row mapping[r]."""
    mapping = np.asarray(mapping, dtype=np.int64)
    if mapping.shape[0] != table.shape[0] or np.any(mapping < 0):
        raise EstimationError(f"merge map must assign each of the {table.shape[0]} rows to a nonnegative row")
    merged = np.zeros((int(mapping.max()) + 1, table.shape[1]), dtype=np.int64)
    np.add.at(merged, mapping, table.counts)
    return JointCountTable(merged)


def bayes_error_bounds(h_c: float, mi: float, n_classes: int) -> Tuple[float, float]:
    """Fano lower bound (clamped at 0) and Hellman-Raviv upper bound on the Bayes error, base-2 logs."""
    if n_classes < 2:
        raise EstimationError(f"Bayes error bounds need at least 2 classes, got {n_classes}")
    if mi < -1e-12 or mi > h_c + 1e-12:
        raise EstimationError(f"bounds require h_c >= mi >= 0, got h_c={h_c}, mi={mi}")
    gap = max(0.0, h_c - mi)
    upper = gap / 2.0
    lower = max(0.0, (gap - 1.0) / math.log2(n_classes))
    return lower, upper
