"""MI relevance/redundancy profile and the MIDA scatter matrices built from it."""
from itertools import chain
from multiprocessing import Pool
from typing import List, Tuple

import numpy as np

from ._types import Dataset, HistogramSpec, MIProfile, ScatterPair
from .logger import setup_logger
from .mi_estimation import DEFAULT_SPEC, _mi_from_counts, bin_feature, joint_count_table, mi_feature_class
from .MidaError import DegenerateLabelsError, EstimationError, UninformativeFeaturesError

logger = setup_logger(__name__)


def _redundancy_rows(args: Tuple[np.ndarray, np.ndarray, int]) -> List[Tuple[int, np.ndarray]]:
    """I(f_i; f_j) for each i in a chunk against every j > i, from pre-binned columns."""
    rows_i, binned, bin_count = args
    n_features = binned.shape[1]
    out = []
    for i in rows_i:
        row = np.zeros(n_features, dtype=np.float64)
        for j in range(i + 1, n_features):
            table = joint_count_table(binned[:, i], binned[:, j], bin_count, bin_count)
            row[j] = _mi_from_counts(table.counts)
        out.append((int(i), row))
    return out


def compute_mi_profile(dataset: Dataset, spec: HistogramSpec = DEFAULT_SPEC, n_jobs: int = 1) -> MIProfile:
    if dataset.n_samples < 2:
        raise EstimationError(f"dataset {dataset.name!r} needs at least 2 samples, got {dataset.n_samples}")
    n_classes = np.unique(dataset.labels).size
    if n_classes < 2:
        raise DegenerateLabelsError(n_classes)

    x, n_features = dataset.features, dataset.n_features
    relevance = np.array([mi_feature_class(x[:, i], dataset.labels, spec).value for i in range(n_features)])

    binned = np.column_stack([bin_feature(x[:, i], spec) for i in range(n_features)])
    pair_rows = np.arange(n_features - 1)
    if n_jobs > 1 and n_features > 2:
        # Each pair is computed independently, so the chunking never changes the values
        chunks = [c for c in np.array_split(pair_rows, n_jobs * 4) if c.size]
        with Pool(min(n_jobs, len(chunks))) as pool:
            rows = list(chain.from_iterable(pool.map(_redundancy_rows, [(c, binned, spec.bin_count) for c in chunks])))
    else:
        rows = _redundancy_rows((pair_rows, binned, spec.bin_count))

    redundancy = np.zeros((n_features, n_features), dtype=np.float64)
    for i, row in rows:
        redundancy[i, i + 1:] = row[i + 1:]
    redundancy = redundancy + redundancy.T

    logger.debug(f"MI profile of {dataset.name!r}: N={n_features}, max relevance={relevance.max():.4f} bits")
    return MIProfile(relevance=relevance, redundancy=redundancy)


def build_scatter_pair(profile: MIProfile, ct: int) -> ScatterPair:
    """S_B = diag(relevance); S_W = ct + I(f_i; f_j) off the diagonal, 0 on it."""
    if int(ct) != ct or ct < 0:
        raise EstimationError(f"ct must be a nonnegative integer, got {ct!r}")
    ct = int(ct)
    relevance = np.asarray(profile.relevance, dtype=np.float64)
    if not np.any(relevance > 0):
        raise UninformativeFeaturesError(relevance.shape[0])

    s_b = np.diag(relevance)
    s_w = np.asarray(profile.redundancy, dtype=np.float64) + float(ct)
    np.fill_diagonal(s_w, 0.0)
    return ScatterPair(s_b=s_b, s_w=s_w, ct=ct)
