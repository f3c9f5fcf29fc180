from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ._constants import (
    AGGREGATE_COLUMNS, CUSTOM_DATASET, DEFAULT_BIN_COUNT, DEFAULT_CT_MAX, DEFAULT_DIMS, DEFAULT_EPSILON_SCALE,
    DEFAULT_FOLDS, DEFAULT_KNN_K, DEFAULT_SEED, METHODS, NORMALIZATION_VARIANTS, REFERENCE_KNN_ACCURACY,
    REPORT_COLUMNS, REPORT_FORMATS,
)
from ._utils import is_dense_labels
from .MidaError import ConfigError, EstimationError

PathLike = Union[str, Path]


@dataclass(frozen=True)
class HistogramSpec:
    """Equal-width histogram configuration shared by every plug-in estimate."""

    bin_count: int = DEFAULT_BIN_COUNT
    range_policy: str = "per-variable"

    def __post_init__(self):
        if int(self.bin_count) != self.bin_count or self.bin_count < 1:
            raise EstimationError(f"bin_count must be a positive integer, got {self.bin_count!r}")
        if self.range_policy != "per-variable":
            raise EstimationError(f"unsupported range policy {self.range_policy!r}")


@dataclass(eq=False)
class JointCountTable:
    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts)
        if counts.ndim != 2:
            raise EstimationError(f"count table must be 2-D, got shape {counts.shape}")
        if counts.size and (not np.all(counts == np.floor(counts)) or np.any(counts < 0)):
            raise EstimationError("count table entries must be nonnegative integers")
        self.counts = counts.astype(np.int64)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def shape(self) -> Tuple[int, int]:
        return self.counts.shape


@dataclass(frozen=True)
class MIEstimate:
    """Plug-in mutual information (bits) with the marginal entropies of the two binned variables."""

    value: float
    h_row: float
    h_col: float


@dataclass(eq=False)
class MIProfile:
    relevance: np.ndarray
    redundancy: np.ndarray


@dataclass(eq=False)
class ScatterPair:
    s_b: np.ndarray
    s_w: np.ndarray
    ct: int


@dataclass(eq=False)
class EigenSolution:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    regularization_shift: float


@dataclass(eq=False)
class ProjectionMatrix:
    w: np.ndarray

    @property
    def t(self) -> int:
        return int(self.w.shape[1])

    @property
    def n_features(self) -> int:
        return int(self.w.shape[0])


@dataclass(eq=False)
class MidaModel:
    w: ProjectionMatrix
    ct_opt: int
    k_curve: np.ndarray
    spec: HistogramSpec
    t: int
    regularization_shift: float
    eigenvalues: np.ndarray
    relevance: np.ndarray
    method: str = "mida"


@dataclass(eq=False)
class ProjectionModel:
    """Fitted linear extractor shared by the raw, PCA and LDA baselines."""

    method: str
    w: ProjectionMatrix
    eigenvalues: np.ndarray
    t_requested: int
    t_effective: int
    regularization_shift: float = 0.0


@dataclass(eq=False)
class LdaScatter:
    s_b: np.ndarray
    s_w: np.ndarray
    class_means: np.ndarray
    global_mean: np.ndarray
    class_counts: np.ndarray


@dataclass(eq=False)
class Dataset:
    """M x N feature matrix with dense integer labels in 0..C-1."""

    name: str
    features: np.ndarray
    labels: np.ndarray
    feature_names: List[str] = field(default_factory=list)
    label_names: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.features = np.asarray(self.features, dtype=np.float64)
        if self.features.ndim != 2 or self.features.shape[0] < 1 or self.features.shape[1] < 1:
            raise EstimationError(f"dataset {self.name!r} needs an M x N feature matrix, got {self.features.shape}")
        if not np.all(np.isfinite(self.features)):
            raise EstimationError(f"non-finite input in dataset {self.name!r}")
        self.labels = np.asarray(self.labels).ravel()
        if self.labels.shape[0] != self.features.shape[0]:
            raise EstimationError(
                f"length mismatch in dataset {self.name!r}: {self.features.shape[0]} rows, {self.labels.shape[0]} labels")
        if not is_dense_labels(self.labels):
            raise EstimationError(f"labels of dataset {self.name!r} must be dense integers 0..C-1")
        self.labels = self.labels.astype(np.int64)
        if not self.feature_names:
            self.feature_names = [f"f{i}" for i in range(self.n_features)]
        if not self.label_names:
            self.label_names = [str(c) for c in range(self.n_classes)]

    @property
    def n_samples(self) -> int:
        return int(self.features.shape[0])

    @property
    def n_features(self) -> int:
        return int(self.features.shape[1])

    @property
    def n_classes(self) -> int:
        return int(self.labels.max()) + 1

    def subset(self, rows: np.ndarray) -> "Dataset":
        """Rows of this dataset; labels are re-densified if a class disappears."""
        labels = self.labels[rows]
        present, dense = np.unique(labels, return_inverse=True)
        return Dataset(
            name=self.name,
            features=self.features[rows],
            labels=dense,
            feature_names=list(self.feature_names),
            label_names=[self.label_names[c] for c in present],
        )

    def with_features(self, features: np.ndarray) -> "Dataset":
        features = np.asarray(features, dtype=np.float64)
        names = list(self.feature_names) if features.ndim == 2 and features.shape[1] == self.n_features else []
        return Dataset(self.name, features, self.labels, names, list(self.label_names))


@dataclass(eq=False)
class FoldPlan:
    fold_assignment: np.ndarray
    seed: int
    k: int

    def split(self, fold: int) -> Tuple[np.ndarray, np.ndarray]:
        test = self.fold_assignment == fold
        return np.flatnonzero(~test), np.flatnonzero(test)


@dataclass(frozen=True, order=True)
class AccuracyRecord:
    dataset: str
    method: str
    dim: int
    fold: int
    accuracy: float
    seed: int
    bins: int
    ct_max: int
    skipped: bool


@dataclass
class AccuracyTable:
    records: List[AccuracyRecord] = field(default_factory=list)

    def extend(self, records: Sequence[AccuracyRecord]) -> None:
        self.records.extend(records)
        # Canonical order makes the table independent of the execution schedule
        self.records.sort(key=lambda r: (r.dataset, r.method, r.dim, r.fold))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(r) for r in self.records], columns=list(REPORT_COLUMNS))

    def aggregates(self) -> pd.DataFrame:
        frame = self.to_frame()
        if frame.empty:
            return pd.DataFrame(columns=list(AGGREGATE_COLUMNS))
        rows = []
        for (dataset, method, dim), cell in frame.groupby(["dataset", "method", "dim"], sort=True):
            skipped = bool(cell["skipped"].all())
            rows.append({
                "dataset": dataset,
                "method": method,
                "dim": int(dim),
                "accuracy": float("nan") if skipped else float(np.mean(cell["accuracy"].to_numpy())),
                "folds": int(len(cell)),
                "skipped": skipped,
                "reference": reference_accuracy(dataset, method, int(dim)),
            })
        return pd.DataFrame(rows, columns=list(AGGREGATE_COLUMNS))

    def mean_accuracy(self, method: str, dim: int, dataset: Optional[str] = None) -> float:
        cells = [r.accuracy for r in self.records
                 if r.method == method and r.dim == dim and not r.skipped
                 and (dataset is None or r.dataset == dataset)]
        return float(np.mean(cells)) if cells else float("nan")


def reference_accuracy(dataset: str, method: str, dim: int) -> Optional[float]:
    row = REFERENCE_KNN_ACCURACY.get(dataset, {}).get(method)
    if row is None or not 1 <= dim <= len(row):
        return None
    return row[dim - 1]


@dataclass
class RegistryReport:
    name: str
    expected: Optional[Dict[str, int]]
    found: Dict[str, int]
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.warnings


@dataclass
class ExperimentConfig:
    """Everything needed to replay one benchmark run."""

    data_paths: List[str]
    name: str = CUSTOM_DATASET
    label_column: Union[int, str] = -1
    has_header: bool = False
    delimiter: Optional[str] = None
    methods: List[str] = field(default_factory=lambda: list(METHODS))
    dims: List[int] = field(default_factory=lambda: list(DEFAULT_DIMS))
    folds: int = DEFAULT_FOLDS
    seed: int = DEFAULT_SEED
    bins: int = DEFAULT_BIN_COUNT
    ct_max: int = DEFAULT_CT_MAX
    normalization: str = "per-feature"
    out_path: Optional[str] = None
    fmt: str = "csv"
    knn_k: int = DEFAULT_KNN_K
    epsilon_scale: float = DEFAULT_EPSILON_SCALE
    n_jobs: int = 1

    def __post_init__(self):
        if isinstance(self.data_paths, (str, Path)):
            self.data_paths = [self.data_paths]
        self.data_paths = [str(p) for p in self.data_paths]
        if not self.data_paths:
            raise ConfigError("At least one data path is required.")
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown or not self.methods:
            raise ConfigError(f"Unknown methods {unknown}. Please choose from: {', '.join(METHODS)}.")
        self.dims = sorted({int(d) for d in self.dims})
        if not self.dims or self.dims[0] < 1:
            raise ConfigError(f"dims must be a nonempty list of integers >= 1, got {self.dims}")
        if self.folds < 2:
            raise ConfigError(f"folds must be >= 2, got {self.folds}")
        if self.bins < 1:
            raise ConfigError(f"bins must be >= 1, got {self.bins}")
        if self.ct_max < 0:
            raise ConfigError(f"ct_max must be >= 0, got {self.ct_max}")
        if self.normalization not in NORMALIZATION_VARIANTS:
            raise ConfigError(
                f"Unknown normalization {self.normalization!r}. Please choose from: {', '.join(NORMALIZATION_VARIANTS)}.")
        if self.fmt not in REPORT_FORMATS:
            raise ConfigError(f"Unknown report format {self.fmt!r}. Please choose from: {', '.join(REPORT_FORMATS)}.")
        if self.knn_k < 1:
            raise ConfigError(f"knn_k must be >= 1, got {self.knn_k}")
        if self.epsilon_scale <= 0:
            raise ConfigError(f"epsilon_scale must be positive, got {self.epsilon_scale}")

    @property
    def histogram(self) -> HistogramSpec:
        return HistogramSpec(bin_count=self.bins)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
