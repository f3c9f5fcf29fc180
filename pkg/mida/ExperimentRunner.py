"""Benchmark runner: cross-validated accuracy tables and the reports written from them."""
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from ._constants import DATASET_REGISTRY, LIBRARY_VERSION, SKIP_MARKER, TEXT_PRECISION
from ._types import AccuracyTable, Dataset, ExperimentConfig
from .dataio import load_csv, registry_check
from .eval_harness import normalize_absmax, run_cv
from .logger import setup_logger
from .mi_estimation import bayes_error_bounds, entropy_discrete
from .mida_core import select_ct
from .scatter_builder import compute_mi_profile

logger = setup_logger(__name__)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return None if math.isnan(value) else float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def format_grid(table: AccuracyTable, methods: List[str], dims: List[int]) -> str:
    """Accuracy grid in percent, dims as rows and methods as columns, skipped cells as the skip marker."""
    aggregates = table.aggregates()
    blocks = []
    for dataset, cells in aggregates.groupby("dataset", sort=True):
        lookup = {(row.method, row.dim): row for row in cells.itertuples(index=False)}
        grid = pd.DataFrame(index=pd.Index(dims, name="Dim."), columns=[m.upper() if m != "raw" else "Raw" for m in methods])
        for method, column in zip(methods, grid.columns):
            for dim in dims:
                row = lookup.get((method, dim))
                grid.loc[dim, column] = SKIP_MARKER if row is None or row.skipped else f"{100 * row.accuracy:.1f}"
        title = DATASET_REGISTRY[dataset].title if dataset in DATASET_REGISTRY else dataset
        blocks.append(f"{title} data set\n{grid.to_string()}")
    return "\n\n".join(blocks) + "\n"


class ExperimentRunner:
    """Loads a dataset once and runs the configured extraction methods through cross-validation."""

    def __init__(self, config: ExperimentConfig, dataset: Optional[Dataset] = None):
        self.config = config
        self.dataset = dataset if dataset is not None else load_csv(
            config.data_paths,
            label_column=config.label_column,
            has_header=config.has_header,
            delimiter=config.delimiter,
            name=config.name,
        )
        self.registry_report = registry_check(self.dataset)

    @property
    def cv_settings(self) -> Dict[str, Any]:
        return {
            "bins": self.config.bins,
            "ct_max": self.config.ct_max,
            "normalization": self.config.normalization,
            "knn_k": self.config.knn_k,
            "epsilon_scale": self.config.epsilon_scale,
            "n_jobs": self.config.n_jobs,
        }

    def run(self) -> AccuracyTable:
        table = AccuracyTable()
        for method in self.config.methods:
            logger.info(f"Running {method} on {self.dataset.name!r} for dims {self.config.dims}")
            table.extend(run_cv(self.dataset, method, self.config.dims, self.config.folds, self.config.seed,
                                self.cv_settings).records)
        return table

    def metadata(self) -> Dict[str, Any]:
        return _jsonable({
            "version": LIBRARY_VERSION,
            "config": self.config.to_dict(),
            "dataset": {
                "name": self.dataset.name,
                "samples": self.dataset.n_samples,
                "features": self.dataset.n_features,
                "classes": self.dataset.n_classes,
            },
            "label_mapping": {name: index for index, name in enumerate(self.dataset.label_names)},
            "normalization": f"abs-max {self.config.normalization}",
            "registry": {
                "expected": self.registry_report.expected,
                "found": self.registry_report.found,
                "warnings": self.registry_report.warnings,
            },
        })

    def report_base(self) -> Path:
        out = Path(self.config.out_path) if self.config.out_path else Path.cwd() / f"{self.dataset.name}-report"
        return out.with_suffix("") if out.suffix in (".csv", ".json") else out

    def write_reports(self, table: AccuracyTable) -> List[Path]:
        base = self.report_base()
        base.parent.mkdir(parents=True, exist_ok=True)
        records, aggregates = table.to_frame(), table.aggregates()
        written = []

        if self.config.fmt == "csv":
            targets = [(Path(f"{base}.csv"), records), (Path(f"{base}.aggregates.csv"), aggregates)]
            for path, frame in targets:
                frame.to_csv(path, index=False, float_format=TEXT_PRECISION, na_rep="", lineterminator="\n")
                written.append(path)
            meta_path = Path(f"{base}.meta.json")
            meta_path.write_text(json.dumps(self.metadata(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
            written.append(meta_path)
        else:
            document = {
                "meta": self.metadata(),
                "records": _jsonable(records.to_dict(orient="records")),
                "aggregates": _jsonable(aggregates.to_dict(orient="records")),
            }
            json_path = Path(f"{base}.json")
            json_path.write_text(json.dumps(document, indent=2, sort_keys=True, allow_nan=False) + "\n",
                                 encoding="utf-8")
            written.append(json_path)

        grid_path = Path(f"{base}.grid.txt")
        grid_path.write_text(format_grid(table, self.config.methods, self.config.dims), encoding="utf-8")
        written.append(grid_path)
        for path in written:
            logger.remarks(f"Wrote {path}")
        return written

    def inspect(self, t: int = 1) -> str:
        """Relevance, Bayes-error bounds, redundancy and the K curve of the whole (normalized) dataset."""
        x, _, _ = normalize_absmax(self.dataset.features, self.dataset.features[:1], self.config.normalization)
        dataset = self.dataset.with_features(x)
        spec = self.config.histogram
        profile = compute_mi_profile(dataset, spec, n_jobs=self.config.n_jobs)

        h_c = entropy_discrete(dataset.labels)
        rows = []
        for name, relevance in zip(dataset.feature_names, profile.relevance):
            lower, upper = bayes_error_bounds(h_c, min(relevance, h_c), dataset.n_classes)
            rows.append({"feature": name, "relevance": relevance, "bayes_lower": lower, "bayes_upper": upper})
        relevance_frame = pd.DataFrame(rows).set_index("feature")
        redundancy_frame = pd.DataFrame(profile.redundancy, index=dataset.feature_names, columns=dataset.feature_names)

        t = min(max(1, t), dataset.n_features)
        ct_opt, k_curve = select_ct(dataset, t, self.config.ct_max, spec, profile=profile,
                                    epsilon_scale=self.config.epsilon_scale, n_jobs=self.config.n_jobs)
        k_frame = pd.DataFrame({"ct": np.arange(k_curve.size), "K": k_curve}).set_index("ct")

        return "\n\n".join([
            f"{dataset.name}: {dataset.n_samples} samples, {dataset.n_features} features, "
            f"{dataset.n_classes} classes, H(C) = {h_c:.4f} bits, bins = {spec.bin_count}",
            "Relevance I(f_i; C) in bits with Bayes-error bounds\n" + relevance_frame.to_string(float_format="%.4f"),
            "Redundancy I(f_i; f_j) in bits\n" + redundancy_frame.to_string(float_format="%.4f"),
            f"K curve for t = {t} (ct_opt = {ct_opt})\n" + k_frame.to_string(float_format="%.4f"),
        ]) + "\n"


def run_experiment(config: ExperimentConfig, dataset: Optional[Dataset] = None) -> Tuple[AccuracyTable, List[Path]]:
    runner = ExperimentRunner(config, dataset)
    table = runner.run()
    written = runner.write_reports(table)
    for row in table.aggregates().itertuples(index=False):
        if not row.skipped:
            logger.remarks(f"{row.dataset} {row.method} dim={row.dim}: {100 * row.accuracy:.1f}%")
    return table, written
