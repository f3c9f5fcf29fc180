"""Delimited-text dataset ingestion, export and the benchmark dataset registry."""
import csv
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ._constants import CUSTOM_DATASET, DATASET_REGISTRY, TEXT_PRECISION
from ._types import Dataset, PathLike, RegistryReport
from .logger import setup_logger
from .MidaError import (
    DatasetFormatError, EmptyFileError, MissingFileError, NonNumericCellError, RaggedRowError,
)

logger = setup_logger(__name__)

LabelColumn = Union[int, str]


def _iter_rows(path: Path, delimiter: Optional[str]) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line number, fields) for every non-blank line; ``None`` splits on runs of whitespace."""
    with path.open("r", encoding="utf-8", newline="") as fh:
        if delimiter is None:
            for lineno, line in enumerate(fh, start=1):
                fields = line.split()
                if fields:
                    yield lineno, fields
        else:
            reader = csv.reader(fh, delimiter=delimiter, skipinitialspace=True)
            for fields in reader:
                if fields and any(f.strip() for f in fields):
                    yield reader.line_num, [f.strip() for f in fields]


def _sniff_delimiter(path: Path) -> Optional[str]:
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                return "," if "," in line else None
    return None


def _resolve_label_column(label_column: LabelColumn, header: Optional[List[str]], width: int, path: Path) -> int:
    if isinstance(label_column, str) and not label_column.lstrip("-").isdigit():
        if header is None or label_column not in header:
            raise DatasetFormatError(f"label column {label_column!r} not found in header {header}", path, 1)
        return header.index(label_column)
    index = int(label_column)
    if not -width <= index < width:
        raise DatasetFormatError(f"label column {index} out of range for {width} columns", path, 1)
    return index % width


def _read_table(path: Path, has_header: bool, delimiter: Optional[str]) -> Tuple[Optional[List[str]], pd.DataFrame]:
    if not path.is_file():
        raise MissingFileError("dataset file does not exist", path)
    if delimiter is None:
        delimiter = _sniff_delimiter(path)

    header, rows, lines, width = None, [], [], None
    for lineno, fields in _iter_rows(path, delimiter):
        if has_header and header is None:
            header, width = fields, len(fields)
            continue
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise RaggedRowError(f"expected {width} fields, found {len(fields)}", path, lineno)
        rows.append(fields)
        lines.append(lineno)
    if not rows:
        raise EmptyFileError("dataset file has no data rows", path)
    return header, pd.DataFrame(rows, index=lines, dtype=str)


def load_csv(paths: Union[PathLike, Sequence[PathLike]],
             label_column: LabelColumn = -1,
             has_header: bool = False,
             delimiter: Optional[str] = None,
             name: str = CUSTOM_DATASET,
             ) -> Dataset:
    """Read one or more delimited files into a single Dataset.

    Several paths are pooled in the given order (e.g. upstream train/test
    splits). Labels are mapped to 0..C-1 in sorted order of their values,
    numerically when every label parses as a number; the mapping is kept in
    ``Dataset.label_names``.
    """
    if isinstance(paths, (str, Path)):
        paths = [paths]
    frames, header = [], None
    for raw_path in paths:
        path = Path(raw_path).expanduser()
        file_header, table = _read_table(path, has_header, delimiter)
        if frames and table.shape[1] != frames[0][1].shape[1]:
            raise RaggedRowError(
                f"expected {frames[0][1].shape[1]} fields like {frames[0][0]}, found {table.shape[1]}",
                path, int(table.index[0]))
        header = header or file_header
        frames.append((path, table))

    width = frames[0][1].shape[1]
    label_index = _resolve_label_column(label_column, header, width, frames[0][0])
    feature_columns = [c for c in range(width) if c != label_index]
    if not feature_columns:
        raise DatasetFormatError("dataset needs at least one feature column besides the label", frames[0][0])

    features, raw_labels = [], []
    for path, table in frames:
        cells = table[feature_columns]
        try:
            # Python float parsing keeps 17-digit text round-trips bit-exact
            block = cells.to_numpy(dtype=object).astype(np.float64)
        except ValueError:
            block = cells.apply(pd.to_numeric, errors="coerce").to_numpy(dtype=np.float64)
        bad = ~np.isfinite(block)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            cell = cells.iat[row, col]
            raise NonNumericCellError(f"non-numeric feature cell {cell!r} in column {feature_columns[col]}",
                                      path, int(table.index[row]))
        features.append(block)
        raw_labels.extend(table[label_index].tolist())

    label_names, labels = _encode_labels(raw_labels)
    feature_names = [header[c] for c in feature_columns] if header else [f"f{c}" for c in feature_columns]
    dataset = Dataset(name=name, features=np.vstack(features), labels=labels,
                      feature_names=feature_names, label_names=label_names)
    logger.info(f"Loaded {name!r}: {dataset.n_samples} samples, {dataset.n_features} features, "
                f"{dataset.n_classes} classes from {len(frames)} file(s)")
    return dataset


def _encode_labels(raw_labels: List[str]) -> Tuple[List[str], np.ndarray]:
    values = pd.Series(raw_labels, dtype=str)
    numeric = pd.to_numeric(values, errors="coerce")
    if not numeric.isna().any():
        classes, dense = np.unique(numeric.to_numpy(dtype=np.float64), return_inverse=True)
        names = [values[numeric == c].iloc[0] for c in classes]
    else:
        classes, dense = np.unique(values.to_numpy(dtype=str), return_inverse=True)
        names = [str(c) for c in classes]
    return names, dense.astype(np.int64)


def write_csv(dataset: Dataset, path: PathLike, label_header: str = "label") -> Path:
    """Comma-separated file with a header row, features at 17 significant digits and original label values."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(dataset.features, columns=list(dataset.feature_names))
    frame[label_header] = [dataset.label_names[c] for c in dataset.labels]
    frame.to_csv(path, index=False, float_format=TEXT_PRECISION, lineterminator="\n")
    return path


def registry_check(dataset: Dataset) -> RegistryReport:
    """Compare (features, classes, samples) with the registry entry; mismatches are warnings only."""
    found = {"features": dataset.n_features, "classes": dataset.n_classes, "samples": dataset.n_samples}
    entry = DATASET_REGISTRY.get(dataset.name)
    if entry is None:
        if dataset.name != CUSTOM_DATASET:
            logger.warning(f"Dataset {dataset.name!r} is not in the registry; treating it as custom")
        return RegistryReport(name=dataset.name, expected=None, found=found)

    expected = {"features": entry.n_features, "classes": entry.n_classes, "samples": entry.n_samples}
    report = RegistryReport(name=dataset.name, expected=expected, found=found)
    for key in ("features", "classes", "samples"):
        if expected[key] != found[key]:
            report.warnings.append(f"{entry.title}: expected {expected[key]} {key}, found {found[key]}")
    for message in report.warnings:
        logger.warning(message)
    return report
