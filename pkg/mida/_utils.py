from typing import Sequence, Tuple

import numpy as np

from ._constants import SYMMETRY_TOLERANCE
from .MidaError import EigenSolverError, EstimationError, ShapeMismatchError


def as_finite_vector(values, name: str = "values") -> np.ndarray:
    vector = np.asarray(values, dtype=np.float64).ravel()
    if vector.size == 0:
        raise EstimationError(f"empty sample: {name} has no entries")
    if not np.all(np.isfinite(vector)):
        raise EstimationError(f"non-finite input: {name} contains NaN or infinite values")
    return vector


def as_label_vector(labels, name: str = "labels") -> np.ndarray:
    vector = np.asarray(labels).ravel()
    if vector.size == 0:
        raise EstimationError(f"empty sample: {name} has no entries")
    return vector


def as_matrix(x, name: str = "x") -> np.ndarray:
    matrix = np.asarray(x, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.ndim != 2:
        raise ShapeMismatchError(f"{name} dimensionality", 2, matrix.ndim)
    return matrix


def ensure_same_length(a: np.ndarray, b: np.ndarray, what: str = "inputs") -> None:
    if a.shape[0] != b.shape[0]:
        raise EstimationError(f"length mismatch between {what}: {a.shape[0]} != {b.shape[0]}")


def dense_labels(labels) -> Tuple[np.ndarray, np.ndarray]:
    """Map arbitrary label values onto 0..C-1 in sorted order of the values."""
    classes, dense = np.unique(np.asarray(labels).ravel(), return_inverse=True)
    return classes, dense.astype(np.int64)


def is_dense_labels(labels: np.ndarray) -> bool:
    if labels.size == 0 or not np.issubdtype(labels.dtype, np.integer):
        return False
    present = np.unique(labels)
    return present[0] == 0 and present[-1] == present.size - 1


def check_symmetric(matrix, name: str = "matrix", tolerance: float = SYMMETRY_TOLERANCE) -> np.ndarray:
    """Validate a square, numerically symmetric matrix and return its exact symmetrization."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise EigenSolverError(f"{name} must be square", {"shape": m.shape})
    if not np.all(np.isfinite(m)):
        raise EigenSolverError(f"{name} contains non-finite entries", {"shape": m.shape})
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    asymmetry = float(np.max(np.abs(m - m.T))) if m.size else 0.0
    if asymmetry > tolerance * scale:
        raise EigenSolverError(f"{name} is not symmetric", {"asymmetry": asymmetry, "tolerance": tolerance * scale})
    return (m + m.T) / 2.0


def parse_int_list(raw: str) -> Sequence[int]:
    """Parse "1,2,5" or "1-7" (or a mix, "1-3,7") into a sorted list of unique ints."""
    out = set()
    for part in str(raw or "").replace(";", ",").split(","):
        token = part.strip()
        if not token:
            continue
        if "-" in token[1:]:
            lo, hi = token.split("-", 1)
            out.update(range(int(lo), int(hi) + 1))
        else:
            out.add(int(token))
    if not out:
        raise ValueError(f"No integers found in {raw!r}.")
    return sorted(out)
