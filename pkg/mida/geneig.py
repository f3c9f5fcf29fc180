"""Fisher-Rao trace-ratio eigenproblem A v = lambda B v for symmetric A and regularized B."""
from typing import Tuple

import numpy as np
import scipy.linalg

from ._constants import DEFAULT_EPSILON_SCALE
from ._types import EigenSolution, ProjectionMatrix
from ._utils import as_matrix, check_symmetric
from .logger import setup_logger
from .MidaError import EigenSolverError, ShapeMismatchError

logger = setup_logger(__name__)


def regularize_spd(b, epsilon_scale: float = DEFAULT_EPSILON_SCALE) -> Tuple[np.ndarray, float]:
    """Shift b by sigma * I so the result is positive definite.

    sigma = max(0, -lambda_min(b)) + epsilon, epsilon = epsilon_scale * max(1, |trace(b)| / N).
    """
    b = check_symmetric(b, "b")
    n = b.shape[0]
    lambda_min = float(scipy.linalg.eigvalsh(b, subset_by_index=[0, 0])[0]) if n else 0.0
    epsilon = epsilon_scale * max(1.0, abs(float(np.trace(b))) / max(n, 1))
    shift = max(0.0, -lambda_min) + epsilon
    return b + shift * np.eye(n), shift


def orient_columns(vectors: np.ndarray) -> np.ndarray:
    """Unit Euclidean norm per column, largest-magnitude entry positive."""
    vectors = vectors / np.linalg.norm(vectors, axis=0, keepdims=True)
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def descending_order(eigenvalues: np.ndarray) -> np.ndarray:
    # Stable sort keeps the solver's index order among equal eigenvalues
    return np.argsort(-eigenvalues, kind="stable")


def solve_fisher_rao(a, b, t: int, epsilon_scale: float = DEFAULT_EPSILON_SCALE) -> EigenSolution:
    a = check_symmetric(a, "a")
    b = check_symmetric(b, "b")
    n = a.shape[0]
    if b.shape != a.shape:
        raise EigenSolverError("a and b must have the same shape", {"a": a.shape, "b": b.shape})
    if not 1 <= t <= n:
        raise EigenSolverError("t must satisfy 1 <= t <= N", {"t": t, "N": n})

    b_reg, shift = regularize_spd(b, epsilon_scale)
    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh(a, b_reg)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigenSolverError(
            f"generalized eigensolver did not converge: {exc}",
            {"N": n, "shift": shift, "trace_a": float(np.trace(a)), "trace_b": float(np.trace(b))},
        ) from exc

    order = descending_order(eigenvalues)[:t]
    logger.debug(f"Fisher-Rao solve N={n} t={t} shift={shift:.3e} top eigenvalue={eigenvalues[order[0]]:.4g}")
    return EigenSolution(
        eigenvalues=eigenvalues[order],
        eigenvectors=orient_columns(eigenvectors[:, order]),
        regularization_shift=shift,
    )


def projection_matrix(solution: EigenSolution) -> ProjectionMatrix:
    return ProjectionMatrix(w=solution.eigenvectors.copy())


def project(x, w: ProjectionMatrix) -> np.ndarray:
    """Y = X W with samples in rows."""
    x = as_matrix(x)
    if x.shape[1] != w.n_features:
        raise ShapeMismatchError("projection input columns", w.n_features, x.shape[1])
    return x @ w.w
