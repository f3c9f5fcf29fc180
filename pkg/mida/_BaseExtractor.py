from typing import Any, Dict, Iterable

import numpy as np

from ._constants import DEFAULT_CT_MAX, DEFAULT_EPSILON_SCALE
from ._types import Dataset, HistogramSpec
from .logger import setup_logger
from .mida_core import transform

logger = setup_logger(__name__)


class BaseExtractor:
    """Common configuration and the fit-per-dimension loop of every feature extractor.

    Subclasses implement ``fit``; ``prepare`` may return per-training-set work
    (e.g. the MI profile) that is shared by all requested dimensions.
    """

    method: str = ""

    def __init__(self,
                 spec: HistogramSpec = HistogramSpec(),
                 ct_max: int = DEFAULT_CT_MAX,
                 epsilon_scale: float = DEFAULT_EPSILON_SCALE,
                 n_jobs: int = 1,
                 ):
        self.spec = spec
        self.ct_max = ct_max
        self.epsilon_scale = epsilon_scale
        self.n_jobs = n_jobs

    def max_dimension(self, dataset: Dataset) -> int:
        return dataset.n_features

    def prepare(self, dataset: Dataset) -> Dict[str, Any]:
        return {}

    def fit(self, dataset: Dataset, t: int, **context):
        raise NotImplementedError

    def fit_dims(self, dataset: Dataset, dims: Iterable[int]) -> Dict[int, Any]:
        """Fitted model per producible dimension; dimensions beyond ``max_dimension`` are left out."""
        limit = self.max_dimension(dataset)
        producible = [d for d in dims if d <= limit]
        if not producible:
            return {}
        context = self.prepare(dataset)
        models = {d: self.fit(dataset, d, **context) for d in producible}
        logger.debug(f"{self.method} fitted dims {producible} on {dataset.n_samples} training rows")
        return models

    @staticmethod
    def transform(model, x) -> np.ndarray:
        return transform(model, x)

    def __repr__(self):
        return (f"{type(self).__name__}(bins={self.spec.bin_count}, ct_max={self.ct_max}, "
                f"epsilon_scale={self.epsilon_scale}, n_jobs={self.n_jobs})")
