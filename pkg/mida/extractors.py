from typing import Any, Dict

import numpy as np

from ._BaseExtractor import BaseExtractor
from ._constants import METHODS
from ._types import Dataset, ProjectionMatrix, ProjectionModel
from .baselines import fit_lda, fit_pca
from .mida_core import fit_mida
from .MidaError import ConfigError
from .scatter_builder import compute_mi_profile


class RawExtractor(BaseExtractor):
    """Keeps the first t original features."""

    method = "raw"

    def fit(self, dataset: Dataset, t: int, **context) -> ProjectionModel:
        return ProjectionModel(
            method=self.method,
            w=ProjectionMatrix(w=np.eye(dataset.n_features)[:, :t]),
            eigenvalues=np.ones(t),
            t_requested=t,
            t_effective=t,
        )


class PcaExtractor(BaseExtractor):
    method = "pca"

    def fit(self, dataset: Dataset, t: int, **context) -> ProjectionModel:
        return fit_pca(dataset.features, t)


class LdaExtractor(BaseExtractor):
    method = "lda"

    def max_dimension(self, dataset: Dataset) -> int:
        return min(dataset.n_features, dataset.n_classes - 1)

    def fit(self, dataset: Dataset, t: int, **context) -> ProjectionModel:
        return fit_lda(dataset, t, self.epsilon_scale)


class MidaExtractor(BaseExtractor):
    method = "mida"

    def prepare(self, dataset: Dataset) -> Dict[str, Any]:
        return {"profile": compute_mi_profile(dataset, self.spec, n_jobs=self.n_jobs)}

    def fit(self, dataset: Dataset, t: int, **context):
        return fit_mida(dataset, t, self.ct_max, self.spec,
                        profile=context.get("profile"), epsilon_scale=self.epsilon_scale, n_jobs=self.n_jobs)


EXTRACTORS = {cls.method: cls for cls in (RawExtractor, PcaExtractor, LdaExtractor, MidaExtractor)}
assert tuple(EXTRACTORS) == METHODS


def get_extractor(method: str, **kwargs) -> BaseExtractor:
    try:
        return EXTRACTORS[method](**kwargs)
    except KeyError:
        raise ConfigError(f"Unknown method {method!r}. Please choose from: {', '.join(METHODS)}.") from None
