from typing import Any, Dict, Optional


class MidaError(ValueError):
    """Base error for the MIDA library and benchmark."""


class EstimationError(MidaError):
    """Invalid input to an information estimator."""


class DegenerateLabelsError(MidaError):
    def __init__(self, n_classes: int):
        self.n_classes = n_classes
        super().__init__(f"degenerate labels: need at least 2 classes, found {n_classes}")


class UninformativeFeaturesError(MidaError):
    def __init__(self, n_features: int):
        self.n_features = n_features
        super().__init__(
            f"uninformative feature set: all {n_features} relevance values are zero, "
            "the between-class scatter would be the zero matrix"
        )


class EigenSolverError(MidaError):
    """Generalized eigenproblem failure; ``diagnostics`` holds the solver context."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        self.diagnostics = dict(diagnostics or {})
        details = ", ".join(f"{k}={v}" for k, v in sorted(self.diagnostics.items()))
        super().__init__(f"{message} ({details})" if details else message)


class ShapeMismatchError(MidaError):
    def __init__(self, what: str, expected, found):
        self.expected = expected
        self.found = found
        super().__init__(f"{what}: expected {expected}, found {found}")


class ConfigError(MidaError):
    """Invalid experiment configuration."""


class DatasetFormatError(MidaError):
    """Problem reading a delimited dataset file."""

    def __init__(self, message: str, path=None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = f"{path}" if path is not None else "<input>"
        if line is not None:
            location = f"{location}:{line}"
        super().__init__(f"{message}. Location: {location}")


class MissingFileError(DatasetFormatError):
    pass


class EmptyFileError(DatasetFormatError):
    pass


class RaggedRowError(DatasetFormatError):
    pass


class NonNumericCellError(DatasetFormatError):
    pass
