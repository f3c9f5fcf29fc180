from collections import namedtuple

LIBRARY_VERSION = "0.1.0"

# Estimator / extractor defaults
DEFAULT_BIN_COUNT = 16
DEFAULT_CT_MAX = 10
DEFAULT_EPSILON_SCALE = 1e-6
SYMMETRY_TOLERANCE = 1e-10

# Evaluation protocol defaults
DEFAULT_FOLDS = 10
DEFAULT_SEED = 0
DEFAULT_KNN_K = 1
DEFAULT_DIMS = (1, 2, 3, 4, 5, 6, 7)
KNN_QUERY_BLOCK = 1024

METHODS = ("raw", "pca", "lda", "mida")
NORMALIZATION_VARIANTS = ("per-feature", "global")
REPORT_FORMATS = ("csv", "json")
CUSTOM_DATASET = "custom"

# Machine-readable report schema. The column set is part of the public contract.
REPORT_COLUMNS = ("dataset", "method", "dim", "fold", "accuracy", "seed", "bins", "ct_max", "skipped")
AGGREGATE_COLUMNS = ("dataset", "method", "dim", "accuracy", "folds", "skipped", "reference")
SKIP_MARKER = "-"
TEXT_PRECISION = "%.17g"

RegistryEntry = namedtuple("RegistryEntry", ["n_features", "n_classes", "n_samples", "label_column", "title"])

# Shapes of the UCI benchmark sets as used in the published comparison.
# label_column is where the class sits in the upstream file layout.
DATASET_REGISTRY = {
    "letter": RegistryEntry(16, 26, 20000, 0, "Letter"),
    "libras": RegistryEntry(90, 15, 360, -1, "Libras movement"),
    "wall-following": RegistryEntry(24, 4, 5456, -1, "Wall-following"),
    "madelon": RegistryEntry(500, 2, 2600, -1, "Madelon"),
    "hill-valley-noise": RegistryEntry(100, 2, 1212, -1, "Hill-valley with noise"),
    "hill-valley-clean": RegistryEntry(100, 2, 1212, -1, "Hill-valley without noise"),
}

# Published 1-NN accuracies (percent) for dims 1..7; None marks a cell the
# method cannot produce (LDA beyond C - 1 features).
_NA = None
REFERENCE_KNN_ACCURACY = {
    "letter": {
        "raw": (4.4, 6.4, 10.3, 13.6, 20.6, 30.2, 45.9),
        "pca": (15.2, 21.1, 33.7, 53.8, 68.3, 77.1, 85.9),
        "lda": (22.1, 40.0, 51.7, 67.0, 74.4, 81.6, 85.8),
        "mida": (21.4, 49.9, 65.9, 70.1, 77.7, 83.4, 90.0),
    },
    "libras": {
        "raw": (24.4, 46.1, 45.3, 46.7, 46.1, 46.4, 45.6),
        "pca": (23.3, 33.1, 50.6, 65.0, 71.7, 78.6, 81.9),
        "lda": (31.4, 50.0, 50.6, 55.8, 61.9, 62.2, 63.6),
        "mida": (26.9, 48.1, 66.7, 72.5, 78.3, 80.3, 82.2),
    },
    "wall-following": {
        "raw": (50.0, 72.2, 81.8, 85.0, 85.7, 85.2, 84.2),
        "pca": (39.3, 54.1, 72.5, 80.2, 84.3, 87.2, 87.3),
        "lda": (49.7, 65.9, 75.2, _NA, _NA, _NA, _NA),
        "mida": (55.3, 74.1, 85.2, 89.6, 91.3, 91.6, 92.1),
    },
    "madelon": {
        "raw": (49.6, 52.0, 50.5, 51.3, 49.4, 50.7, 51.9),
        "pca": (50.2, 54.2, 57.2, 64.9, 79.5, 88.8, 85.9),
        "lda": (53.4, _NA, _NA, _NA, _NA, _NA, _NA),
        "mida": (49.5, 54.9, 61.9, 74.3, 84.2, 87.5, 87.6),
    },
    "hill-valley-noise": {
        "raw": (53.3, 51.3, 53.4, 51.6, 51.6, 50.1, 51.7),
        "pca": (52.7, 58.4, 68.1, 89.8, 96.1, 98.3, 98.4),
        "lda": (75.6, _NA, _NA, _NA, _NA, _NA, _NA),
        "mida": (54.4, 78.9, 89.3, 94.8, 98.8, 99.3, 99.5),
    },
    "hill-valley-clean": {
        "raw": (53.1, 54.5, 53.3, 54.0, 53.9, 53.9, 53.2),
        "pca": (49.3, 55.9, 75.3, 88.7, 95.3, 97.4, 98.1),
        "lda": (76.1, _NA, _NA, _NA, _NA, _NA, _NA),
        "mida": (50.6, 66.8, 88.5, 92.5, 97.4, 98.4, 99.3),
    },
}
