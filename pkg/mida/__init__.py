"""Mutual information discriminant analysis and its k-NN benchmark protocol."""
from ._constants import LIBRARY_VERSION as __version__
from ._types import (
    AccuracyRecord, AccuracyTable, Dataset, EigenSolution, ExperimentConfig, FoldPlan, HistogramSpec,
    JointCountTable, LdaScatter, MIEstimate, MidaModel, MIProfile, ProjectionMatrix, ProjectionModel,
    RegistryReport, ScatterPair,
)
from .baselines import fit_lda, fit_pca, lda_scatter
from .dataio import load_csv, registry_check, write_csv
from .eval_harness import knn_classify, normalize_absmax, run_cv, stratified_folds
from .ExperimentRunner import ExperimentRunner, run_experiment
from .geneig import project, regularize_spd, solve_fisher_rao
from .mi_estimation import (
    bayes_error_bounds, bin_feature, conditional_entropy, entropy_counts, entropy_discrete, exact_mi_table,
    joint_count_table, merge_rows, mi_feature_class, mi_feature_feature,
)
from .mida_core import fit_mida, quality_K, select_ct, transform
from .scatter_builder import build_scatter_pair, compute_mi_profile
