"""Command line entry point: ``mida-bench run`` and ``mida-bench inspect``."""
import argparse
import sys
from typing import List, Optional

from ._constants import (
    CUSTOM_DATASET, DATASET_REGISTRY, DEFAULT_BIN_COUNT, DEFAULT_CT_MAX, DEFAULT_EPSILON_SCALE, DEFAULT_FOLDS,
    DEFAULT_KNN_K, DEFAULT_SEED, LIBRARY_VERSION, METHODS, NORMALIZATION_VARIANTS, REPORT_FORMATS,
)
from ._types import ExperimentConfig
from ._utils import parse_int_list
from .ExperimentRunner import ExperimentRunner, run_experiment
from .logger import LOG_LEVELS, set_package_level, setup_logger
from .MidaError import ConfigError, MidaError

logger = setup_logger(__name__)


def _add_dataset_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data", action="append", required=True, metavar="PATH",
                        help="delimited data file; repeat to pool several files (e.g. train and test)")
    parser.add_argument("--name", default=CUSTOM_DATASET, choices=sorted(DATASET_REGISTRY) + [CUSTOM_DATASET],
                        help="registry name used for the shape check and reference accuracies")
    parser.add_argument("--label-col", default=None,
                        help="label column name or index (negative counts from the end); "
                             "defaults to the registry layout, else the last column")
    parser.add_argument("--header", action="store_true", help="first line is a header")
    parser.add_argument("--delimiter", default=None, help="field delimiter (default: comma if present, else whitespace)")
    parser.add_argument("--bins", type=int, default=DEFAULT_BIN_COUNT, help="equal-width histogram bins")
    parser.add_argument("--ct-max", type=int, default=DEFAULT_CT_MAX, help="largest ct on the search grid")
    parser.add_argument("--norm", choices=NORMALIZATION_VARIANTS, default="per-feature", help="abs-max normalization")
    parser.add_argument("--epsilon-scale", type=float, default=DEFAULT_EPSILON_SCALE,
                        help="diagonal shift scale used to regularize the within-class scatter")
    parser.add_argument("--n-jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mida-bench",
                                     description="Mutual information discriminant analysis benchmark.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {LIBRARY_VERSION}")
    parser.add_argument("--log-level", choices=list(LOG_LEVELS), default="INFO")
    subcommands = parser.add_subparsers(dest="command", required=True)

    run = subcommands.add_parser("run", help="cross-validate extractors with a k-NN classifier and write reports")
    _add_dataset_arguments(run)
    run.add_argument("--methods", default=",".join(METHODS), help=f"comma list from {', '.join(METHODS)}")
    run.add_argument("--dims", default="1-7", help="dimensions, e.g. 1-7 or 1,2,5")
    run.add_argument("--folds", type=int, default=DEFAULT_FOLDS)
    run.add_argument("--seed", type=int, default=DEFAULT_SEED)
    run.add_argument("--knn-k", type=int, default=DEFAULT_KNN_K)
    run.add_argument("--out", default=None, metavar="PATH", help="report base path")
    run.add_argument("--format", choices=REPORT_FORMATS, default="csv")

    inspect = subcommands.add_parser("inspect", help="print the MI profile and the K curve of a dataset")
    _add_dataset_arguments(inspect)
    inspect.add_argument("--t", type=int, default=1, help="number of extracted features for the K curve")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    label_column = args.label_col
    if label_column is None:
        label_column = DATASET_REGISTRY[args.name].label_column if args.name in DATASET_REGISTRY else -1
    try:
        dims = parse_int_list(getattr(args, "dims", "1"))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return ExperimentConfig(
        data_paths=args.data,
        name=args.name,
        label_column=label_column,
        has_header=args.header,
        delimiter=args.delimiter,
        methods=[m.strip() for m in getattr(args, "methods", "mida").split(",") if m.strip()],
        dims=dims,
        folds=getattr(args, "folds", DEFAULT_FOLDS),
        seed=getattr(args, "seed", DEFAULT_SEED),
        bins=args.bins,
        ct_max=args.ct_max,
        normalization=args.norm,
        out_path=getattr(args, "out", None),
        fmt=getattr(args, "format", "csv"),
        knn_k=getattr(args, "knn_k", DEFAULT_KNN_K),
        epsilon_scale=args.epsilon_scale,
        n_jobs=args.n_jobs,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    set_package_level(args.log_level)
    try:
        config = config_from_args(args)
        if args.command == "run":
            run_experiment(config)
        else:
            sys.stdout.write(ExperimentRunner(config).inspect(args.t))
    except MidaError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return 1
    return 0
