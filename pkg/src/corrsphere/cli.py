"""Command-line interface for corrsphere."""

import argparse
import io
import logging
import sys
from collections.abc import Callable, Mapping, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Generator, TextIO

import pandas as pd

from .config import DEFAULT_MAX_ITERS, DEFAULT_SEED, DEFAULT_TOL, EPS_DIAG
from .core import canonicalize, center_of_mass, distance_matrix, fit, standardize_all
from .errors import CorrSphereError, DataError, NumericalError
from .models import ClusteringConfig, Dataset, DistanceMatrix, InitMethod, StandardizedPoint
from .storage import (
    CsvOptions,
    ExcelExporter,
    assignments_frame,
    barycenter_frame,
    centers_frame,
    distance_frame,
    parse_csv,
    points_frame,
    write_csv,
    write_json,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3


class UsageError(Exception):
    """Raised for invalid command-line usage."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def setup_logging(verbose: bool = False, log_file: str | None = None) -> None:
    """Setup logging configuration.

    Diagnostics go to standard error; standard output is reserved for results.

    Args:
        verbose: Enable verbose logging
        log_file: Optional file receiving a copy of the log
    """
    level = logging.DEBUG if verbose else logging.WARNING
    format_string = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(level=level, format=format_string, handlers=handlers)


@contextmanager
def _open_input(path: str) -> Generator[TextIO, None, None]:
    if path == "-":
        yield sys.stdin
        return
    with open(path, newline="", encoding="utf-8") as stream:
        yield stream


def load_dataset(args: argparse.Namespace) -> Dataset:
    """Read the dataset named by ``--input`` with the parsing flags."""
    options = CsvOptions(
        delimiter=args.delimiter,
        has_header=args.header,
        id_column=args.id_column,
        transpose=args.transpose,
    )
    with _open_input(args.input) as stream:
        return parse_csv(stream, options, source=args.input)


def load_standardized(args: argparse.Namespace) -> tuple[Dataset, tuple[StandardizedPoint, ...]]:
    """Read and standardize the input, naming the offending row on Diag rejection."""
    dataset = load_dataset(args)
    points = standardize_all(
        dataset.points, args.eps_diag, dataset.identifiers, dataset.lines
    )
    return dataset, points


def emit(
    args: argparse.Namespace,
    tables: Mapping[str, pd.DataFrame],
    payload: dict[str, Any],
    write_primary: Callable[[TextIO], None],
    index: bool = False,
) -> None:
    """Write results in the requested format to ``--output`` or standard output."""
    if args.format == "xlsx":
        ExcelExporter(args.output).export(tables, index=index)
        return

    buffer = io.StringIO()
    if args.format == "json":
        write_json(buffer, payload)
    else:
        write_primary(buffer)

    if args.output in (None, "-"):
        sys.stdout.write(buffer.getvalue())
        sys.stdout.flush()
    else:
        Path(args.output).write_text(buffer.getvalue(), encoding="utf-8")
        logger.info(f"Wrote {args.format} output to {args.output}")


def cmd_standardize(args: argparse.Namespace) -> None:
    """Standardize every row onto the hypersphere.

    Args:
        args: Parsed command line arguments
    """
    dataset, points = load_standardized(args)
    if args.canonical:
        points = tuple(canonicalize(point) for point in points)

    frame = points_frame(points, dataset.identifiers, dataset.dimension_names, dataset.id_label)
    has_ids = dataset.identifiers is not None
    payload = {
        "ids": list(dataset.identifiers) if has_ids else None,
        "points": [point.to_list() for point in points],
    }
    emit(
        args,
        {"Standardized": frame},
        payload,
        lambda out: write_csv(
            out, frame, header=dataset.dimension_names is not None, index=has_ids
        ),
        index=has_ids,
    )


def cmd_distmat(args: argparse.Namespace) -> None:
    """Compute the pairwise correlation distance matrix.

    Args:
        args: Parsed command line arguments
    """
    dataset, points = load_standardized(args)
    matrix = DistanceMatrix(distance_matrix(points).entries, dataset.identifiers)
    frame = distance_frame(matrix)
    has_ids = dataset.identifiers is not None
    emit(
        args,
        {"Distances": frame},
        matrix.to_dict(),
        lambda out: write_csv(out, frame, header=has_ids, index=has_ids),
        index=True,
    )


def cmd_center(args: argparse.Namespace) -> None:
    """Compute the barycenter of all rows.

    Args:
        args: Parsed command line arguments
    """
    dataset, points = load_standardized(args)
    barycenter = center_of_mass(points)
    frame = barycenter_frame(barycenter, dataset.dimension_names)
    emit(
        args,
        {"Barycenter": frame},
        barycenter.to_dict(),
        lambda out: write_csv(out, frame),
    )


def cmd_cluster(args: argparse.Namespace) -> None:
    """Cluster rows with correlation k-means.

    Args:
        args: Parsed command line arguments
    """
    cfg = ClusteringConfig(
        k=args.k,
        max_iters=args.max_iters,
        tol=args.tol,
        seed=args.seed,
        init=InitMethod(args.init),
    )
    dataset, points = load_standardized(args)
    model = fit(points, cfg)

    assignments = assignments_frame(model, dataset.identifiers)
    summary = pd.DataFrame(
        [
            {
                "k": model.k,
                "inertia": model.inertia,
                "iterations": model.iterations_run,
                "converged": model.converged,
            }
        ]
    )
    emit(
        args,
        {
            "Assignments": assignments,
            "Centers": centers_frame(model, dataset.dimension_names),
            "Summary": summary,
        },
        model.to_dict(),
        lambda out: write_csv(out, assignments),
    )


def _add_io_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="CSV file to read, or - for stdin")
    parser.add_argument("--delimiter", default=",", help="Field delimiter (default: ,)")
    parser.add_argument("--header", action="store_true", help="First row holds column names")
    parser.add_argument("--id-column", help="Header name of the row identifier column")
    parser.add_argument(
        "--transpose", action="store_true", help="Rows are dimensions and columns are samples"
    )
    parser.add_argument(
        "--format", choices=["csv", "json", "xlsx"], default="csv", help="Output format"
    )
    parser.add_argument("--output", help="Output path (default: standard output)")
    parser.add_argument(
        "--eps-diag",
        type=float,
        default=EPS_DIAG,
        help=f"Relative tolerance for rejecting constant rows (default: {EPS_DIAG})",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = _ArgumentParser(
        prog="corrsphere",
        description="Correlation distance, hypersphere barycenters and correlation k-means",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  corrsphere standardize --input data.csv            Standardized rows as CSV
  corrsphere distmat --input data.csv --header --id-column id
  corrsphere center --input data.csv --format json   Barycenter as JSON
  corrsphere cluster --input data.csv --k 3 --seed 7

Exit codes:
  0 success, 1 usage error, 2 data error, 3 numerical failure
        """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")
    parser.add_argument("--log-file", help="Also write the log to this file")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    standardize_parser = subparsers.add_parser("standardize", help="Standardize rows")
    _add_io_arguments(standardize_parser)
    standardize_parser.add_argument(
        "--canonical", action="store_true", help="Flip signs so the first component is positive"
    )
    standardize_parser.set_defaults(func=cmd_standardize)

    distmat_parser = subparsers.add_parser("distmat", help="Pairwise distance matrix")
    _add_io_arguments(distmat_parser)
    distmat_parser.set_defaults(func=cmd_distmat)

    center_parser = subparsers.add_parser("center", help="Barycenter of all rows")
    _add_io_arguments(center_parser)
    center_parser.set_defaults(func=cmd_center)

    cluster_parser = subparsers.add_parser("cluster", help="Correlation k-means")
    _add_io_arguments(cluster_parser)
    cluster_parser.add_argument("--k", type=int, required=True, help="Number of clusters")
    cluster_parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed")
    cluster_parser.add_argument(
        "--max-iters", type=int, default=DEFAULT_MAX_ITERS, help="Iteration budget"
    )
    cluster_parser.add_argument(
        "--tol", type=float, default=DEFAULT_TOL, help="Minimum inertia improvement"
    )
    cluster_parser.add_argument(
        "--init",
        choices=[method.value for method in InitMethod],
        default=InitMethod.FARTHEST.value,
        help="Center initialization",
    )
    cluster_parser.set_defaults(func=cmd_cluster)

    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"corrsphere: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.verbose, args.log_file)

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    if args.format == "xlsx" and args.output in (None, "-"):
        logger.error("--format xlsx requires --output PATH")
        return EXIT_USAGE

    try:
        args.func(args)
    except DataError as e:
        logger.error(f"Data error: {e}")
        return EXIT_DATA
    except NumericalError as e:
        logger.error(f"Numerical failure: {e}")
        return EXIT_NUMERICAL
    except (CorrSphereError, ValueError, OSError) as e:
        logger.error(f"Command failed: {e}")
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    """Main CLI entry point."""
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
