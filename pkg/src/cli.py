"""
Command-line front end.

Commands:
    energy FILE           vertex,spectral,coulson,difference  (+ a "total" row)
    charpoly FILE         ascending coefficients of det(xI - A), then the
                          b-sequence or "not-bipartite"
    verify SUITE          suite,instance,check,subject,observed,reference,status,detail
    sweep-star FILE       n,vertex,energy,lower,upper,limit

Reals are written with 17 significant digits. Summary lines go to standard
error. Exit codes: 0 all checks pass, 1 violations found, 2 usage or input
error.
"""
import argparse
import contextlib
import csv
import logging
import sys
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from src.algebra.charpoly import b_coeffs, char_poly
from src.config import settings
from src.errors import GraphError, UnknownSuiteError, VertexEnergyError
from src.graphs.core import Graph, is_bipartite
from src.graphs.edge_list import read_edge_list
from src.models.schemas import (
    ENERGY_CSV_COLUMNS,
    SUITE_CSV_COLUMNS,
    EnergyRow,
    RunConfig,
    format_real,
)
from src.monitoring.metrics import write_metrics
from src.spectral.coulson import coulson_vertex_energy
from src.spectral.energy import vertex_energies
from src.theorems.successive import star_limit_sweep, star_sweep_rows
from src.theorems.suites import SuiteRunner


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

SWEEP_CSV_COLUMNS = ["n", "vertex", "energy", "lower", "upper", "limit"]
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def _n_list(text: str) -> List[int]:
    """Comma-separated star sizes; the empty string is an empty list."""
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help=f"suite seed (default {settings.seed})")
    common.add_argument("--epsilon", type=float, default=None, help="strictness margin for real comparisons")
    common.add_argument("--quad-tol", type=float, default=None, help="relative tolerance of the Coulson quadrature")
    common.add_argument("--out", type=Path, default=None, help="CSV output file (default: standard output)")
    common.add_argument("--max-tree", type=int, default=None, help="largest random tree order")
    common.add_argument("--max-bip", type=int, default=None, help="largest random bipartite order")
    common.add_argument("--trials", type=int, default=None, help="random instances per suite")
    common.add_argument("--log-level", default=None, type=str.upper,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="logging level on standard error")
    common.add_argument("--metrics-file", default=None, help="write Prometheus metrics to this textfile")

    parser = argparse.ArgumentParser(
        prog="venergy",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", parents=[common], help="spectral and Coulson vertex energies")
    p.add_argument("graph", type=Path, help="edge-list file")

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial and b-sequence")
    p.add_argument("graph", type=Path, help="edge-list file")

    p = sub.add_parser("verify", parents=[common], help="run a seeded verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(SuiteRunner.names())}")

    p = sub.add_parser("sweep-star", parents=[common], help="coalesce growing stars onto a tree vertex")
    p.add_argument("graph", type=Path, help="edge-list file of a tree")
    p.add_argument("--vertex", type=int, default=0, help="tree vertex receiving the star center")
    p.add_argument("--n", dest="n_values", type=_n_list, default=None,
                   help="comma-separated star sizes (default from settings)")
    return parser


@contextlib.contextmanager
def _output(path: Optional[Path]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        yield f


def _writer(stream: TextIO):
    return csv.writer(stream, lineterminator="\n")


# ================== Commands ==================

def cmd_energy(graph: Graph, config: RunConfig) -> int:
    spectral = vertex_energies(graph)
    quadrature = config.quadrature()
    rows = [
        EnergyRow(vertex=i, spectral=float(spectral[i]), coulson=coulson_vertex_energy(graph, i, quadrature))
        for i in range(graph.n)
    ]
    total_spectral = sum(r.spectral for r in rows)
    total_coulson = sum(r.coulson for r in rows)

    with _output(config.output_path) as out:
        w = _writer(out)
        w.writerow(ENERGY_CSV_COLUMNS)
        for row in rows:
            w.writerow(row.as_csv())
        w.writerow(["total", format_real(total_spectral), format_real(total_coulson),
                    format_real(abs(total_spectral - total_coulson))])

    tolerance = max(config.quad_rel_tol, settings.coulson_agreement_tol)
    worst = max((r.difference for r in rows), default=0.0)
    ok = worst <= tolerance
    print(f"ENERGY {'PASS' if ok else 'FAIL'} vertices={graph.n} energy={total_spectral:.12g} "
          f"max_difference={worst:.3g}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VIOLATIONS


def cmd_charpoly(graph: Graph, config: RunConfig) -> int:
    lines = [str(char_poly(graph))]
    lines.append(str(b_coeffs(graph)) if is_bipartite(graph) else "not-bipartite")
    with _output(config.output_path) as out:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(suite: str, config: RunConfig) -> int:
    report = SuiteRunner(config).run(suite)
    with _output(config.output_path) as out:
        w = _writer(out)
        w.writerow(SUITE_CSV_COLUMNS)
        for row in report.rows:
            w.writerow(row.as_csv(report.name))
    print(report.summary_line(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def cmd_sweep_star(graph: Graph, vertex: int, n_values: Sequence[int], config: RunConfig) -> int:
    rows = star_sweep_rows(graph, vertex, n_values)
    report = star_limit_sweep(graph, vertex, n_values, config.epsilon)
    with _output(config.output_path) as out:
        w = _writer(out)
        w.writerow(SWEEP_CSV_COLUMNS)
        for row in rows:
            w.writerow([
                row["n"],
                row["vertex"],
                format_real(row["energy"]),
                format_real(row.get("lower")),
                format_real(row.get("upper")),
                format_real(row.get("limit")),
            ])
    print(f"SWEEP {'PASS' if report.passed else 'FAIL'} checked={report.checked} "
          f"violations={report.violations} indeterminate={report.indeterminate}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


# ================== Entry point ==================

def _dispatch(args: argparse.Namespace, config: RunConfig) -> int:
    if args.command == "verify":
        return cmd_verify(args.suite, config)

    graph = read_edge_list(args.graph)
    logger.info(f"Loaded {graph} from {args.graph}")
    if args.command == "energy":
        return cmd_energy(graph, config)
    if args.command == "charpoly":
        return cmd_charpoly(graph, config)
    n_values = settings.star_sweep_values if args.n_values is None else args.n_values
    return cmd_sweep_star(graph, args.vertex, n_values, config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        config = RunConfig.from_settings(
            seed=args.seed,
            epsilon=args.epsilon,
            quad_rel_tol=args.quad_tol,
            output_path=args.out,
            max_tree=args.max_tree,
            max_bip=args.max_bip,
            trials=args.trials,
        )
    except ValidationError as e:
        print(f"error: invalid options: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        code = _dispatch(args, config)
    except UnknownSuiteError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VertexEnergyError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATIONS

    if write_metrics(args.metrics_file or settings.metrics_textfile):
        logger.info("Metrics written")
    return code
