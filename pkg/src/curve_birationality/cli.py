"""
Command-line front end: classify parametrizations, print reduced bases,
query divided differences, and browse the ledger of recorded runs.
"""

import argparse
import logging
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from dotenv import load_dotenv
from pydantic import ValidationError

from . import __description__, __version__
from .coeff import parse_field
from .errors import AlgebraError
from .models import create_engine_and_session, init_database
from .reports import (
    BasisReport,
    ClassifyReport,
    DivDiffReport,
    ErrorReport,
    Report,
    RunConfig,
    RunRecord,
)
from .services import (
    EXIT_OK,
    EXIT_USAGE,
    LedgerService,
    read_stanzas,
    run_batch,
    run_stanza,
)
from .utils.formatting import (
    create_ascii_bar_chart,
    render_basis,
    render_classify,
    render_divdiff,
    truncate_text,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _configure_logging() -> None:
    logging.basicConfig(
        level=os.getenv("LOG_LEVEL", "WARNING").upper(),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curve-birationality", description=__description__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Coefficient field: Q or F<p> (default: $CURVE_FIELD or Q)")
    common.add_argument(
        "--order",
        choices=["degrevlex", "lex"],
        help="Term order with s < t (default: $CURVE_ORDER or degrevlex)",
    )
    common.add_argument("--json", action="store_true", dest="json_output", help="Emit JSON")
    common.add_argument("--record", metavar="URL", help="Record runs in this database")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("polys", nargs="*", metavar="POLY", help="Polynomials in t")
    inputs.add_argument("--file", type=Path, help="Batch file: one instance per line, ';' between polynomials")
    inputs.add_argument("--jobs", type=int, help="Worker processes for --file (default: $CURVE_JOBS or 1)")
    inputs.add_argument("--max-degree", type=int, help="Parser degree limit (default: $CURVE_MAX_DEGREE or 4096)")

    sub = parser.add_subparsers(dest="subcommand", required=True)
    classify_parser = sub.add_parser(
        "classify", parents=[common, inputs], help="Decide birationality and isomorphism"
    )
    classify_parser.add_argument(
        "--show-basis", action="store_true", help="Also print the g_i and the reduced basis"
    )
    sub.add_parser("gb", parents=[common, inputs], help="Print the g_i and their reduced Gröbner basis")
    sub.add_parser("divdiff", parents=[common, inputs], help="Print each g_i and the diagonal check")

    history = sub.add_parser("history", parents=[common], help="Browse recorded classification runs")
    history.add_argument("--limit", type=int, default=15, help="Number of runs to list")
    history.add_argument("--classification", help="Only runs with this classification")
    history.add_argument("--stats", action="store_true", help="Bar chart of runs per classification")
    history.add_argument("--csv", action="store_true", help="Export every run as CSV")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge flags, environment and defaults (flag > environment > default)."""
    return RunConfig(
        subcommand=args.subcommand,
        field=args.field or os.getenv("CURVE_FIELD", "Q"),
        order=args.order or os.getenv("CURVE_ORDER", "degrevlex"),
        json_output=args.json_output,
        show_basis=getattr(args, "show_basis", False),
        polys=tuple(getattr(args, "polys", ())),
        file=getattr(args, "file", None),
        jobs=getattr(args, "jobs", None) or int(os.getenv("CURVE_JOBS", "1")),
        database_url=args.record or os.getenv("DATABASE_URL"),
        max_degree=getattr(args, "max_degree", None) or int(os.getenv("CURVE_MAX_DEGREE", "4096")),
        limit=getattr(args, "limit", 15),
    )


def render_report(report: Report, cfg: RunConfig) -> str:
    """Text form of any successful report."""
    if isinstance(report, ClassifyReport):
        return render_classify(report, cfg.show_basis)
    if isinstance(report, BasisReport):
        return render_basis(report)
    if isinstance(report, DivDiffReport):
        return render_divdiff(report)
    msg = f"No text rendering for {type(report).__name__}"
    raise TypeError(msg)


def _emit(report: Report, cfg: RunConfig, indent: int | None) -> None:
    if isinstance(report, ErrorReport):
        print(f"error: {report.error}", file=sys.stderr)
        if cfg.json_output:
            print(report.model_dump_json(indent=indent))
        return
    if cfg.json_output:
        print(report.model_dump_json(indent=indent))
    else:
        print(render_report(report, cfg))


def _record(cfg: RunConfig, reports: Sequence[Report]) -> None:
    if not cfg.database_url:
        return
    engine, SessionLocal = create_engine_and_session(cfg.database_url)
    init_database(engine)
    with SessionLocal() as session:
        count = LedgerService(session).record_reports(reports)
    logger.info("Recorded %d runs in %s", count, cfg.database_url)


def run_single(cfg: RunConfig) -> int:
    """Run the polynomials given on the command line as one instance."""
    code, report = run_stanza(cfg, cfg.polys)
    _emit(report, cfg, indent=2)
    _record(cfg, [report])
    return code


def run_file(cfg: RunConfig) -> int:
    """Batch mode; the exit code is the largest per-stanza code."""
    assert cfg.file is not None
    try:
        stanzas = read_stanzas(cfg.file)
    except (OSError, UnicodeDecodeError) as e:
        print(f"error: cannot read {cfg.file}: {e}", file=sys.stderr)
        return EXIT_USAGE

    results = run_batch(cfg, [texts for _, texts in stanzas])
    exit_code = EXIT_OK
    for index, ((lineno, _), (code, report)) in enumerate(zip(stanzas, results, strict=True)):
        if isinstance(report, ErrorReport):
            print(f"error: line {lineno}: {report.error}", file=sys.stderr)
            if cfg.json_output:
                print(report.model_dump_json())
        elif cfg.json_output:
            print(report.model_dump_json())
        else:
            if index:
                print()
            print(f"# line {lineno}")
            print(render_report(report, cfg))
        exit_code = max(exit_code, code)
    _record(cfg, [report for _, report in results])
    return exit_code


def run_history(cfg: RunConfig, args: argparse.Namespace) -> int:
    """List, summarize or export the ledger."""
    if not cfg.database_url:
        print("error: history needs --record URL or DATABASE_URL", file=sys.stderr)
        return EXIT_USAGE

    engine, SessionLocal = create_engine_and_session(cfg.database_url)
    init_database(engine)
    with SessionLocal() as session:
        ledger = LedgerService(session)
        if args.csv:
            print(ledger.export_runs_csv())
            return EXIT_OK
        if args.stats:
            print(create_ascii_bar_chart(ledger.get_classification_stats()))
            return EXIT_OK
        try:
            runs = ledger.list_runs(args.classification, limit=cfg.limit)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        records = [RunRecord.model_validate(run) for run in runs]

    if not records:
        print("No runs recorded")
    for record in records:
        if cfg.json_output:
            print(record.model_dump_json())
        else:
            staircase = "infinite" if record.staircase is None else record.staircase
            print(
                f"#{record.id} {record.classification} [{record.field}, {record.term_order}] "
                f"{truncate_text(record.inputs, 60)} staircase={staircase}"
            )
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point; returns the process exit code."""
    load_dotenv()
    _configure_logging()
    args = build_parser().parse_args(argv)

    try:
        cfg = config_from_args(args)
        parse_field(cfg.field)
    except ValidationError as e:
        details = "; ".join(err["msg"] for err in e.errors())
        print(f"error: {details}", file=sys.stderr)
        return EXIT_USAGE
    except (AlgebraError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info("Running %s over %s (%s)", cfg.subcommand, cfg.field, cfg.order)
    if cfg.subcommand == "history":
        return run_history(cfg, args)
    if cfg.file is not None:
        return run_file(cfg)
    return run_single(cfg)


if __name__ == "__main__":
    sys.exit(main())
