"""
Service layer: turns polynomial text into reports, runs batches, and keeps
the optional ledger of classification runs.
"""

import logging
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from sqlalchemy.orm import Session

from . import __version__
from .coeff import parse_field
from .decide import Classification, ProblemInstance, classify
from .errors import (
    AlgebraError,
    AllZeroGenerators,
    DegenerateImage,
    DivisionByZero,
    FieldSpecError,
    NotPrime,
    OutOfRange,
    PolySyntaxError,
)
from .groebner import groebner_basis, staircase_dimension
from .models import ClassificationRun
from .parse import parse_poly
from .poly import TermOrder, substitute_diagonal
from .reports import (
    BasisReport,
    ClassifyReport,
    DivDiffReport,
    ErrorReport,
    Report,
    RunConfig,
)
from .utils.formatting import format_basis, format_poly

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

_USAGE_ERRORS = (PolySyntaxError, DivisionByZero, FieldSpecError, NotPrime, OutOfRange)


def build_instance(cfg: RunConfig, texts: Sequence[str]) -> ProblemInstance:
    """Parse every polynomial of one instance over the configured field."""
    field = parse_field(cfg.field)
    polys = [parse_poly(text, field, cfg.max_degree) for text in texts]
    return ProblemInstance(tuple(polys), field, TermOrder(cfg.order))


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def classify_texts(cfg: RunConfig, texts: Sequence[str]) -> ClassifyReport:
    """Classify one parametrization given as polynomial text."""
    start = time.perf_counter()
    inst = build_instance(cfg, texts)
    logger.info("Classifying %d polynomials over %s", len(inst.polys), inst.field)
    verdict = classify(inst)
    elements = list(verdict.basis.elements)
    return ClassifyReport(
        classification=verdict.classification,
        basis_monic=format_basis(elements, "monic", inst.order),
        basis_primitive=format_basis(elements, "primitive", inst.order),
        staircase="infinite" if verdict.staircase is None else verdict.staircase,
        am_check=str(verdict.am_check) if verdict.am_check is not None else None,
        inputs=[format_poly(f) for f in inst.polys],
        order=cfg.order,
        field=inst.field.name,
        reasons=list(verdict.reason_codes),
        divided_differences=[format_poly(g, order=inst.order) for g in verdict.divided_differences],
        elapsed_ms=_elapsed_ms(start),
        version=__version__,
    )


def basis_texts(cfg: RunConfig, texts: Sequence[str]) -> BasisReport:
    """Divided differences and the reduced basis of the ideal they generate."""
    start = time.perf_counter()
    inst = build_instance(cfg, texts)
    gs = inst.divided_differences()
    basis = groebner_basis(gs, inst.order)
    staircase = staircase_dimension(basis)
    elements = list(basis.elements)
    return BasisReport(
        inputs=[format_poly(f) for f in inst.polys],
        field=inst.field.name,
        order=cfg.order,
        divided_differences=[format_poly(g, order=inst.order) for g in gs],
        basis_monic=format_basis(elements, "monic", inst.order),
        basis_primitive=format_basis(elements, "primitive", inst.order),
        staircase="infinite" if staircase is None else staircase,
        elapsed_ms=_elapsed_ms(start),
        version=__version__,
    )


def divdiff_texts(cfg: RunConfig, texts: Sequence[str]) -> DivDiffReport:
    """Each g_i(s, t) together with the diagonal check g_i(s, s) = f_i'(s)."""
    start = time.perf_counter()
    inst = build_instance(cfg, texts)
    order = TermOrder(cfg.order)
    gs = inst.divided_differences()
    derivatives = [f.derivative() for f in inst.polys]
    diagonals = [substitute_diagonal(g) for g in gs]
    return DivDiffReport(
        inputs=[format_poly(f) for f in inst.polys],
        field=inst.field.name,
        divided_differences=[format_poly(g, order=order) for g in gs],
        derivatives=[format_poly(d, var="s") for d in derivatives],
        diagonals=[format_poly(d, var="s") for d in diagonals],
        diagonal_ok=[d == e for d, e in zip(diagonals, derivatives, strict=True)],
        elapsed_ms=_elapsed_ms(start),
        version=__version__,
    )


_HANDLERS = {"classify": classify_texts, "gb": basis_texts, "divdiff": divdiff_texts}


def run_stanza(cfg: RunConfig, texts: Sequence[str]) -> tuple[int, Report]:
    """Run one instance and map library errors to exit codes."""
    try:
        return EXIT_OK, _HANDLERS[cfg.subcommand](cfg, texts)
    except _USAGE_ERRORS as e:
        logger.warning("Rejected input %s: %s", list(texts), e)
        return EXIT_USAGE, ErrorReport(inputs=list(texts), error=str(e), exit_code=EXIT_USAGE)
    except (DegenerateImage, AllZeroGenerators) as e:
        logger.warning("Degenerate instance %s: %s", list(texts), e)
        return EXIT_DEGENERATE, ErrorReport(
            inputs=list(texts), error="degenerate image (point)", exit_code=EXIT_DEGENERATE
        )
    except AlgebraError as e:
        logger.warning("Failed instance %s: %s", list(texts), e)
        return EXIT_USAGE, ErrorReport(inputs=list(texts), error=str(e), exit_code=EXIT_USAGE)


def read_stanzas(path: Path) -> list[tuple[int, tuple[str, ...]]]:
    """
    Read a batch file: one instance per line, polynomials separated by ';'.

    '#' starts a comment; blank lines are skipped. Returns (line number,
    polynomial texts) pairs.
    """
    stanzas = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        stanzas.append((lineno, tuple(part.strip() for part in content.split(";"))))
    return stanzas


def run_batch(
    cfg: RunConfig, stanzas: Sequence[tuple[str, ...]]
) -> list[tuple[int, Report]]:
    """Run every stanza; results come back in input order."""
    if cfg.jobs > 1 and len(stanzas) > 1:
        logger.info("Running %d stanzas on %d workers", len(stanzas), cfg.jobs)
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(run_stanza, [cfg] * len(stanzas), stanzas))
    return [run_stanza(cfg, texts) for texts in stanzas]


class LedgerService:
    """Stores and queries recorded classification runs."""

    def __init__(self, db_session: Session):
        self.db = db_session

    def record_report(self, report: ClassifyReport) -> ClassificationRun:
        """Persist one classification report."""
        run = ClassificationRun(
            created_at=int(time.time()),
            field=report.field,
            term_order=report.order,
            inputs="; ".join(report.inputs),
            classification=str(report.classification),
            staircase=report.staircase if isinstance(report.staircase, int) else None,
            am_check=report.am_check,
            reasons=",".join(report.reasons),
            basis_size=len(report.basis_monic),
            elapsed_ms=report.elapsed_ms,
        )
        self.db.add(run)
        self.db.commit()
        self.db.refresh(run)
        return run

    def record_reports(self, reports: Iterable[Report]) -> int:
        """Persist every classification report in ``reports``; returns how many."""
        count = 0
        for report in reports:
            if isinstance(report, ClassifyReport):
                self.record_report(report)
                count += 1
        return count

    def list_runs(
        self,
        classification_filter: str | None = None,
        field_filter: str | None = None,
        limit: int = 15,
        offset: int = 0,
    ) -> list[ClassificationRun]:
        """List runs, newest first, with optional classification/field filtering."""
        if classification_filter and classification_filter not in set(Classification):
            msg = (
                f"Invalid classification '{classification_filter}'. "
                f"Valid classifications: {', '.join(Classification)}"
            )
            raise ValueError(msg)

        query = self.db.query(ClassificationRun)
        if classification_filter:
            query = query.filter(ClassificationRun.classification == classification_filter)
        if field_filter:
            query = query.filter(ClassificationRun.field == field_filter)
        return (
            query.order_by(ClassificationRun.id.desc()).offset(offset).limit(limit).all()
        )

    def get_run_count(self, classification_filter: str | None = None) -> int:
        query = self.db.query(ClassificationRun)
        if classification_filter:
            query = query.filter(ClassificationRun.classification == classification_filter)
        return query.count()

    def get_classification_stats(self) -> dict[str, int]:
        """Count recorded runs per classification."""
        stats: dict[str, int] = {}
        for (classification,) in self.db.query(ClassificationRun.classification).all():
            stats[classification] = stats.get(classification, 0) + 1
        return stats

    def export_runs_csv(self) -> str:
        """Export every recorded run to CSV format."""
        runs = self.db.query(ClassificationRun).order_by(ClassificationRun.id).all()

        csv_lines = ["Field,Order,Inputs,Classification,Staircase,AM Check,Created At"]
        for run in runs:
            staircase = "infinite" if run.staircase is None else str(run.staircase)
            csv_lines.append(
                f"{run.field},{run.term_order},\"{run.inputs}\",{run.classification},"
                f"{staircase},{run.am_check or ''},{run.created_at}"
            )
        return "\n".join(csv_lines)
