"""
Pydantic models for run configuration and machine-readable reports.
"""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .decide import Classification

Subcommand = Literal["classify", "gb", "divdiff", "history"]
OrderName = Literal["degrevlex", "lex"]
StaircaseValue = int | Literal["infinite"]

CLASSIFY_KEYS = (
    "classification",
    "basis_monic",
    "basis_primitive",
    "staircase",
    "am_check",
    "inputs",
    "order",
    "field",
    "reasons",
    "divided_differences",
    "elapsed_ms",
    "version",
)


class RunConfig(BaseModel):
    """One CLI invocation after flags, environment and defaults are merged."""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    field: str = "Q"
    order: OrderName = "degrevlex"
    json_output: bool = False
    show_basis: bool = False
    polys: tuple[str, ...] = ()
    file: Path | None = None
    jobs: int = Field(default=1, ge=1)
    database_url: str | None = None
    max_degree: int = Field(default=4096, ge=1)
    limit: int = Field(default=15, ge=1)

    @model_validator(mode="after")
    def _one_input_source(self) -> "RunConfig":
        if self.subcommand == "history":
            return self
        if bool(self.polys) == (self.file is not None):
            msg = "Give polynomials as arguments or --file, not both and not neither"
            raise ValueError(msg)
        return self


class ReportBase(BaseModel):
    model_config = ConfigDict(frozen=True)


class ClassifyReport(ReportBase):
    classification: Classification
    basis_monic: list[str]
    basis_primitive: list[str]
    staircase: StaircaseValue
    am_check: str | None
    inputs: list[str]
    order: OrderName
    field: str
    reasons: list[str]
    divided_differences: list[str]
    elapsed_ms: float
    version: str

    @property
    def label(self) -> str:
        return self.classification.label


class BasisReport(ReportBase):
    inputs: list[str]
    field: str
    order: OrderName
    divided_differences: list[str]
    basis_monic: list[str]
    basis_primitive: list[str]
    staircase: StaircaseValue
    elapsed_ms: float
    version: str


class DivDiffReport(ReportBase):
    inputs: list[str]
    field: str
    divided_differences: list[str]
    derivatives: list[str]
    diagonals: list[str]
    diagonal_ok: list[bool]
    elapsed_ms: float
    version: str


class ErrorReport(ReportBase):
    inputs: list[str]
    error: str
    exit_code: int


Report = ClassifyReport | BasisReport | DivDiffReport | ErrorReport


class RunRecord(BaseModel):
    """A ledger row as read back for the history subcommand."""

    model_config = ConfigDict(from_attributes=True, frozen=True)

    id: int
    created_at: int
    field: str
    term_order: str
    inputs: str
    classification: str
    staircase: int | None
    am_check: str | None
    reasons: str
    basis_size: int
    elapsed_ms: float
