"""
Decision procedures for polynomial parametrizations t -> (f_1(t), ..., f_n(t)).

A single reduced Gröbner basis of the ideal of divided differences
<g_1, ..., g_n> answers both questions: the parametrization is birational
onto its image iff the ideal is zero-dimensional, and an isomorphism onto
its image (over the algebraic closure) iff the basis is {1}.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, format_spec: str) -> str:
            return str(self.value).__format__(format_spec)

from .coeff import Field
from .errors import (
    ConstantInput,
    DegenerateImage,
    FieldMismatch,
    PreconditionFailed,
    WrongArity,
)
from .groebner import GroebnerBasis, groebner_basis, staircase_dimension
from .poly import DEGREVLEX, BiPoly, TermOrder, UniPoly, divided_difference

logger = logging.getLogger(__name__)


class Guard(StrEnum):
    PASS = "pass"
    DEGENERATE_IMAGE = "degenerate_image"
    INSEPARABLE = "inseparable"


class Classification(StrEnum):
    NOT_BIRATIONAL = "NotBirational"
    BIRATIONAL_NOT_ISOMORPHISM = "BirationalNotIsomorphism"
    ISOMORPHISM = "Isomorphism"

    @property
    def label(self) -> str:
        return {
            Classification.NOT_BIRATIONAL: "NOT BIRATIONAL",
            Classification.BIRATIONAL_NOT_ISOMORPHISM: "BIRATIONAL, NOT ISOMORPHISM",
            Classification.ISOMORPHISM: "ISOMORPHISM",
        }[self]


class AMCheck(StrEnum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class ProblemInstance:
    """The components f_1, ..., f_n of a parametrization over one field."""

    polys: tuple[UniPoly, ...]
    field: Field
    order: TermOrder = DEGREVLEX

    def __post_init__(self) -> None:
        object.__setattr__(self, "polys", tuple(self.polys))
        if not self.polys:
            msg = "A parametrization needs at least one polynomial"
            raise ValueError(msg)
        for f in self.polys:
            if f.field != self.field:
                msg = f"Polynomial over {f.field} in an instance over {self.field}"
                raise FieldMismatch(msg)

    @classmethod
    def of(cls, polys: Sequence[UniPoly], order: TermOrder = DEGREVLEX) -> "ProblemInstance":
        if not polys:
            msg = "A parametrization needs at least one polynomial"
            raise ValueError(msg)
        return cls(tuple(polys), polys[0].field, order)

    def divided_differences(self) -> tuple[BiPoly, ...]:
        return tuple(divided_difference(f) for f in self.polys)


@dataclass(frozen=True)
class Verdict:
    classification: Classification
    basis: GroebnerBasis
    staircase: int | None
    am_check: AMCheck | None
    reason_codes: tuple[str, ...]
    divided_differences: tuple[BiPoly, ...] = ()

    @property
    def is_birational(self) -> bool:
        return self.classification != Classification.NOT_BIRATIONAL

    @property
    def is_isomorphism(self) -> bool:
        return self.classification == Classification.ISOMORPHISM


def check_preconditions(inst: ProblemInstance) -> Guard:
    """PASS when some f_i' is nonzero.

    All f_i constant means the image is a point; nonconstant input with
    every derivative zero can only happen in characteristic p, with every
    f_i in k[t^p].
    """
    if all(f.is_constant for f in inst.polys):
        return Guard.DEGENERATE_IMAGE
    if all(f.derivative().is_zero for f in inst.polys):
        return Guard.INSEPARABLE
    return Guard.PASS


def _require_pass(inst: ProblemInstance) -> None:
    guard = check_preconditions(inst)
    if guard != Guard.PASS:
        msg = f"Instance does not pass the derivative guard: {guard}"
        raise PreconditionFailed(msg)


def reduced_basis(inst: ProblemInstance) -> GroebnerBasis:
    """Reduced Gröbner basis of <g_1, ..., g_n> under the instance's order."""
    return groebner_basis(inst.divided_differences(), inst.order)


def is_birational(inst: ProblemInstance) -> tuple[bool, GroebnerBasis]:
    """Decide k(f_1, ..., f_n) = k(t) via zero-dimensionality of the ideal."""
    _require_pass(inst)
    basis = reduced_basis(inst)
    return staircase_dimension(basis) is not None, basis


def is_isomorphism(inst: ProblemInstance) -> tuple[bool, GroebnerBasis]:
    """Decide k[f_1, ..., f_n] = k[t] (over the algebraic closure): basis == {1}."""
    _require_pass(inst)
    basis = reduced_basis(inst)
    return basis.is_unit, basis


def abhyankar_moh_check(*polys: UniPoly) -> AMCheck:
    """Degree condition for k[f_1, f_2] = k[t]: the smaller degree divides the larger.

    A violation certifies k[f_1, f_2] != k[t]; it is inapplicable when the
    characteristic divides gcd(m, n).
    """
    if len(polys) != 2:
        msg = f"Abhyankar-Moh check needs exactly 2 polynomials, got {len(polys)}"
        raise WrongArity(msg)
    f1, f2 = polys
    if f1.is_constant or f2.is_constant:
        msg = "Abhyankar-Moh check needs nonconstant polynomials"
        raise ConstantInput(msg)
    m, n = sorted((f1.degree, f2.degree))  # type: ignore[type-var]
    p = f1.field.characteristic
    if p and math.gcd(m, n) % p == 0:
        return AMCheck.INAPPLICABLE
    return AMCheck.SATISFIED if n % m == 0 else AMCheck.VIOLATED


def derivatives_coprime(inst: ProblemInstance) -> bool:
    """True when f_1', ..., f_n' have no common root over the closure."""
    derivatives = [f.derivative() for f in inst.polys]
    common = reduce(lambda a, b: a.gcd(b), derivatives)
    return not common.is_zero and common.is_constant


def classify(inst: ProblemInstance) -> Verdict:
    """Classify the parametrization from one Gröbner basis computation."""
    guard = check_preconditions(inst)
    if guard == Guard.DEGENERATE_IMAGE:
        msg = "degenerate image (point)"
        raise DegenerateImage(msg)

    gs = inst.divided_differences()
    basis = groebner_basis(gs, inst.order)
    staircase = staircase_dimension(basis)
    reasons: list[str] = []

    if guard == Guard.INSEPARABLE:
        classification = Classification.NOT_BIRATIONAL
        reasons.append("inseparable")
    elif basis.is_unit:
        classification = Classification.ISOMORPHISM
        reasons.extend(["unit_ideal", "over_algebraic_closure"])
    elif staircase is not None:
        classification = Classification.BIRATIONAL_NOT_ISOMORPHISM
        reasons.append("zero_dimensional")
    else:
        classification = Classification.NOT_BIRATIONAL
        reasons.append("positive_dimensional")

    if guard == Guard.PASS:
        reasons.append("unramified" if derivatives_coprime(inst) else "ramified")

    am_check = None
    if len(inst.polys) == 2 and not any(f.is_constant for f in inst.polys):
        am_check = abhyankar_moh_check(*inst.polys)
        reasons.append(f"am_{am_check}")

    logger.debug(
        "Classified %d polynomials over %s: %s (basis size %d)",
        len(inst.polys),
        inst.field,
        classification,
        len(basis),
    )
    return Verdict(
        classification=classification,
        basis=basis,
        staircase=staircase,
        am_check=am_check,
        reason_codes=tuple(reasons),
        divided_differences=gs,
    )
