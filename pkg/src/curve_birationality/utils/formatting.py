"""
Formatting utilities: polynomial rendering and the text form of reports.
"""

from fractions import Fraction
from typing import TYPE_CHECKING, Literal

from ..coeff import Coefficient
from ..poly import DEGREVLEX, BiPoly, Monomial, TermOrder, UniPoly, integer_primitive

if TYPE_CHECKING:
    from ..reports import BasisReport, ClassifyReport, DivDiffReport

Style = Literal["raw", "monic", "primitive"]


def _power(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    return var if exp == 1 else f"{var}^{exp}"


def format_monomial(m: Monomial) -> str:
    """Render s^a t^b as ``t^b*s^a`` (t first, the larger variable)."""
    parts = [p for p in (_power("t", m.exp_t), _power("s", m.exp_s)) if p]
    return "*".join(parts)


def _join_terms(terms: list[tuple[str, Coefficient]]) -> str:
    if not terms:
        return "0"
    pieces = []
    for i, (mono, c) in enumerate(terms):
        negative = isinstance(c, Fraction) and c < 0
        magnitude = -c if negative else c
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if i == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def format_poly(
    p: UniPoly | BiPoly,
    style: Style = "raw",
    order: TermOrder = DEGREVLEX,
    var: str = "t",
) -> str:
    """
    Render a polynomial deterministically, largest term first.

    Args:
        p: Univariate or bivariate polynomial
        style: "raw" prints the coefficients as stored (this is what
            parse_poly reads back), "monic" divides by the leading
            coefficient, "primitive" clears denominators to coprime
            integers with a positive leading coefficient
        order: Term order used to sort a BiPoly
        var: Variable name for a UniPoly

    Returns:
        The polynomial as text, e.g. ``t^2*s + s^3 - 2*s``
    """
    if style == "monic":
        p = p.monic(order) if isinstance(p, BiPoly) else p.monic()
    elif style == "primitive":
        p = integer_primitive(p, order)

    if isinstance(p, UniPoly):
        return _join_terms([(_power(var, e), c) for e, c in p.terms()])
    return _join_terms([(format_monomial(m), c) for m, c in p.sorted_terms(order)])


def format_basis(elements: list[BiPoly], style: Style, order: TermOrder) -> list[str]:
    return [format_poly(g, style, order) for g in elements]


def format_staircase(staircase: int | None) -> str:
    return "infinite" if staircase is None else str(staircase)


def render_classify(report: "ClassifyReport", show_basis: bool = False) -> str:
    """Text form of a classification report."""
    lines = [
        report.label,
        f"field: {report.field}",
        f"order: {report.order}",
        f"inputs: {'; '.join(report.inputs)}",
        f"staircase: {report.staircase}",
    ]
    if report.am_check is not None:
        lines.append(f"abhyankar-moh: {report.am_check}")
    lines.append(f"reasons: {', '.join(report.reasons)}")
    if show_basis:
        lines.append("divided differences:")
        lines.extend(f"  g{i} = {g}" for i, g in enumerate(report.divided_differences, 1))
        lines.append("basis (monic):")
        lines.extend(f"  {h}" for h in report.basis_monic)
        lines.append("basis (integer primitive):")
        lines.extend(f"  {h}" for h in report.basis_primitive)
    return "\n".join(lines)


def render_basis(report: "BasisReport") -> str:
    """Text form of a gb report: the g_i, then the reduced basis."""
    lines = [f"field: {report.field}", f"order: {report.order}"]
    lines.extend(f"g{i} = {g}" for i, g in enumerate(report.divided_differences, 1))
    lines.append(f"reduced basis ({len(report.basis_monic)} elements):")
    for monic, primitive in zip(report.basis_monic, report.basis_primitive, strict=True):
        lines.append(f"  {monic}" if monic == primitive else f"  {monic}    [{primitive}]")
    lines.append(f"staircase: {report.staircase}")
    return "\n".join(lines)


def render_divdiff(report: "DivDiffReport") -> str:
    """Text form of a divdiff report with the diagonal check per input."""
    lines = []
    for i, (f, g, diag, ok) in enumerate(
        zip(report.inputs, report.divided_differences, report.diagonals, report.diagonal_ok, strict=True),
        1,
    ):
        lines.append(f"f{i} = {f}")
        lines.append(f"g{i} = {g}")
        lines.append(f"g{i}(s,s) = {diag}  [{'ok' if ok else 'MISMATCH'}]")
    return "\n".join(lines)


def create_ascii_bar_chart(
    data: dict[str, int], title: str = "Classification Statistics", max_width: int = 40
) -> str:
    """
    Create an ASCII bar chart from a dictionary of counts.

    Args:
        data: Dictionary with labels as keys and counts as values
        title: Title for the chart
        max_width: Maximum width of the bars in characters

    Returns:
        Formatted ASCII bar chart as a string
    """
    if not data:
        return f"{title}\nNo data available"

    # Find the maximum value for scaling
    max_value = max(data.values())
    if max_value == 0:
        return f"{title}\nNo runs recorded"

    # Create the chart
    lines = [title, "=" * len(title), ""]
    label_width = max(len(label) for label in data)

    # Sort by count (descending), then label
    for label, count in sorted(data.items(), key=lambda x: (-x[1], x[0])):
        bar = "█" * int((count / max_value) * max_width)
        lines.append(f"{label:>{label_width}} │{bar:<{max_width}} {count:>3}")

    lines.extend(["", f"Total: {sum(data.values())} runs"])
    return "\n".join(lines)


def truncate_text(text: str, max_length: int = 100) -> str:
    """
    Truncate text to a display width.

    Args:
        text: Text to truncate
        max_length: Maximum length allowed

    Returns:
        Truncated text with ellipsis if needed
    """
    if len(text) <= max_length:
        return text

    return text[: max_length - 3] + "..."
