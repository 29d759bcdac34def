"""
Buchberger's algorithm on k[s, t]: division, S-polynomials, completion
with the coprime and chain criteria, and auto-reduction.
"""

import logging
from bisect import insort
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .coeff import Coefficient, Field
from .errors import AllZeroGenerators, FieldMismatch
from .poly import DEGREVLEX, ONE, BiPoly, Monomial, TermOrder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealSpec:
    """Generators of an ideal of k[s, t] together with the term order to use."""

    generators: tuple[BiPoly, ...]
    order: TermOrder = DEGREVLEX

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        fields = {g.field for g in self.generators}
        if len(fields) > 1:
            msg = f"Ideal generators over different fields: {sorted(map(str, fields))}"
            raise FieldMismatch(msg)

    @property
    def field(self) -> Field | None:
        return self.generators[0].field if self.generators else None


@dataclass(frozen=True)
class GroebnerBasis:
    """A Gröbner basis; when ``reduced`` it is the unique monic reduced one."""

    elements: tuple[BiPoly, ...]
    order: TermOrder = DEGREVLEX
    reduced: bool = False
    stats: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    @property
    def is_unit(self) -> bool:
        """True for the basis {1} of the unit ideal."""
        return len(self.elements) == 1 and self.elements[0].is_constant

    def contains(self, f: BiPoly) -> bool:
        """Ideal membership: f reduces to zero modulo the basis."""
        return normal_form(f, self.elements, self.order)[0].is_zero

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[BiPoly]:
        return iter(self.elements)


def normal_form(
    f: BiPoly, basis: Sequence[BiPoly], order: TermOrder
) -> tuple[BiPoly, list[BiPoly]]:
    """Divide f by an ordered list of polynomials.

    The leading term of what is left is reduced first, by the first basis
    element whose leading monomial divides it; terms nobody divides move to
    the remainder. Returns (remainder, quotients) with
    f = sum(q_i * b_i) + remainder.
    """
    key = order.key
    reducers: list[tuple[Monomial, Coefficient, BiPoly]] = []
    for b in basis:
        if b.field != f.field:
            msg = f"Cannot divide a polynomial over {f.field} by one over {b.field}"
            raise FieldMismatch(msg)
        lm, lc = b.leading_term(order)
        reducers.append((lm, f.field.inv(lc), b))

    p = dict(f.terms)
    remainder: dict[Monomial, Coefficient] = {}
    quotients: list[dict[Monomial, Coefficient]] = [{} for _ in reducers]
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, (lm, inv_lc, b) in enumerate(reducers):
            if lm.exp_s <= m.exp_s and lm.exp_t <= m.exp_t:
                ds, dt = m.exp_s - lm.exp_s, m.exp_t - lm.exp_t
                factor = c * inv_lc
                quotients[idx][Monomial(ds, dt)] = factor
                for bm, bc in b.terms.items():
                    k = Monomial(bm.exp_s + ds, bm.exp_t + dt)
                    v = p.get(k)
                    v = -(factor * bc) if v is None else v - factor * bc
                    if v:
                        p[k] = v
                    else:
                        p.pop(k, None)
                break
        else:
            remainder[m] = c
            del p[m]
    return (
        BiPoly(remainder, f.field),
        [BiPoly(q, f.field) for q in quotients],
    )


def s_polynomial(f: BiPoly, g: BiPoly, order: TermOrder) -> BiPoly:
    """S(f, g) = (L / in(f)) f - (L / in(g)) g with L the lcm of the leading monomials."""
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    lcm = lm_f.lcm(lm_g)
    field_ = f.field
    return f.monomial_mul(lcm.over(lm_f), field_.inv(lc_f)) - g.monomial_mul(
        lcm.over(lm_g), field_.inv(lc_g)
    )


def _unit_basis(field_: Field, order: TermOrder, reduced: bool = False) -> GroebnerBasis:
    return GroebnerBasis((BiPoly.constant(1, field_),), order, reduced=reduced)


def _chain_criterion(
    i: int, j: int, lcm: Monomial, lms: list[Monomial], pairs: set[tuple[int, int]]
) -> bool:
    for k, lm in enumerate(lms):
        if k in (i, j) or not lm.divides(lcm):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def buchberger(ideal: IdealSpec) -> GroebnerBasis:
    """Complete the generators to a Gröbner basis (not yet reduced).

    Pairs are chosen by the normal strategy: smallest lcm degree first, ties
    broken by the term order on the lcm and then by pair index.
    """
    order = ideal.order
    key = order.key
    gens = [g.monic(order) for g in ideal.generators if not g.is_zero]
    if not gens:
        msg = "Ideal has no nonzero generator"
        raise AllZeroGenerators(msg)
    field_ = gens[0].field
    if any(g.is_constant for g in gens):
        logger.debug("Constant generator: unit ideal")
        return _unit_basis(field_, order)

    basis: list[BiPoly] = []
    lms: list[Monomial] = []
    # Reducers for normal_form, kept sorted ascending by leading monomial
    reducers: list[BiPoly] = []
    pairs: set[tuple[int, int]] = set()
    stats = {"pairs": 0, "coprime": 0, "chain": 0, "zero": 0}

    def add(h: BiPoly) -> None:
        k = len(basis)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        pairs.update((i, k) for i in range(k))
        insort(reducers, h, key=lambda g: key(g.leading_monomial(order)))

    def pair_key(pair: tuple[int, int]) -> tuple[int, tuple[int, int], tuple[int, int]]:
        lcm = lms[pair[0]].lcm(lms[pair[1]])
        return lcm.degree, key(lcm), pair

    for g in gens:
        add(g)

    while pairs:
        # Smallest lcm first
        i, j = min(pairs, key=pair_key)
        stats["pairs"] += 1
        lcm = lms[i].lcm(lms[j])
        # Pairs the two criteria prove redundant never reach division
        if lms[i].is_coprime(lms[j]):
            stats["coprime"] += 1
            pairs.remove((i, j))
            continue
        if _chain_criterion(i, j, lcm, lms, pairs):
            stats["chain"] += 1
            pairs.remove((i, j))
            continue
        pairs.remove((i, j))
        r, _ = normal_form(s_polynomial(basis[i], basis[j], order), reducers, order)
        if r.is_zero:
            stats["zero"] += 1
            continue
        # A nonzero constant remainder means the ideal is the whole ring
        if r.is_constant:
            logger.debug("Nonzero constant normal form after %d pairs: unit ideal", stats["pairs"])
            return _unit_basis(field_, order)
        add(r.monic(order))

    logger.debug("Buchberger finished with %d elements, stats %s", len(basis), stats)
    return GroebnerBasis(tuple(basis), order, reduced=False, stats=stats)


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """Turn a Gröbner basis into the unique monic reduced one, sorted ascending."""
    order = basis.order
    key = order.key
    elements = [g for g in basis.elements if not g.is_zero]
    if not elements:
        return GroebnerBasis((), order, reduced=True)
    if any(g.is_constant for g in elements):
        return _unit_basis(elements[0].field, order, reduced=True)

    ordered = sorted(
        (g.monic(order) for g in elements),
        key=lambda g: key(g.leading_monomial(order)),
    )
    minimal: list[BiPoly] = []
    for g in ordered:
        lm = g.leading_monomial(order)
        if not any(h.leading_monomial(order).divides(lm) for h in minimal):
            minimal.append(g)

    reduced = []
    for idx, g in enumerate(minimal):
        r, _ = normal_form(g, minimal[:idx] + minimal[idx + 1 :], order)
        reduced.append(r.monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)))
    return GroebnerBasis(tuple(reduced), order, reduced=True, stats=dict(basis.stats))


def groebner_basis(generators: Iterable[BiPoly], order: TermOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``generators``."""
    return reduce_basis(buchberger(IdealSpec(tuple(generators), order)))


def staircase_dimension(basis: GroebnerBasis) -> int | None:
    """Number of standard monomials, or None when the ideal is not zero-dimensional.

    Zero-dimensional means pure powers s^p and t^q both occur among the
    leading monomials; the unit basis {1} counts as such and gives 0.
    """
    lms = basis.leading_monomials
    if ONE in lms:
        return 0
    s_powers = [m.exp_s for m in lms if m.exp_t == 0]
    t_powers = [m.exp_t for m in lms if m.exp_s == 0]
    if not s_powers or not t_powers:
        return None
    p, q = min(s_powers), min(t_powers)
    return sum(
        1
        for a in range(p)
        for b in range(q)
        if not any(m.divides(Monomial(a, b)) for m in lms)
    )


def is_zero_dimensional(basis: GroebnerBasis) -> bool:
    return staircase_dimension(basis) is not None
