"""
Seeded random generators shared by the property tests.
"""

import random

from src.curve_birationality.coeff import Field
from src.curve_birationality.poly import UniPoly


def random_unipoly(
    rng: random.Random,
    field: Field,
    max_degree: int,
    min_degree: int = 0,
    bound: int = 5,
) -> UniPoly:
    """Polynomial with integer coefficients in [-bound, bound] and exact degree in range."""
    degree = rng.randint(min_degree, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = 0
    while not field.element(lead):
        lead = rng.randint(-bound, bound)
    return UniPoly.from_ints([*coeffs, lead], field)


def random_instance(
    rng: random.Random,
    field: Field,
    max_n: int,
    max_degree: int,
) -> list[UniPoly]:
    """One to max_n components, the first of which is nonconstant."""
    n = rng.randint(1, max_n)
    polys = [random_unipoly(rng, field, max_degree, min_degree=1)]
    polys.extend(random_unipoly(rng, field, max_degree) for _ in range(n - 1))
    return polys
