"""
Tests for the decision procedures and the combined classifier.
"""

import random
from fractions import Fraction

import pytest

from src.curve_birationality.coeff import QQ, make_prime_field
from src.curve_birationality.decide import (
    AMCheck,
    Classification,
    Guard,
    ProblemInstance,
    abhyankar_moh_check,
    check_preconditions,
    classify,
    derivatives_coprime,
    is_birational,
    is_isomorphism,
)
from src.curve_birationality.errors import (
    ConstantInput,
    DegenerateImage,
    FieldMismatch,
    PreconditionFailed,
    WrongArity,
)
from src.curve_birationality.poly import BiPoly, UniPoly, bivariate_gcd
from tests.strategies import random_instance, random_unipoly

F2 = make_prime_field(2)
F101 = make_prime_field(101)


def uni(*coeffs, field=QQ):
    return UniPoly.from_ints(coeffs, field)


def instance(*polys):
    return ProblemInstance.of(list(polys))


CUBE_AND_QUADRATIC = (uni(0, 0, 0, 1), uni(0, 1, 1))
TWISTED_CUBIC = (uni(0, 1), uni(0, 0, 1), uni(0, 0, 0, 1))
OCTIC_AND_QUARTIC = (uni(1, 3, 0, 0, 1, 0, 0, 0, 2), uni(2, 0, -2, 0, 1))
EVEN_TRIPLE = (
    uni(0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
    uni(0, 0, 2, 0, 0, 0, 0, 0, 1),
    uni(1, 0, 0, 0, -1, 0, 1),
)


class TestProblemInstance:
    """Test cases for instance construction."""

    def test_requires_polynomials(self):
        with pytest.raises(ValueError, match="at least one"):
            ProblemInstance((), QQ)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            ProblemInstance((uni(0, 1), uni(0, 1, field=F101)), QQ)

    def test_divided_differences(self):
        gs = instance(*CUBE_AND_QUADRATIC).divided_differences()
        assert len(gs) == 2
        assert gs[1] == BiPoly.from_ints({(0, 1): 1, (1, 0): 1, (0, 0): 1}, QQ)


class TestPreconditions:
    """Test cases for the derivative guard."""

    def test_pass(self):
        assert check_preconditions(instance(*CUBE_AND_QUADRATIC)) == Guard.PASS

    def test_constants(self):
        assert check_preconditions(instance(uni(3), uni(7))) == Guard.DEGENERATE_IMAGE

    def test_inseparable(self):
        inst = instance(uni(0, 0, 1, field=F2), uni(0, 0, 0, 0, 1, field=F2))
        assert check_preconditions(inst) == Guard.INSEPARABLE

    def test_one_nonzero_derivative_is_enough(self):
        assert check_preconditions(instance(uni(5), uni(0, 1))) == Guard.PASS

    def test_decisions_require_pass(self):
        inst = instance(uni(0, 0, 1, field=F2))
        with pytest.raises(PreconditionFailed):
            is_birational(inst)
        with pytest.raises(PreconditionFailed):
            is_isomorphism(inst)


class TestDecisions:
    """Test cases for the birationality and isomorphism tests."""

    def test_birational_not_isomorphism(self):
        inst = instance(*CUBE_AND_QUADRATIC)
        assert is_birational(inst)[0]
        assert not is_isomorphism(inst)[0]

    def test_shared_factor_not_birational(self):
        birational, basis = is_birational(instance(*EVEN_TRIPLE))
        assert not birational
        assert basis.elements == (BiPoly.from_ints({(0, 1): 1, (1, 0): 1}, QQ),)

    def test_identity(self):
        assert is_birational(instance(uni(0, 1)))[0]
        assert is_isomorphism(instance(uni(0, 1)))[0]

    def test_isomorphism(self):
        assert is_isomorphism(instance(*TWISTED_CUBIC))[0]
        assert not is_isomorphism(instance(*OCTIC_AND_QUARTIC))[0]

    def test_single_square_is_not_birational(self):
        birational, basis = is_birational(instance(uni(0, 0, 1)))
        assert not birational
        assert basis.elements == (BiPoly.from_ints({(0, 1): 1, (1, 0): 1}, QQ),)


class TestAbhyankarMoh:
    """Test cases for the degree pre-check."""

    def test_violated(self):
        assert abhyankar_moh_check(*CUBE_AND_QUADRATIC) == AMCheck.VIOLATED

    def test_satisfied(self):
        assert abhyankar_moh_check(*OCTIC_AND_QUARTIC) == AMCheck.SATISFIED
        assert abhyankar_moh_check(uni(0, 1), uni(0, 0, 0, 0, 0, 1)) == AMCheck.SATISFIED

    def test_inapplicable_in_characteristic_p(self):
        f1 = uni(0, 0, 1, field=F2)
        f2 = uni(0, 1, 0, 0, 1, field=F2)
        assert abhyankar_moh_check(f1, f2) == AMCheck.INAPPLICABLE

    def test_wrong_arity(self):
        with pytest.raises(WrongArity):
            abhyankar_moh_check(*TWISTED_CUBIC)

    def test_constant_input(self):
        with pytest.raises(ConstantInput):
            abhyankar_moh_check(uni(4), uni(0, 1))


class TestClassify:
    """Test cases for the combined classifier."""

    def test_two_point_example(self):
        verdict = classify(instance(*CUBE_AND_QUADRATIC))
        assert verdict.classification == Classification.BIRATIONAL_NOT_ISOMORPHISM
        assert verdict.staircase == 2
        assert verdict.am_check == AMCheck.VIOLATED
        assert verdict.reason_codes == ("zero_dimensional", "unramified", "am_violated")
        assert verdict.is_birational
        assert not verdict.is_isomorphism

    def test_twisted_cubic(self):
        verdict = classify(instance(*TWISTED_CUBIC))
        assert verdict.classification == Classification.ISOMORPHISM
        assert verdict.basis.is_unit
        assert verdict.staircase == 0
        assert verdict.am_check is None
        assert verdict.reason_codes == ("unit_ideal", "over_algebraic_closure", "unramified")

    def test_octic_and_quartic(self):
        verdict = classify(instance(*OCTIC_AND_QUARTIC))
        assert verdict.classification == Classification.BIRATIONAL_NOT_ISOMORPHISM
        assert verdict.staircase == 10
        assert len(verdict.basis) == 3
        assert not verdict.basis.is_unit
        assert verdict.am_check == AMCheck.SATISFIED

    def test_even_triple(self):
        verdict = classify(instance(*EVEN_TRIPLE))
        assert verdict.classification == Classification.NOT_BIRATIONAL
        assert verdict.staircase is None
        assert verdict.reason_codes == ("positive_dimensional", "ramified")

    def test_degenerate(self):
        with pytest.raises(DegenerateImage, match="degenerate image"):
            classify(instance(uni(5), uni(7)))

    def test_inseparable(self):
        verdict = classify(
            instance(uni(0, 0, 1, field=F2), uni(0, 0, 0, 0, 1, field=F2))
        )
        assert verdict.classification == Classification.NOT_BIRATIONAL
        assert verdict.reason_codes == ("inseparable", "am_inapplicable")

    def test_cusp_is_ramified(self):
        """t^2, t^3: birational onto the cusp, but both derivatives vanish at 0."""
        verdict = classify(instance(uni(0, 0, 1), uni(0, 0, 0, 1)))
        assert verdict.classification == Classification.BIRATIONAL_NOT_ISOMORPHISM
        assert "ramified" in verdict.reason_codes
        assert not derivatives_coprime(instance(uni(0, 0, 1), uni(0, 0, 0, 1)))

    def test_labels(self):
        assert Classification.ISOMORPHISM.label == "ISOMORPHISM"
        assert Classification.BIRATIONAL_NOT_ISOMORPHISM.label == "BIRATIONAL, NOT ISOMORPHISM"
        assert Classification.NOT_BIRATIONAL.label == "NOT BIRATIONAL"


class TestFamilies:
    """Algebraic families with known classifications."""

    def test_composites_are_not_birational(self):
        """f_i = h_i(u(t)) with deg u = 2 never generates k(t)."""
        rng = random.Random(42)
        for _ in range(100):
            u = random_unipoly(rng, QQ, 2, min_degree=2)
            polys = [
                random_unipoly(rng, QQ, 3, min_degree=1).compose(u)
                for _ in range(rng.randint(1, 3))
            ]
            assert classify(instance(*polys)).classification == Classification.NOT_BIRATIONAL

    def test_degree_one_component_gives_isomorphism(self):
        rng = random.Random(43)
        for _ in range(100):
            polys = random_instance(rng, QQ, 3, 6)
            polys.insert(rng.randrange(len(polys) + 1), random_unipoly(rng, QQ, 1, min_degree=1))
            assert classify(instance(*polys)).classification == Classification.ISOMORPHISM

    def test_affine_reparametrization_invariance(self):
        rng = random.Random(44)
        for _ in range(100):
            polys = random_instance(rng, QQ, 3, 4)
            a = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
            b = Fraction(rng.randint(-3, 3))
            substitution = UniPoly({0: b, 1: a}, QQ)
            moved = [f.compose(substitution) for f in polys]
            assert classify(instance(*moved)).classification == classify(
                instance(*polys)
            ).classification

    def test_abhyankar_moh_consistency(self):
        """A violated degree condition never comes with an isomorphism verdict."""
        rng = random.Random(45)
        violated = 0
        for _ in range(100):
            f1 = random_unipoly(rng, F101, 6, min_degree=1)
            f2 = random_unipoly(rng, F101, 6, min_degree=1)
            verdict = classify(ProblemInstance((f1, f2), F101))
            if verdict.am_check == AMCheck.VIOLATED:
                violated += 1
                assert verdict.classification != Classification.ISOMORPHISM
        assert violated > 0

    def test_oracle_agreement(self):
        rng = random.Random(46)
        for _ in range(100):
            inst = ProblemInstance(tuple(random_instance(rng, F101, 3, 6)), F101)
            birational, _ = is_birational(inst)
            assert birational == bivariate_gcd(inst.divided_differences()).is_constant
            if is_isomorphism(inst)[0]:
                assert birational
