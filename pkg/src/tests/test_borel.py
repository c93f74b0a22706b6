"""
Unit тесты для фактора по соотношениям Серра.

Запуск тестов:
    pytest src/tests/test_borel.py -v
"""

import logging
from fractions import Fraction

import pytest

from src.algebra.borel import BorelQuotient, get_quotient, proportionality
from src.algebra.echelon import EchelonBasis
from src.algebra.freealg import NEGATIVE, POSITIVE, Element, TensorElement, antipode, bracket, multiply
from src.algebra.generators import u_bracket
from src.algebra.group import GroupElement
from src.algebra.params import ParamSpec
from src.exceptions.algebra_exceptions import DegreeBudgetExceeded

logger = logging.getLogger(__name__)


class TestSerrePresentationUnit:
    """
    Unit тесты соотношений Серра.
    """

    @pytest.mark.unit
    def test_rank_one_has_no_relations(self, quotient1: BorelQuotient):
        """
        Тест: при n = 1 идеал нулевой и приведение тождественно.
        """
        assert quotient1.presentation.positive == [], "Rank 1 should have no Serre relations"
        word = Element.word(1, (1, 1, 1))
        assert quotient1.reduce(word) == word, "Reduction should be the identity at n = 1"
        assert quotient1.slice_codimension(POSITIVE, (3,)) == 1, "One normal word per degree at n = 1"
        logger.info("✓ Rank one test passed")

    @pytest.mark.unit
    def test_relations_vanish(self, quotient2: BorelQuotient):
        """
        Тест: каждое соотношение обращается в ноль в факторе.
        """
        presentation = quotient2.presentation
        assert len(presentation.positive) == 2, "B2 has two Serre relations per half"
        for rel in presentation.positive + presentation.negative:
            assert quotient2.is_zero(rel), f"Relation {rel} should vanish"
        logger.info("✓ Relations vanish test passed")

    @pytest.mark.unit
    @pytest.mark.parametrize("degree,expected", [((2, 1), 2), ((1, 2), 3), ((1, 3), 3), ((1, 1), 2)])
    def test_pbw_dimensions(self, quotient2: BorelQuotient, degree, expected):
        """
        Тест числа нормальных слов против разбиений на положительные корни B2.
        """
        for sign in (POSITIVE, NEGATIVE):
            assert quotient2.slice_codimension(sign, degree) == expected, \
                f"{sign} slice {degree} should have {expected} normal words"
        logger.info(f"✓ PBW dimension {degree} test passed")


class TestReductionUnit:
    """
    Unit тесты приведения и пропорциональности.
    """

    @pytest.mark.unit
    def test_reduce_is_idempotent(self, spec2: ParamSpec, quotient2: BorelQuotient):
        """
        Тест: повторное приведение ничего не меняет.
        """
        x1, x2 = Element.letter(2, 1), Element.letter(2, 2)
        a = bracket(spec2, x1, bracket(spec2, x1, x2)) + Element.word(2, (2, 1, 1)).scale(3)
        once = quotient2.reduce(a)
        assert quotient2.reduce(once) == once, "Normal form should be stable"
        assert quotient2.equals(a, once), "Element should equal its normal form"
        logger.info("✓ Idempotence test passed")

    @pytest.mark.unit
    def test_degree_budget(self, spec2: ParamSpec):
        """
        Тест превышения бюджета степени.
        """
        small = BorelQuotient(spec2, max_degree=2)
        with pytest.raises(DegreeBudgetExceeded) as info:
            small.reduce(Element.word(2, (1, 2, 2)))
        assert info.value.budget == 2, "Error should carry the budget"
        logger.info("✓ Degree budget test passed")

    @pytest.mark.unit
    def test_proportionality(self):
        """
        Тест поиска скаляра α с a = α·b.
        """
        b = Element.word(2, (1, 2)) - Element.word(2, (2, 1)).scale(Fraction(1, 3))
        assert proportionality(b.scale(-2), b) == -2, "α should be -2"
        assert proportionality(b + Element.letter(2, 1), b) is None, "Non-multiples give None"
        assert proportionality(Element(), Element()) == 1, "0 ~ 0 with α = 1"
        assert proportionality(Element(), b) is None, "0 is not a multiple of a nonzero element"
        logger.info("✓ Proportionality test passed")

    @pytest.mark.unit
    def test_is_proportional_in_quotient(self, quotient2: BorelQuotient):
        """
        Тест сравнения с точностью до скаляра после приведения.
        """
        rel = quotient2.presentation.positive[0]
        x1 = Element.letter(2, 1)
        assert quotient2.is_proportional(rel, Element()) == 1, "0 ~ 0 with α = 1"
        assert quotient2.is_proportional(rel, x1) is None, "Zero against nonzero gives None"
        assert quotient2.is_proportional(x1, rel) is None, "Nonzero against zero gives None"
        assert quotient2.is_proportional(x1.scale(3) + rel, x1) == 3, "Relation part should vanish before comparing"
        logger.info("✓ Quotient proportionality test passed")

    @pytest.mark.unit
    def test_antipode_image_is_proportional(self, spec2: ParamSpec, quotient2: BorelQuotient):
        """
        Тест: g_1g_2·σ(u[1,2]) ∝ u[3,4] при n = 2.
        """
        image = multiply(spec2, Element.group(GroupElement.g_range(2, 1, 2)), antipode(spec2, u_bracket(spec2, 1, 2)))
        alpha = quotient2.is_proportional(image, u_bracket(spec2, 3, 4))
        assert alpha is not None and alpha != 0, "Antipode image should be a nonzero multiple of u[3,4]"
        logger.info("✓ Antipode image test passed")

    @pytest.mark.unit
    def test_tensor_equals(self, quotient2: BorelQuotient):
        """
        Тест равенства тензоров по ногам в факторе.
        """
        rel = quotient2.presentation.positive[0]
        x1, x2 = Element.letter(2, 1), Element.letter(2, 2)
        assert quotient2.tensor_equals(TensorElement.pure(x1 + rel, x2), TensorElement.pure(x1, x2)), \
            "Relation in a leg should vanish"
        assert not quotient2.tensor_equals(TensorElement.pure(x1, x2), TensorElement.pure(x2, x1)), \
            "Swapped legs differ"
        logger.info("✓ Tensor equality test passed")

    @pytest.mark.unit
    def test_shared_quotient(self, spec2: ParamSpec):
        """
        Тест общего экземпляра на пару (spec, max_degree).
        """
        assert get_quotient(spec2, 10) is get_quotient(spec2, 10), "Quotients should be shared"
        assert get_quotient(spec2, 10) is not get_quotient(spec2, 11), "Budgets give distinct quotients"
        logger.info("✓ Shared quotient test passed")


class TestEchelonUnit:
    """
    Unit тесты приведенного ступенчатого базиса.
    """

    @pytest.mark.unit
    def test_fully_reduced_rows(self):
        """
        Тест: новые ведущие слова вычищаются из прежних строк.
        """
        basis = EchelonBasis()
        assert basis.add({"a": Fraction(1), "b": Fraction(1)}) == "a", "First pivot is the smallest word"
        assert basis.add({"a": Fraction(1), "c": Fraction(2)}) == "b", "Residue starts at b"
        assert basis.rows["a"] == {"a": 1, "c": 2}, "Pivot b should be eliminated from row a"
        assert basis.rows["b"] == {"b": 1, "c": -2}, "Row b should be normalized"
        logger.info("✓ Fully reduced rows test passed")

    @pytest.mark.unit
    def test_dependent_vectors(self):
        """
        Тест зависимых векторов и нормальной формы.
        """
        basis = EchelonBasis()
        added = basis.extend([{"a": Fraction(1), "c": Fraction(2)}, {"a": Fraction(2), "c": Fraction(4)}])
        assert added == 1 and len(basis) == 1, "Proportional vector should not be added"
        assert basis.reduce({"a": Fraction(3), "c": Fraction(6)}) == {}, "Span member reduces to zero"
        assert basis.reduce({"c": Fraction(1)}) == {"c": 1}, "Non-pivot words stay"
        logger.info("✓ Dependent vectors test passed")
