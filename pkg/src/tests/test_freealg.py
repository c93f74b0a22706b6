"""
Unit тесты для смешанной алгебры: умножение, скобка, антипод, копроизведение.

Запуск тестов:
    pytest src/tests/test_freealg.py -v
"""

import logging

import pytest

from src.algebra.freealg import (
    NEGATIVE,
    Element,
    MixedTerm,
    TensorElement,
    antipode,
    antipode_convolution,
    bracket,
    coproduct,
    counit,
    counit_left,
    counit_right,
    folded_degree,
    format_element,
    multiply,
    multiply_all,
    project_positive,
    substitute_negative,
)
from src.algebra.group import GroupElement
from src.algebra.params import ParamSpec
from src.exceptions.algebra_exceptions import HomogeneityError, ZeroElementError

logger = logging.getLogger(__name__)

N = 2
E = GroupElement.identity(N)


def x(i: int, sign: str = "positive") -> Element:
    return Element.letter(N, i, sign)


class TestMultiplicationUnit:
    """
    Unit тесты правил коммутации.
    """

    @pytest.mark.unit
    def test_letter_past_minus_letter(self, spec2: ParamSpec):
        """
        Тест x_1 x_1^- = p_11 x_1^- x_1 + 1 - h_1.
        """
        h1 = GroupElement.h_i(N, 1)
        expected = Element({
            MixedTerm((1,), E, (1,)): spec2.pij(1, 1),
            MixedTerm((), E, ()): 1,
            MixedTerm((), h1, ()): -1,
        })
        assert multiply(spec2, x(1), x(1, NEGATIVE)) == expected, "Diagonal commutation rule is wrong"
        logger.info("✓ Diagonal commutation test passed")

    @pytest.mark.unit
    def test_distinct_letters(self, spec2: ParamSpec):
        """
        Тест x_1 x_2^- = p_21 x_2^- x_1.
        """
        expected = Element({MixedTerm((2,), E, (1,)): spec2.pij(2, 1)})
        assert multiply(spec2, x(1), x(2, NEGATIVE)) == expected, "Off-diagonal commutation rule is wrong"
        logger.info("✓ Off-diagonal commutation test passed")

    @pytest.mark.unit
    def test_letter_past_group(self, spec2: ParamSpec):
        """
        Тест x_1 g_2 = p_12 g_2 x_1.
        """
        g2 = GroupElement.g_i(N, 2)
        expected = Element({MixedTerm((), g2, (1,)): spec2.pij(1, 2)})
        assert multiply(spec2, x(1), Element.group(g2)) == expected, "Letter and group should commute up to χ"
        logger.info("✓ Group commutation test passed")

    @pytest.mark.unit
    def test_associativity_on_mixed_factors(self, spec2: ParamSpec):
        """
        Тест ассоциативности на смешанных множителях.
        """
        a = x(1) + x(2).scale(3)
        b = multiply(spec2, x(1, NEGATIVE), x(2, NEGATIVE))
        c = Element.group(GroupElement.h_i(N, 1)) - x(1)
        left = multiply(spec2, multiply(spec2, a, b), c)
        right = multiply(spec2, a, multiply(spec2, b, c))
        assert left == right, "Multiplication should be associative"
        assert multiply_all(spec2, a, b, c) == left, "multiply_all should multiply from the left"
        logger.info("✓ Associativity test passed")


class TestBracketUnit:
    """
    Unit тесты косого коммутатора.
    """

    @pytest.mark.unit
    def test_letter_brackets(self, spec2: ParamSpec):
        """
        Тест [x_i, x_j^-] = δ_ij (1 - h_i).
        """
        one_minus_h1 = Element.one(N) - Element.group(GroupElement.h_i(N, 1))
        assert bracket(spec2, x(1), x(1, NEGATIVE)) == one_minus_h1, "[x1, x1^-] should be 1 - h1"
        assert bracket(spec2, x(1), x(2, NEGATIVE)).is_zero(), "[x1, x2^-] should vanish"
        logger.info("✓ Letter brackets test passed")

    @pytest.mark.unit
    def test_bracket_with_zero(self, spec2: ParamSpec):
        """
        Тест скобки с нулем.
        """
        assert bracket(spec2, x(1), Element()).is_zero(), "Bracket with zero should vanish"
        logger.info("✓ Zero bracket test passed")

    @pytest.mark.unit
    def test_inhomogeneous_left_factor(self, spec2: ParamSpec):
        """
        Тест ошибки при неоднородном левом множителе.
        """
        with pytest.raises(HomogeneityError) as info:
            bracket(spec2, x(1) + x(2), x(1))
        assert info.value.side == "left", "Error should name the left side"
        logger.info("✓ Homogeneity error test passed")


class TestHopfUnit:
    """
    Unit тесты антипода, копроизведения и коединицы.
    """

    @pytest.mark.unit
    def test_antipode_of_letter(self, spec2: ParamSpec):
        """
        Тест σ(x_1) = -g_1^{-1} x_1.
        """
        expected = Element({MixedTerm((), GroupElement.g_i(N, 1, -1), (1,)): -1})
        assert antipode(spec2, x(1)) == expected, "Antipode of a letter is wrong"
        logger.info("✓ Antipode of letter test passed")

    @pytest.mark.unit
    def test_coproduct_of_letter(self, spec2: ParamSpec):
        """
        Тест Δ(x_1) = x_1⊗1 + g_1⊗x_1 и аксиом коединицы и антипода на нем.
        """
        one = Element.one(N)
        delta = coproduct(spec2, x(1))
        expected = TensorElement.pure(x(1), one) + TensorElement.pure(Element.group(GroupElement.g_i(N, 1)), x(1))
        assert delta == expected, "Coproduct of a letter is wrong"
        assert counit_left(spec2, delta) == x(1), "(ε⊗id)Δ should be the identity"
        assert counit_right(spec2, delta) == x(1), "(id⊗ε)Δ should be the identity"
        assert antipode_convolution(spec2, delta).is_zero(), "μ(σ⊗id)Δ(x1) should be ε(x1) = 0"
        logger.info("✓ Coproduct of letter test passed")

    @pytest.mark.unit
    def test_counit(self):
        """
        Тест ε: буквы в 0, группа в 1.
        """
        h1 = Element.group(GroupElement.h_i(N, 1))
        assert counit(Element.one(N) - h1 + x(1)) == 0, "ε(1 - h1 + x1) should be 0"
        assert counit(Element.scalar(N, 5) + h1) == 6, "ε(5 + h1) should be 6"
        logger.info("✓ Counit test passed")


class TestProjectionsUnit:
    """
    Unit тесты проекций и степеней.
    """

    @pytest.mark.unit
    def test_substitute_and_project(self, spec2: ParamSpec):
        """
        Тест подстановки x -> x^- и проекции на положительную часть.
        """
        word = Element.word(N, (1, 2))
        assert substitute_negative(word) == Element.word(N, (1, 2), NEGATIVE), "Substitution should keep the order"

        mixed = multiply(spec2, x(1, NEGATIVE), x(2)) + multiply(spec2, Element.group(GroupElement.h_i(N, 1)), x(2))
        assert project_positive(mixed) == x(2), "Projection should drop negative letters and erase the group"
        logger.info("✓ Substitution and projection test passed")

    @pytest.mark.unit
    def test_folded_degree_errors(self):
        """
        Тест ошибок свернутой степени.
        """
        assert folded_degree(Element.word(N, (1, 2, 2))) == (1, 2), "Folded degree counts letters"
        with pytest.raises(HomogeneityError):
            folded_degree(x(1) + x(2))
        with pytest.raises(ZeroElementError):
            folded_degree(Element())
        logger.info("✓ Folded degree test passed")

    @pytest.mark.unit
    def test_format(self):
        """
        Тест текстового представления.
        """
        assert format_element(Element()) == "0", "Zero should print as 0"
        assert format_element(x(1)) == "(1)*x1", "Letter should print with its coefficient"
        assert format_element(x(2, NEGATIVE)) == "(1)*x2-", "Negative letters carry a trailing minus"
        logger.info("✓ Format test passed")
