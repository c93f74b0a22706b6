"""
Unit тесты для параметров квантования и характеров.

Запуск тестов:
    pytest src/tests/test_params.py -v
"""

import logging
from fractions import Fraction

import pytest

from src.algebra.group import GroupElement, fold, psi
from src.algebra.params import (
    Degree,
    ParamSpec,
    char_value,
    chi,
    check_constraints,
    compare_degrees,
    make_spec,
    pform,
    spec_from_matrix,
)
from src.exceptions.algebra_exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class TestMakeSpecUnit:
    """
    Unit тесты построения ParamSpec.
    """

    @pytest.mark.unit
    def test_diagonal_and_products(self, spec2: ParamSpec):
        """
        Тест диагонали и произведений p_ij p_ji.
        """
        q = spec2.q
        assert spec2.pij(1, 1) == q ** 2, "p_11 should be q^2"
        assert spec2.pij(2, 2) == q, "p_nn should be q"
        assert spec2.pij(1, 2) == 3, "Free entry should be kept"
        assert spec2.pij(1, 2) * spec2.pij(2, 1) == q ** -2, "Adjacent product should be q^-2"
        assert check_constraints(spec2) == [], "Generated spec should satisfy all constraints"
        logger.info("✓ Diagonal and products test passed")

    @pytest.mark.unit
    def test_distant_entries(self, spec3: ParamSpec):
        """
        Тест несоседних пар при n = 3.
        """
        assert spec3.pij(1, 3) * spec3.pij(3, 1) == 1, "Distant product should be 1"
        assert check_constraints(spec3) == [], "Rank 3 spec should satisfy all constraints"
        logger.info("✓ Distant entries test passed")

    @pytest.mark.unit
    def test_seed_is_deterministic(self):
        """
        Тест детерминированности по seed.
        """
        assert make_spec(3, 2, seed=5) == make_spec(3, 2, seed=5), "Same seed should give the same spec"
        logger.info("✓ Seed determinism test passed")

    @pytest.mark.unit
    @pytest.mark.parametrize("q", [0, 1, -1])
    def test_forbidden_q(self, q):
        """
        Тест запрещенных значений q.
        """
        with pytest.raises(InvalidParameterError):
            make_spec(2, q)
        logger.info(f"✓ Forbidden q={q} test passed")

    @pytest.mark.unit
    def test_free_entry_below_diagonal(self):
        """
        Тест свободного элемента под диагональю.
        """
        with pytest.raises(InvalidParameterError):
            make_spec(2, 2, free={(2, 1): 3})
        logger.info("✓ Free entry position test passed")

    @pytest.mark.unit
    def test_matrix_round_trip(self, spec2: ParamSpec):
        """
        Тест восстановления из явной матрицы.
        """
        matrix = [[spec2.pij(i, j) for j in (1, 2)] for i in (1, 2)]
        assert spec_from_matrix(2, spec2.q, matrix) == spec2, "Matrix should rebuild the same spec"

        matrix[1][0] = Fraction(1)
        with pytest.raises(InvalidParameterError):
            spec_from_matrix(2, spec2.q, matrix)
        logger.info("✓ Matrix round trip test passed")


class TestCharactersUnit:
    """
    Unit тесты характеров и формы p(·,·).
    """

    @pytest.mark.unit
    def test_char_value_on_generators(self, spec2: ParamSpec):
        """
        Тест χ^{x_i}(g_j) = p_ij и χ^{x_i}(f_j) = p_ji.
        """
        assert char_value(spec2, (1, 0), GroupElement.g_i(2, 2)) == spec2.pij(1, 2), "χ^{x1}(g2) = p12"
        assert char_value(spec2, (1, 0), GroupElement.f_i(2, 2)) == spec2.pij(2, 1), "χ^{x1}(f2) = p21"
        assert char_value(spec2, (-1, 0), GroupElement.g_i(2, 2)) == 1 / spec2.pij(1, 2), \
            "Negative weight should invert the character"
        logger.info("✓ Character on generators test passed")

    @pytest.mark.unit
    def test_pform(self, spec2: ParamSpec):
        """
        Тест p(x1, x2) = p12 и p(x1x2, x1x2).
        """
        x1 = Degree.of_words(2, (1,))
        x2 = Degree.of_words(2, (2,))
        assert pform(spec2, x1, x2) == spec2.pij(1, 2), "p(x1, x2) should be p12"
        both = x1 + x2
        expected = spec2.pij(1, 1) * spec2.pij(1, 2) * spec2.pij(2, 1) * spec2.pij(2, 2)
        assert pform(spec2, both, both) == expected, "p(x1x2, x1x2) should multiply all entries"
        logger.info("✓ Bimultiplicative form test passed")

    @pytest.mark.unit
    def test_chi_of_word_degrees(self, spec2: ParamSpec):
        """
        Тест χ на степенях слов при p = [[4, 3], [1/12, 2]].
        """
        x1 = Degree.of_words(2, (1,))
        x1_neg = Degree.of_words(2, neg_word=(1,))
        assert chi(spec2, x1, GroupElement.g_i(2, 2)) == 3, "χ^{x1}(g2) should be p12 = 3"
        assert chi(spec2, x1_neg, GroupElement.f_i(2, 2)) == 12, "χ^{x1-}(f2) should be 1/p21 = 12"

        x1x2 = Degree.of_words(2, (1, 2))
        expected = spec2.pij(1, 1) * spec2.pij(2, 1) * spec2.pij(1, 1) * spec2.pij(1, 2)
        assert chi(spec2, x1x2, GroupElement.h_i(2, 1)) == expected == 4, "χ^{x1x2}(g1f1) is bimultiplicative"
        logger.info("✓ Character of word degrees test passed")

    @pytest.mark.unit
    def test_chi_negative_letter_is_inverse(self, spec2: ParamSpec):
        """
        Тест χ^{x_i^-} = (χ^{x_i})^{-1} на образующих H.
        """
        for i in (1, 2):
            pos = Degree.of_words(2, (i,))
            neg = Degree.of_words(2, neg_word=(i,))
            for j in (1, 2):
                for h in (GroupElement.g_i(2, j), GroupElement.f_i(2, j), GroupElement.h_i(2, j, -1)):
                    assert chi(spec2, pos, h) * chi(spec2, neg, h) == 1, \
                        f"χ^{{x{i}-}} is not inverse to χ^{{x{i}}} on {h}"
        logger.info("✓ Negative character test passed")

    @pytest.mark.unit
    def test_degree_order(self):
        """
        Тест порядка x_1 > x_2 > x_1^- > x_2^-.
        """
        x1 = Degree.of_words(2, (1,))
        x2 = Degree.of_words(2, (2,))
        x1_neg = Degree.of_words(2, (), (1,))
        assert compare_degrees(x1, x2) == 1, "x1 should be greater than x2"
        assert compare_degrees(x2, x1_neg) == 1, "Positive letters should outrank negative ones"
        assert compare_degrees(x1, x1) == 0, "Equal degrees should compare as 0"
        assert Degree.of_words(2, (1, 1), (2,)).folded == (2, -1), "Folded degree should subtract"
        logger.info("✓ Degree order test passed")

    @pytest.mark.unit
    def test_fold_and_psi(self):
        """
        Тест склейки индексов ψ(i) = 2n - i + 1.
        """
        assert [fold(2, i) for i in range(1, 5)] == [1, 2, 2, 1], "Letters should fold at n"
        assert psi(2, 1) == 4 and psi(2, 4) == 1, "ψ should be an involution on 1..2n"
        logger.info("✓ Fold and psi test passed")
