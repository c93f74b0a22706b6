"""
Unit тесты для элементов u[k,m], Φ^S(k,m) и таблиц σ, μ.

Запуск тестов:
    pytest src/tests/test_generators.py -v
"""

import logging

import pytest

from src.algebra.freealg import NEGATIVE, Element, bracket, substitute_negative
from src.algebra.generators import (
    MU,
    SIGMA,
    coefficient_table,
    folded_interval,
    mirror,
    mu_closed,
    phi,
    phi_or_one,
    sigma_closed,
    sigma_direct,
    tau,
    u_bracket,
    u_minus,
    u_or_one,
)
from src.algebra.params import ParamSpec
from src.exceptions.algebra_exceptions import IndexRangeError

logger = logging.getLogger(__name__)


class TestIntervalElementsUnit:
    """
    Unit тесты u[k,m].
    """

    @pytest.mark.unit
    def test_short_intervals(self, spec2: ParamSpec):
        """
        Тест u[k,k] = x_k и u[1,2] = [x_1, x_2] с ψ-склейкой индексов.
        """
        x1, x2 = Element.letter(2, 1), Element.letter(2, 2)
        assert u_bracket(spec2, 1, 1) == x1, "u[1,1] should be x1"
        assert u_bracket(spec2, 3, 3) == x2, "u[3,3] should be x_{ψ(3)} = x2"
        assert u_bracket(spec2, 4, 4) == x1, "u[4,4] should be x1"
        assert u_bracket(spec2, 1, 2) == bracket(spec2, x1, x2), "u[1,2] should be left normed"
        logger.info("✓ Short intervals test passed")

    @pytest.mark.unit
    def test_negative_and_empty(self, spec2: ParamSpec):
        """
        Тест отрицательной версии и соглашения u[m+1,m] = 1.
        """
        assert u_minus(spec2, 1, 3) == substitute_negative(u_bracket(spec2, 1, 3)), "u^- is the literal substitute"
        assert u_bracket(spec2, 1, 3, NEGATIVE) == u_minus(spec2, 1, 3), "sign argument should match u_minus"
        assert u_or_one(spec2, 3, 2) == Element.one(2), "Empty interval gives 1"
        logger.info("✓ Negative and empty test passed")

    @pytest.mark.unit
    @pytest.mark.parametrize("k,m", [(0, 1), (2, 1), (1, 5)])
    def test_bad_interval(self, spec2: ParamSpec, k, m):
        """
        Тест индексов вне 1 <= k <= m <= 2n.
        """
        with pytest.raises(IndexRangeError):
            u_bracket(spec2, k, m)
        logger.info(f"✓ Bad interval ({k},{m}) test passed")

    @pytest.mark.unit
    def test_folded_interval(self):
        """
        Тест степени [k:m].
        """
        assert folded_interval(2, 1, 4) == (2, 2), "[1:4] covers both letters twice"
        assert folded_interval(2, 2, 3) == (0, 2), "[2:3] is x2 x2"
        logger.info("✓ Folded interval test passed")


class TestPhiUnit:
    """
    Unit тесты Φ^S(k,m).
    """

    @pytest.mark.unit
    def test_empty_set_gives_u(self, spec2: ParamSpec):
        """
        Тест Φ^∅(k,m) = u[k,m] и обрезки S до [k,m).
        """
        assert phi(spec2, 1, 3) == u_bracket(spec2, 1, 3), "Φ with empty S should be u"
        assert phi(spec2, 1, 2, {2, 4}) == u_bracket(spec2, 1, 2), "Points outside [k,m) are ignored"
        assert phi_or_one(spec2, 2, 1) == Element.one(2), "Φ(k,k-1) = 1"
        logger.info("✓ Φ with empty set test passed")

    @pytest.mark.unit
    def test_single_point(self, spec2: ParamSpec):
        """
        Тест Φ^{1}(1,2) = u[1,2] - (1-q^{-2}) τ_1 p(x2,x1)^{-1} x2 x1.
        """
        q = spec2.q
        x1, x2 = Element.letter(2, 1), Element.letter(2, 2)
        correction = Element.word(2, (2, 1)).scale((1 - q ** -2) * tau(spec2, 1) / spec2.pij(2, 1))
        assert phi(spec2, 1, 2, {1}) == bracket(spec2, x1, x2) - correction, "Single point recursion is wrong"
        logger.info("✓ Φ with one point test passed")

    @pytest.mark.unit
    def test_mirror_of_letter(self, spec2: ParamSpec):
        """
        Тест зеркала: x_i -> p_ii^{-1} x_i^-.
        """
        expected = Element.letter(2, 1, NEGATIVE).scale(1 / spec2.pij(1, 1))
        assert mirror(spec2, Element.letter(2, 1)) == expected, "Mirror of x1 is wrong"
        logger.info("✓ Mirror test passed")


class TestCoefficientTablesUnit:
    """
    Unit тесты σ и μ.
    """

    @pytest.mark.unit
    def test_sigma_values(self, spec2: ParamSpec):
        """
        Тест σ_1^4 = q^4 и σ_1^2 = q при n = 2.
        """
        q = spec2.q
        assert sigma_closed(spec2, 1, 4) == q ** 4, "σ at m = ψ(k) should be q^4"
        assert sigma_direct(spec2, 1, 4) == q ** 4, "Direct σ_1^4 should be q^4"
        assert sigma_direct(spec2, 1, 2) == q, "σ at m = n should be q"
        assert tau(spec2, 2) == q and tau(spec2, 1) == 1, "τ_n = q, other τ_i = 1"
        logger.info("✓ σ values test passed")

    @pytest.mark.unit
    def test_mu_values(self, spec2: ParamSpec):
        """
        Тест нескольких значений μ.
        """
        q = spec2.q
        assert mu_closed(spec2, 1, 2, 1) == q ** -2, "μ_1^{2,1} should be q^-2"
        assert mu_closed(spec2, 1, 3, 1) == q ** -4, "μ_1^{3,1} should be q^-4"
        assert mu_closed(spec2, 1, 3, 2) == 1, "μ_1^{3,2} should be 1"
        with pytest.raises(IndexRangeError):
            mu_closed(spec2, 1, 3, 3)
        logger.info("✓ μ values test passed")

    @pytest.mark.unit
    @pytest.mark.parametrize("kind", [SIGMA, MU])
    def test_tables_agree(self, spec2: ParamSpec, spec2_alt: ParamSpec, kind):
        """
        Тест совпадения замкнутых формул с прямым вычислением.
        """
        for spec in (spec2, spec2_alt):
            rows = coefficient_table(spec, kind)
            assert rows, "Table should not be empty"
            bad = [row for row in rows if row["closed"] != row["direct"]]
            assert not bad, f"{kind} closed form disagrees at {bad[:3]}"
        logger.info(f"✓ {kind} table test passed")

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", [SIGMA, MU])
    def test_tables_agree_rank_three(self, spec3: ParamSpec, kind):
        """
        Тест таблиц при n = 3.
        """
        rows = coefficient_table(spec3, kind)
        assert all(row["closed"] == row["direct"] for row in rows), f"{kind} table disagrees at n = 3"
        logger.info(f"✓ {kind} rank three table test passed")
