"""
Unit тесты для корневых последовательностей и моноида Σ.
"""

import logging

import pytest

from src.algebra.sigma import SigmaMonoid
from src.combinatorics.roots import (
    count_root_sequences,
    count_subalgebra_pairs,
    enumerate_root_sequences,
    is_root_sequence,
)
from src.exceptions.algebra_exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class TestRootSequencesUnit:
    """
    Unit тесты перечисления θ.
    """

    @pytest.mark.unit
    @pytest.mark.parametrize("n,expected", [(1, 2), (2, 8), (3, 48)])
    def test_counts(self, n, expected):
        """
        Тест числа последовательностей 2^n n!.
        """
        assert count_root_sequences(n) == expected, f"Rank {n} should have {expected} root sequences"
        assert sum(1 for _ in enumerate_root_sequences(n)) == expected, "Enumeration should match the count"
        assert count_subalgebra_pairs(n) == expected ** 2, "Pairs are squares of the count"
        logger.info(f"✓ Root count n={n} test passed")

    @pytest.mark.unit
    def test_enumeration_order(self):
        """
        Тест лексикографического порядка.
        """
        assert list(enumerate_root_sequences(1)) == [(0,), (1,)], "Rank 1 sequences are wrong"
        assert list(enumerate_root_sequences(2))[:3] == [(0, 0), (0, 1), (1, 0)], "Order should be lexicographic"
        logger.info("✓ Enumeration order test passed")

    @pytest.mark.unit
    def test_membership(self):
        """
        Тест границ 0 <= θ_i <= 2n-2i+1.
        """
        assert is_root_sequence(2, (3, 1)), "(3,1) is the largest sequence at n = 2"
        assert not is_root_sequence(2, (4, 0)), "θ_1 <= 3 at n = 2"
        assert not is_root_sequence(2, (0, 2)), "θ_2 <= 1 at n = 2"
        assert not is_root_sequence(2, (1,)), "Length must be n"
        with pytest.raises(InvalidParameterError):
            count_root_sequences(0)
        logger.info("✓ Membership test passed")


class TestSigmaMonoidUnit:
    """
    Unit тесты членства и неразложимости.
    """

    @pytest.mark.unit
    def test_contains(self):
        """
        Тест членства для моноида, порожденного (1,0) и (1,2).
        """
        monoid = SigmaMonoid([(1, 0), (1, 2)])
        assert (0, 0) in monoid, "Zero always belongs"
        assert monoid.contains((3, 4)), "(3,4) = (1,0) + 2·(1,2)"
        assert not monoid.contains((0, 2)), "(0,2) is not reachable"
        assert not monoid.contains((1, 1)), "(1,1) is not reachable"
        assert not monoid.contains((-1, 0)), "Negative vectors never belong"
        logger.info("✓ Σ membership test passed")

    @pytest.mark.unit
    def test_indecomposable(self):
        """
        Тест неразложимых элементов.
        """
        monoid = SigmaMonoid([(1, 0), (0, 1), (1, 1)])
        assert monoid.is_indecomposable((1, 0)), "Letter degrees are indecomposable"
        assert not monoid.is_indecomposable((1, 1)), "(1,1) = (1,0) + (0,1)"
        assert not monoid.is_indecomposable((0, 0)), "Zero is never indecomposable"
        logger.info("✓ Indecomposable test passed")

    @pytest.mark.unit
    def test_extend_and_errors(self):
        """
        Тест расширения образующих и отказа от отрицательных степеней.
        """
        monoid = SigmaMonoid([(1, 0), (0, 0)])
        assert monoid.generators == frozenset({(1, 0)}), "Zero generator is dropped"
        wider = monoid.extend([(0, 1)])
        assert wider.contains((2, 3)) and not monoid.contains((2, 3)), "Extension should not change the original"
        with pytest.raises(ValueError):
            SigmaMonoid([(1, -1)])
        logger.info("✓ Extend test passed")
