"""
Unit тесты для кэша "вычислить один раз", разбора чисел и замера времени.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from src.utils.compute_cache import ComputeOnceCache
from src.utils.string_utils import format_fraction, parse_fraction, parse_int_list, to_snake_case
from src.utils.timing import log_duration

logger = logging.getLogger(__name__)


class TestComputeOnceCacheUnit:
    """
    Unit тесты ComputeOnceCache.
    """

    @pytest.mark.unit
    def test_hits_and_misses(self):
        """
        Тест счетчиков на последовательных обращениях.
        """
        cache = ComputeOnceCache("test")
        assert cache.get_or_compute("a", lambda: 1) == 1, "First call computes"
        assert cache.get_or_compute("a", lambda: 2) == 1, "Second call returns the published value"
        assert "a" in cache and len(cache) == 1, "Key should be stored"

        metrics = cache.get_metrics()
        assert metrics == {"name": "test", "entries": 1, "hits": 1, "misses": 1}, f"Unexpected metrics {metrics}"

        cache.reset_metrics()
        assert cache.get_metrics()["hits"] == 0, "Counters should reset"
        cache.clear()
        assert len(cache) == 0, "Clear should drop entries"
        logger.info("✓ Hits and misses test passed")

    @pytest.mark.unit
    def test_concurrent_compute_once(self):
        """
        Тест: при одновременных обращениях фабрика вызывается один раз.
        """
        cache = ComputeOnceCache("concurrent")
        calls = []

        def factory():
            calls.append(1)
            time.sleep(0.05)
            return "value"

        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda _: cache.get_or_compute("key", factory), range(8)))

        assert results == ["value"] * 8, "Every caller should see the same value"
        assert len(calls) == 1, f"Factory should run once, ran {len(calls)} times"
        assert cache.get_metrics()["misses"] == 1, "Exactly one miss expected"
        logger.info("✓ Concurrent compute once test passed")


class TestStringUtilsUnit:
    """
    Unit тесты строковых утилит.
    """

    @pytest.mark.unit
    @pytest.mark.parametrize("raw,expected", [
        ("3", Fraction(3)),
        ("-3/2", Fraction(-3, 2)),
        (" 5 / 7 ", Fraction(5, 7)),
        (4, Fraction(4)),
        (Fraction(1, 3), Fraction(1, 3)),
    ])
    def test_parse_fraction(self, raw, expected):
        """
        Тест разбора рациональных чисел.
        """
        assert parse_fraction(raw) == expected, f"{raw!r} should parse to {expected}"
        logger.info(f"✓ parse_fraction {raw!r} test passed")

    @pytest.mark.unit
    @pytest.mark.parametrize("raw", ["abc", "1.5", True, None])
    def test_parse_fraction_rejects(self, raw):
        """
        Тест отказа на нерациональных значениях.
        """
        with pytest.raises(ValueError):
            parse_fraction(raw)
        logger.info(f"✓ parse_fraction rejects {raw!r} test passed")

    @pytest.mark.unit
    def test_format_and_lists(self):
        """
        Тест форматирования дробей, списков индексов и snake_case.
        """
        assert format_fraction(Fraction(2)) == "2/1", "Integers keep the denominator"
        assert format_fraction(Fraction(-6, 4)) == "-3/2", "Fractions are reduced"
        assert parse_int_list("{1,3}") == [1, 3], "Braces are stripped"
        assert parse_int_list("_") == [] and parse_int_list("") == [], "Empty set forms give []"
        assert to_snake_case("CountsSuite") == "counts_suite", "CamelCase should become snake_case"
        logger.info("✓ Format and lists test passed")


class TestTimingUnit:
    """
    Unit тесты log_duration.
    """

    @pytest.mark.unit
    def test_log_duration(self, caplog):
        """
        Тест двух записей: начало шага и время выполнения.
        """
        log = logging.getLogger("tests.timing")
        with caplog.at_level(logging.INFO, logger="tests.timing"):
            with log_duration("step", log):
                pass
        messages = [record.getMessage() for record in caplog.records if record.name == "tests.timing"]
        assert messages[0] == "⌛step", "First record should announce the step"
        assert messages[1].startswith("Время выполнения:"), "Second record should carry the duration"
        logger.info("✓ log_duration test passed")
