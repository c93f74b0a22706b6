"""
Pytest конфигурация и общие фикстуры для тестов.
"""

import logging
from fractions import Fraction

import pytest

from src.algebra.borel import BorelQuotient, get_quotient
from src.algebra.params import ParamSpec, make_spec
from src.config.logging_config import setup_logging

# Настраиваем логирование для тестов
setup_logging(console_level="WARNING")
logger = logging.getLogger(__name__)


@pytest.fixture(scope="session")
def spec1() -> ParamSpec:
    """Ранг 1, q = 2."""
    return make_spec(1, 2)


@pytest.fixture(scope="session")
def spec2() -> ParamSpec:
    """Ранг 2, q = 2, p_12 = 3."""
    return make_spec(2, 2, free={(1, 2): Fraction(3)})


@pytest.fixture(scope="session")
def spec2_alt() -> ParamSpec:
    """Вторая специализация ранга 2 с другим q и p_12."""
    return make_spec(2, Fraction(3, 2), free={(1, 2): Fraction(-5, 3)})


@pytest.fixture(scope="session")
def spec3() -> ParamSpec:
    return make_spec(3, 3, seed=7)


@pytest.fixture(scope="session")
def quotient1(spec1: ParamSpec) -> BorelQuotient:
    return get_quotient(spec1)


@pytest.fixture(scope="session")
def quotient2(spec2: ParamSpec) -> BorelQuotient:
    """
    Фактор по соотношениям Серра для spec2.
    Срезы строятся лениво и кешируются на всю сессию.
    """
    quotient = get_quotient(spec2)
    logger.info(f"Quotient created for {spec2}")
    return quotient


@pytest.fixture(scope="session")
def quotient3(spec3: ParamSpec) -> BorelQuotient:
    return get_quotient(spec3)
