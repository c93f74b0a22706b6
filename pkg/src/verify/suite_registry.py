"""
Реестр проверочных наборов.

Singleton реестр: наборы обнаруживаются один раз при первом обращении.
"""

import logging
from typing import Dict, List, Optional

from src.exceptions.verify_exceptions import SuiteNotFoundError
from src.verify.base_suite import BaseSuite
from src.verify.suite_loader import SuiteLoader

logger = logging.getLogger(__name__)


class SuiteRegistry:
    """
    Singleton реестр для доступа к наборам по имени.
    """

    _instance: Optional['SuiteRegistry'] = None
    _initialized: bool = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        # Инициализируем только один раз
        if not SuiteRegistry._initialized:
            self.suites: Dict[str, BaseSuite] = {}
            self._discover_suites()
            SuiteRegistry._initialized = True
            logger.debug("SuiteRegistry initialized")

    def _discover_suites(self):
        """Обнаруживает и регистрирует все доступные наборы."""
        for suite in SuiteLoader().discover_suites():
            name = suite.get_suite_name()
            self.suites[name] = suite
            logger.debug(f"Registered suite: {name}")

        logger.debug(f"Total suites registered: {len(self.suites)}")

    def get_suite(self, suite_name: str) -> BaseSuite:
        """
        Получить набор по имени.

        :raises SuiteNotFoundError: если набор не зарегистрирован
        """
        suite = self.suites.get(suite_name)
        if suite is None:
            raise SuiteNotFoundError(
                f"Unknown suite '{suite_name}'. Available: {', '.join(self.list_suites())}"
            )
        return suite

    def list_suites(self) -> List[str]:
        """Список имен зарегистрированных наборов."""
        return sorted(self.suites)


def get_suite_registry() -> SuiteRegistry:
    return SuiteRegistry()
