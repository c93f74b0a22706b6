"""
Загрузчик проверочных наборов.
Автоматически обнаруживает наборы в директории src/verify/suites.
"""

import os
import importlib
import inspect
import logging
from pathlib import Path
from typing import List, Optional, Type

from src.exceptions.verify_exceptions import SuiteLoadError
from src.verify.base_suite import BaseSuite

logger = logging.getLogger(__name__)


class SuiteLoader:
    """
    Класс для автоматического обнаружения и загрузки наборов.
    Рекурсивно сканирует директорию src/verify/suites/ для поиска классов,
    наследующих BaseSuite.
    """

    def __init__(self, suites_dir: Optional[str] = None):
        """
        Инициализация загрузчика наборов.

        :param suites_dir: Путь к директории с наборами.
                           По умолчанию используется src/verify/suites.
        """
        if suites_dir is None:
            # current_file.parent = verify/, .parent.parent = src/
            src_root = Path(__file__).parent.parent
            self.project_root = src_root.parent
            self.suites_dir = src_root / "verify" / "suites"
        else:
            self.suites_dir = Path(suites_dir)
            self.project_root = self.suites_dir.parent.parent.parent

        logger.debug(f"SuiteLoader initialized with directory: {self.suites_dir}")

    def find_suite_files(self) -> List[Path]:
        """
        Рекурсивно находит все файлы *_suite.py в директории наборов.

        :return: Список путей к файлам с наборами.
        """
        suite_files = []

        if not self.suites_dir.exists():
            logger.warning(f"Suites directory not found: {self.suites_dir}")
            return suite_files

        for file_path in sorted(self.suites_dir.rglob("*_suite.py")):
            # Игнорируем base_suite.py
            if file_path.name != "base_suite.py":
                suite_files.append(file_path)
                logger.debug(f"Found suite file: {file_path}")

        logger.debug(f"Found {len(suite_files)} suite files")
        return suite_files

    def load_suite_classes(self, file_path: Path) -> List[Type[BaseSuite]]:
        """
        Загружает классы наборов из указанного файла.

        :param file_path: Путь к Python файлу с наборами.
        :return: Список классов, наследующих BaseSuite.
        """
        suite_classes = []

        try:
            # src/verify/suites/counts_suite.py -> src.verify.suites.counts_suite
            relative_path = file_path.relative_to(self.project_root)
            module_name = str(relative_path.with_suffix('')).replace(os.sep, '.')

            module = importlib.import_module(module_name)

            for name, obj in inspect.getmembers(module, inspect.isclass):
                # Только классы, объявленные в самом модуле
                if issubclass(obj, BaseSuite) and obj is not BaseSuite and obj.__module__ == module.__name__:
                    suite_classes.append(obj)
                    logger.debug(f"Found suite class: {name}")

        except Exception as e:
            logger.error(f"Error loading suite from {file_path}: {e}", exc_info=True)
            raise SuiteLoadError(f"Failed to load suite from {file_path}: {e}")

        return suite_classes

    def discover_suites(self) -> List[BaseSuite]:
        """
        Обнаруживает и создает экземпляры всех доступных наборов.

        :return: Список экземпляров наборов.
        """
        suites = []
        for file_path in self.find_suite_files():
            try:
                suite_classes = self.load_suite_classes(file_path)
            except SuiteLoadError as e:
                logger.error(f"Suite load error: {e}")
                continue

            for suite_class in suite_classes:
                try:
                    suites.append(suite_class())
                except Exception as e:
                    logger.error(f"Error initializing suite {suite_class.__name__}: {e}", exc_info=True)

        logger.debug(f"Total suites discovered: {len(suites)}")
        return suites
