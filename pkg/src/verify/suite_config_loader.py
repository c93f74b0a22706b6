"""
Загрузчик конфигураций проверочных наборов.
Автоматически обнаруживает и загружает YAML конфигурации из директории src/config/suites.
"""

import yaml
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.utils.string_utils import to_snake_case

logger = logging.getLogger(__name__)


@dataclass
class SuiteConfig:
    """Конфигурация набора из YAML файла."""

    suite_name: str
    description: str
    anchors: List[str] = field(default_factory=list)
    exhaustive_ranks: List[int] = field(default_factory=lambda: [1, 2])
    sampled_ranks: List[int] = field(default_factory=list)
    settings: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SuiteConfig':
        """Создать из словаря (загруженного из YAML)."""
        ranks = data.get("ranks", {}) or {}
        return cls(
            suite_name=data.get("suite_name", "unknown"),
            description=data.get("description", ""),
            anchors=list(data.get("anchors", []) or []),
            exhaustive_ranks=list(ranks.get("exhaustive", [1, 2]) or []),
            sampled_ranks=list(ranks.get("sampled", []) or []),
            settings=dict(data.get("settings", {}) or {}),
        )

    @property
    def supported_ranks(self) -> List[int]:
        return sorted(set(self.exhaustive_ranks) | set(self.sampled_ranks))

    def supports_rank(self, n: int) -> bool:
        return n in self.supported_ranks

    def is_sampled(self, n: int) -> bool:
        return n in self.sampled_ranks and n not in self.exhaustive_ranks


class SuiteConfigLoader:
    """
    Загрузчик конфигураций наборов из YAML файлов.
    Работает по аналогии с SuiteLoader для автоматического обнаружения конфигураций.
    """

    def __init__(self, suites_dir: Optional[str] = None):
        """
        Инициализация загрузчика конфигураций.

        :param suites_dir: Путь к директории с конфигурациями.
                           По умолчанию используется src/config/suites.
        """
        if suites_dir is None:
            # current_file.parent = verify/, .parent.parent = src/
            src_root = Path(__file__).parent.parent
            self.suites_dir = src_root / "config" / "suites"
        else:
            self.suites_dir = Path(suites_dir)

        logger.debug(f"SuiteConfigLoader initialized with directory: {self.suites_dir}")

        # Кеш загруженных конфигураций
        self._config_cache: Dict[str, SuiteConfig] = {}

    def find_suite_config_files(self) -> List[Path]:
        """
        Находит все файлы *_suite.yaml в директории конфигураций.

        :return: Список путей к файлам с конфигурациями.
        """
        if not self.suites_dir.exists():
            logger.warning(f"Suites config directory not found: {self.suites_dir}")
            return []

        config_files = sorted(self.suites_dir.glob("*_suite.yaml"))
        logger.debug(f"Found {len(config_files)} suite config files")
        return config_files

    def load_config_from_file(self, file_path: Path) -> Optional[SuiteConfig]:
        """
        Загружает конфигурацию набора из YAML файла.

        :param file_path: Путь к YAML файлу с конфигурацией.
        :return: Конфигурация или None при ошибке.
        """
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)

            if not data:
                logger.warning(f"Empty config file: {file_path}")
                return None

            config = SuiteConfig.from_dict(data)
            if not config.supported_ranks:
                logger.warning(f"No ranks declared in config: {file_path}")
                return None
            return config

        except yaml.YAMLError as e:
            logger.error(f"YAML parsing error in {file_path}: {e}")
        except Exception as e:
            logger.error(f"Error loading config from {file_path}: {e}", exc_info=True)

        return None

    def extract_suite_name_from_filename(self, file_path: Path) -> str:
        """
        Извлекает имя набора из имени файла.

        Примеры:
        - counts_suite.yaml -> counts
        - cross_values_suite.yaml -> cross_values
        """
        filename = file_path.stem
        if filename.endswith("_suite"):
            return filename[:-6]
        return filename

    def load_all_configs(self) -> Dict[str, SuiteConfig]:
        """
        Загружает все доступные конфигурации наборов.

        :return: Словарь {suite_name: config}
        """
        configs = {}
        for file_path in self.find_suite_config_files():
            config = self.load_config_from_file(file_path)
            if config:
                configs[self.extract_suite_name_from_filename(file_path)] = config

        self._config_cache = configs
        logger.debug(f"Total suite configs loaded: {len(configs)}")
        return configs

    def get_config_for_suite(self, suite_name: str) -> Optional[SuiteConfig]:
        """
        Получает конфигурацию для конкретного набора.

        :param suite_name: Имя набора (snake_case или CamelCase)
        :return: Конфигурация или None если не найдена
        """
        if not self._config_cache:
            self.load_all_configs()

        if suite_name in self._config_cache:
            return self._config_cache[suite_name]

        snake_name = to_snake_case(suite_name)
        if snake_name in self._config_cache:
            return self._config_cache[snake_name]

        if snake_name.endswith("_suite") and snake_name[:-6] in self._config_cache:
            return self._config_cache[snake_name[:-6]]

        logger.debug(f"No config found for suite: {suite_name}")
        return None

    def get_default_config(self) -> SuiteConfig:
        """Конфигурация default_suite.yaml или встроенная."""
        default_config = self.get_config_for_suite("default")
        if default_config:
            return default_config
        return SuiteConfig(suite_name="default", description="Built-in defaults")

    def reload_configs(self) -> None:
        """Перезагружает все конфигурации (полезно для разработки)."""
        self._config_cache.clear()
        self.load_all_configs()


# Глобальный экземпляр загрузчика
_suite_config_loader: Optional[SuiteConfigLoader] = None


def get_suite_config_loader() -> SuiteConfigLoader:
    """Получить глобальный экземпляр загрузчика конфигураций."""
    global _suite_config_loader
    if _suite_config_loader is None:
        _suite_config_loader = SuiteConfigLoader()
    return _suite_config_loader
