"""
Исключения для системы проверки тождеств.
"""

from src.exceptions import BaseError


class VerifyError(BaseError):
    """Базовое исключение для проверочных наборов."""
    pass


class SuiteNotFoundError(VerifyError):
    """Исключение, возникающее когда набор проверок не найден."""
    pass


class SuiteLoadError(VerifyError):
    """Исключение, возникающее при ошибке загрузки модуля набора."""
    pass


class ConfigurationError(VerifyError):
    """Исключение, возникающее при ошибке конфигурации набора."""
    pass
