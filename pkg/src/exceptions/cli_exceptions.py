"""
Исключения командной строки: разбор элементов и входных данных.
"""

from src.exceptions import BaseError


class CliError(BaseError):
    """Базовое исключение для ошибок ввода в командной строке."""
    pass


class ShorthandSyntaxError(CliError):
    """Сокращенная запись элемента не разбирается."""

    def __init__(self, message: str, rest: str = ""):
        self.rest = rest
        super().__init__(f"{message} at {rest!r}" if rest else message)


class InputFormatError(CliError):
    """Аргумент (JSON, список индексов, параметры) имеет неверный формат."""
    pass
