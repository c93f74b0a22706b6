"""
Исключения алгебраического ядра: параметры, элементы, редукция, схемы.
"""

from typing import Any, Optional

from src.exceptions import BaseError


class AlgebraError(BaseError):
    """Базовое исключение для алгебраических операций."""
    pass


class InvalidParameterError(AlgebraError):
    """Недопустимые параметры квантования (q или p_ij)."""
    pass


class IndexRangeError(AlgebraError, IndexError):
    """Индексы k, m, i вне допустимого диапазона."""
    pass


class HomogeneityError(AlgebraError):
    """Скобка вызвана с неоднородным множителем."""

    def __init__(self, side: str, message: Optional[str] = None):
        self.side = side
        super().__init__(message or f"{side} factor of the bracket is not homogeneous")


class ZeroElementError(AlgebraError):
    """Степень нулевого элемента не определена."""
    pass


class DegreeBudgetExceeded(AlgebraError):
    """Степень элемента превышает настроенный бюджет."""

    def __init__(self, multidegree: Any, budget: int):
        self.multidegree = multidegree
        self.budget = budget
        super().__init__(f"multidegree {multidegree} exceeds max degree {budget}")


class MixedSignError(AlgebraError):
    """Производная применена к элементу смешанного знака или с групповой частью."""
    pass


class NotRegularError(AlgebraError):
    """Схема не является регулярной."""

    def __init__(self, scheme: Any, message: Optional[str] = None):
        self.scheme = scheme
        super().__init__(message or f"scheme {scheme} is not regular")


class StyleNotApplicable(AlgebraError):
    """Стиль отрисовки не применим к данной схеме."""
    pass
