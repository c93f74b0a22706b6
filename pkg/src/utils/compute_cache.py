"""
Потокобезопасная мемо-таблица "вычислить один раз" с метриками попаданий.

Используется для срезов идеала в borel и для рекурсии генераторов.
"""

import logging
import threading
from typing import Any, Callable, Dict, Hashable, TypeVar

logger = logging.getLogger(__name__)

V = TypeVar("V")


class ComputeOnceCache:
    """Кэш, вычисляющий значение для каждого ключа не более одного раза."""

    def __init__(self, name: str):
        self.name = name
        self._lock = threading.Lock()
        self._values: Dict[Hashable, Any] = {}
        self._key_locks: Dict[Hashable, threading.Lock] = {}
        self._hits: int = 0
        self._misses: int = 0

    def get_or_compute(self, key: Hashable, factory: Callable[[], V]) -> V:
        """
        Вернуть значение по ключу, вычислив его при первом обращении.

        :param key: Ключ кэша
        :param factory: Функция без аргументов, вычисляющая значение
        :return: Опубликованное значение
        """
        # после публикации читатели не берут блокировок
        value = self._values.get(key, _MISSING)
        if value is not _MISSING:
            with self._lock:
                self._hits += 1
            return value

        with self._lock:
            key_lock = self._key_locks.setdefault(key, threading.Lock())

        with key_lock:
            value = self._values.get(key, _MISSING)
            if value is not _MISSING:
                with self._lock:
                    self._hits += 1
                return value
            value = factory()
            self._values[key] = value
            with self._lock:
                self._misses += 1
                self._key_locks.pop(key, None)
            return value

    def __contains__(self, key: Hashable) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)

    def get_metrics(self) -> Dict[str, Any]:
        """Получить текущие метрики."""
        with self._lock:
            return {
                "name": self.name,
                "entries": len(self._values),
                "hits": self._hits,
                "misses": self._misses,
            }

    def reset_metrics(self) -> None:
        """Сбросить счетчики попаданий."""
        with self._lock:
            self._hits = 0
            self._misses = 0

    def clear(self) -> None:
        """Очистить кэш целиком."""
        with self._lock:
            self._values.clear()
            self._key_locks.clear()
            self._hits = 0
            self._misses = 0
        logger.debug(f"Cache {self.name} cleared")


_MISSING = object()
