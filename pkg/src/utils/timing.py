import logging
from contextlib import contextmanager
from time import perf_counter
from typing import Iterator, Optional

logger = logging.getLogger(__name__)


@contextmanager
def log_duration(message: str, log: Optional[logging.Logger] = None) -> Iterator[None]:
    """Залогировать начало шага и время его выполнения."""
    log = log or logger
    log.info(f"⌛{message}")
    start = perf_counter()
    yield
    end = perf_counter()
    log.info(f"Время выполнения: {end - start:.4f} сек")
