"""
Корневые последовательности θ: 0 <= θ_i <= 2n-2i+1.
"""

import itertools
from math import prod
from typing import Iterator, Tuple

from src.exceptions.algebra_exceptions import InvalidParameterError


def _bounds(n: int) -> Tuple[int, ...]:
    if n < 1:
        raise InvalidParameterError(f"rank must be positive, got {n}")
    return tuple(2 * n - 2 * i + 2 for i in range(1, n + 1))


def enumerate_root_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    """Все корневые последовательности в лексикографическом порядке."""
    return itertools.product(*(range(b) for b in _bounds(n)))


def count_root_sequences(n: int) -> int:
    """2^n n! = |W(B_n)|."""
    return prod(_bounds(n))


def count_subalgebra_pairs(n: int) -> int:
    """Число пар (положительная, отрицательная) корневых последовательностей."""
    return count_root_sequences(n) ** 2


def is_root_sequence(n: int, theta: Tuple[int, ...]) -> bool:
    bounds = _bounds(n)
    return len(theta) == n and all(0 <= t < b for t, b in zip(theta, bounds))
