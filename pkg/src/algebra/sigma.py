"""
Аддитивный подмоноид Σ ⊂ N^n, порожденный степенями корней.
"""

import itertools
import threading
from typing import Dict, FrozenSet, Iterable, Tuple

Vector = Tuple[int, ...]


class SigmaMonoid:
    """Членство решается динамическим программированием по покомпонентно меньшим векторам."""

    def __init__(self, generators: Iterable[Vector]):
        gens = {tuple(g) for g in generators}
        if any(min(g) < 0 for g in gens):
            raise ValueError("root degrees must be nonnegative")
        self.generators: FrozenSet[Vector] = frozenset(g for g in gens if any(g))
        self._memo: Dict[Vector, bool] = {}
        self._lock = threading.Lock()

    def contains(self, gamma: Iterable[int]) -> bool:
        gamma = tuple(gamma)
        if any(c < 0 for c in gamma):
            return False
        if not any(gamma):
            return True
        cached = self._memo.get(gamma)
        if cached is not None:
            return cached
        result = False
        for g in self.generators:
            if len(g) != len(gamma):
                continue
            rest = tuple(a - b for a, b in zip(gamma, g))
            if min(rest) >= 0 and self.contains(rest):
                result = True
                break
        with self._lock:
            self._memo[gamma] = result
        return result

    __contains__ = contains

    def is_indecomposable(self, gamma: Iterable[int]) -> bool:
        """Ненулевой элемент Σ, не являющийся суммой двух ненулевых элементов Σ."""
        gamma = tuple(gamma)
        if not any(gamma) or not self.contains(gamma):
            return False
        for part in itertools.product(*(range(c + 1) for c in gamma)):
            if not any(part) or part == gamma:
                continue
            rest = tuple(a - b for a, b in zip(gamma, part))
            if self.contains(part) and self.contains(rest):
                return False
        return True

    def extend(self, generators: Iterable[Vector]) -> 'SigmaMonoid':
        return SigmaMonoid(set(self.generators) | {tuple(g) for g in generators})

    def __repr__(self) -> str:
        return f"SigmaMonoid({sorted(self.generators)})"
