"""
Свободная абелева группа H = G x F с образующими g_1..g_n, f_1..f_n.
"""

from dataclasses import dataclass
from typing import Tuple


def fold(n: int, i: int) -> int:
    """Индекс буквы 1..2n в алфавит 1..n: x_i = x_{2n-i+1} при i > n."""
    return i if i <= n else 2 * n - i + 1


def psi(n: int, i: int) -> int:
    return 2 * n - i + 1


@dataclass(frozen=True, order=True)
class GroupElement:
    """Элемент группы: показатели при g_1..g_n и f_1..f_n."""

    g: Tuple[int, ...]
    f: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.g)

    @classmethod
    def identity(cls, n: int) -> 'GroupElement':
        return cls((0,) * n, (0,) * n)

    @classmethod
    def g_i(cls, n: int, i: int, power: int = 1) -> 'GroupElement':
        g = [0] * n
        g[i - 1] = power
        return cls(tuple(g), (0,) * n)

    @classmethod
    def f_i(cls, n: int, i: int, power: int = 1) -> 'GroupElement':
        f = [0] * n
        f[i - 1] = power
        return cls((0,) * n, tuple(f))

    @classmethod
    def h_i(cls, n: int, i: int, power: int = 1) -> 'GroupElement':
        """h_i = g_i f_i."""
        return cls.g_i(n, i, power) * cls.f_i(n, i, power)

    @classmethod
    def g_range(cls, n: int, k: int, m: int) -> 'GroupElement':
        """g_{k->m} = g_k g_{k+1} ... g_m с учетом ψ-склейки индексов."""
        g = [0] * n
        for t in range(k, m + 1):
            g[fold(n, t) - 1] += 1
        return cls(tuple(g), (0,) * n)

    @classmethod
    def f_range(cls, n: int, k: int, m: int) -> 'GroupElement':
        g_part = cls.g_range(n, k, m)
        return cls((0,) * n, g_part.g)

    @classmethod
    def h_range(cls, n: int, k: int, m: int) -> 'GroupElement':
        return cls.g_range(n, k, m) * cls.f_range(n, k, m)

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        return GroupElement(
            tuple(a + b for a, b in zip(self.g, other.g)),
            tuple(a + b for a, b in zip(self.f, other.f)),
        )

    def __pow__(self, power: int) -> 'GroupElement':
        return GroupElement(tuple(a * power for a in self.g), tuple(a * power for a in self.f))

    def inverse(self) -> 'GroupElement':
        return self ** -1

    def is_identity(self) -> bool:
        return not any(self.g) and not any(self.f)

    def __str__(self) -> str:
        parts = []
        for name, exps in (("g", self.g), ("f", self.f)):
            for idx, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{name}{idx}")
                elif e:
                    parts.append(f"{name}{idx}^{e}")
        return "*".join(parts) if parts else "1"
