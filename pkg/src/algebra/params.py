"""
Параметры квантования типа B_n: ранг n, параметр q и матрица p_ij.

Характеры χ и биммультипликативная форма p(·,·) вычисляются по степеням
слов и элементам группы H = G x F (подгруппа N тривиальна).
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple, Union

from src.algebra.group import GroupElement
from src.exceptions.algebra_exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

Scalar = Fraction
Number = Union[int, Fraction]

# Пул значений для незаданных свободных параметров
_FREE_POOL: Tuple[Fraction, ...] = tuple(
    Fraction(a, b) for b in (1, 2, 3) for a in (2, 3, 5, 7, -2, -3, -5, 4, -4)
    if Fraction(a, b) not in (1, -1)
)


@dataclass(frozen=True)
class ParamSpec:
    """Неизменяемые данные квантования."""

    n: int
    q: Fraction
    p: Tuple[Tuple[Fraction, ...], ...]

    def pij(self, i: int, j: int) -> Fraction:
        """p_ij с индексами 1..n."""
        return self.p[i - 1][j - 1]

    @property
    def free_choices(self) -> Dict[Tuple[int, int], Fraction]:
        return {(i, j): self.pij(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)}

    def fingerprint(self) -> Dict[str, object]:
        from src.utils.string_utils import format_fraction
        return {
            "n": self.n,
            "q": format_fraction(self.q),
            "free": {f"p{i}{j}": format_fraction(v) for (i, j), v in self.free_choices.items()},
        }

    def __str__(self) -> str:
        return f"ParamSpec(n={self.n}, q={self.q})"


@dataclass(frozen=True, order=True)
class Degree:
    """
    Степень в Γ+ ⊕ Γ-: число вхождений x_i (pos) и x_i^- (neg) после ψ-склейки.
    """

    pos: Tuple[int, ...]
    neg: Tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> 'Degree':
        return cls((0,) * n, (0,) * n)

    @classmethod
    def of_words(cls, n: int, pos_word: Tuple[int, ...] = (), neg_word: Tuple[int, ...] = ()) -> 'Degree':
        return cls(word_counts(n, pos_word), word_counts(n, neg_word))

    @property
    def folded(self) -> Tuple[int, ...]:
        """Образ в Γ = Z^n при x_i^- = -x_i."""
        return tuple(a - b for a, b in zip(self.pos, self.neg))

    @property
    def total(self) -> int:
        return sum(self.pos) + sum(self.neg)

    def sort_key(self) -> Tuple[int, ...]:
        # x_1 > ... > x_n > x_1^- > ... > x_n^-: первое различие решает
        return self.pos + self.neg

    def __add__(self, other: 'Degree') -> 'Degree':
        return Degree(
            tuple(a + b for a, b in zip(self.pos, other.pos)),
            tuple(a + b for a, b in zip(self.neg, other.neg)),
        )

    def group_degree(self) -> GroupElement:
        """gr(d) = g^{pos} f^{neg}."""
        return GroupElement(self.pos, self.neg)


def compare_degrees(a: Degree, b: Degree) -> int:
    """-1, 0, 1 по порядку (ord)."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


def word_counts(n: int, word: Tuple[int, ...]) -> Tuple[int, ...]:
    counts = [0] * n
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


def _check_q(q: Fraction) -> None:
    if q == 0 or q in (1, -1):
        raise InvalidParameterError(f"q={q} is forbidden (q must not be 0 or ±1)")
    if q ** 2 == -1 or q ** 3 == 1 or q ** 4 == 1:
        raise InvalidParameterError(f"q={q} is a forbidden root of unity")


def make_spec(
    n: int,
    q: Number,
    free: Optional[Mapping[Tuple[int, int], Number]] = None,
    seed: Optional[int] = None,
) -> ParamSpec:
    """
    Построить ParamSpec, решив ограничения типа B для зависимых элементов.

    :param n: Ранг
    :param q: Параметр q
    :param free: Заданные значения p_ij при i < j
    :param seed: Зерно для незаданных свободных значений
    :return: ParamSpec
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"rank must be a positive integer, got {n!r}")
    q = Fraction(q)
    _check_q(q)

    free = dict(free or {})
    for (i, j), value in free.items():
        if not (1 <= i < j <= n):
            raise InvalidParameterError(f"free entry p{i}{j} is not above the diagonal for n={n}")
        if Fraction(value) == 0:
            raise InvalidParameterError(f"free entry p{i}{j} must be nonzero")

    rng = random.Random(0 if seed is None else seed)
    pool = list(_FREE_POOL)
    rng.shuffle(pool)

    p: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        p[i - 1][i - 1] = q if i == n else q ** 2
    pool_index = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) in free:
                value = Fraction(free[(i, j)])
            else:
                value = pool[pool_index % len(pool)]
                pool_index += 1
            p[i - 1][j - 1] = value
            if j == i + 1:
                p[j - 1][i - 1] = q ** -2 / value
            else:
                p[j - 1][i - 1] = 1 / value

    spec = ParamSpec(n=n, q=q, p=tuple(tuple(row) for row in p))
    logger.debug(f"Built {spec} with free entries {spec.free_choices}")
    return spec


def spec_from_matrix(n: int, q: Number, matrix: List[List[Number]]) -> ParamSpec:
    """Восстановить ParamSpec из явной матрицы и проверить ограничения."""
    q = Fraction(q)
    _check_q(q)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise InvalidParameterError(f"matrix must be {n}x{n}")
    spec = ParamSpec(n=n, q=q, p=tuple(tuple(Fraction(x) for x in row) for row in matrix))
    violations = check_constraints(spec)
    if violations:
        raise InvalidParameterError("; ".join(violations))
    return spec


def check_constraints(spec: ParamSpec) -> List[str]:
    """Список нарушенных ограничений; пустой для корректной матрицы."""
    n, q = spec.n, spec.q
    problems: List[str] = []
    for i in range(1, n + 1):
        expected = q if i == n else q ** 2
        if spec.pij(i, i) != expected:
            problems.append(f"p{i}{i}={spec.pij(i, i)} expected {expected}")
        for j in range(1, n + 1):
            if spec.pij(i, j) == 0:
                problems.append(f"p{i}{j} is zero")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            product = spec.pij(i, j) * spec.pij(j, i)
            expected = q ** -2 if j == i + 1 else Fraction(1)
            if product != expected:
                problems.append(f"p{i}{j}*p{j}{i}={product} expected {expected}")
    return problems


@lru_cache(maxsize=None)
def char_value(spec: ParamSpec, weight: Tuple[int, ...], h: GroupElement) -> Fraction:
    """
    χ^weight(h) для свернутой степени weight in Z^n.

    χ^{x_i}(g_j) = p_ij, χ^{x_i}(f_j) = p_ji, χ^{x_i^-} = (χ^{x_i})^{-1}.
    """
    value = Fraction(1)
    for i, e in enumerate(weight, start=1):
        if not e:
            continue
        for j in range(1, spec.n + 1):
            g_exp = h.g[j - 1]
            f_exp = h.f[j - 1]
            if g_exp:
                value *= spec.pij(i, j) ** (e * g_exp)
            if f_exp:
                value *= spec.pij(j, i) ** (e * f_exp)
    return value


def chi(spec: ParamSpec, wdeg: Degree, h: GroupElement) -> Fraction:
    """Характер χ^w(h) для степени слова w."""
    return char_value(spec, wdeg.folded, h)


def pform(spec: ParamSpec, a: Degree, b: Degree) -> Fraction:
    """p(a, b) = χ^a(gr(b))."""
    return chi(spec, a, b.group_degree())
