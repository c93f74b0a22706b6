"""
Перечисление допустимых конфигураций индексов, множеств и слов,
а также случайные однородные элементы для проверок свойств.
"""

import itertools
import random
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Tuple

from src.algebra.freealg import NEGATIVE, POSITIVE, Element, MixedTerm
from src.algebra.group import GroupElement
from src.combinatorics.schemes import BLACK, WHITE, Scheme, all_subsets, is_regular, regular_schemes


def intervals(n: int) -> Iterator[Tuple[int, int]]:
    """Все (k, m) с 1 <= k <= m <= 2n."""
    for k in range(1, 2 * n + 1):
        for m in range(k, 2 * n + 1):
            yield k, m


def proper_intervals(n: int) -> Iterator[Tuple[int, int]]:
    """Интервалы с k < m."""
    return ((k, m) for k, m in intervals(n) if k < m)


def regular_colors(n: int, k: int, m: int, S: FrozenSet[int]) -> List[str]:
    return [color for color in (WHITE, BLACK) if is_regular(n, k, m, S, color)]


def regular_configurations(n: int) -> Iterator[Tuple[int, int, FrozenSet[int]]]:
    """Все (k, m, S) с регулярным S."""
    for k, m in intervals(n):
        for s in all_subsets(k, m):
            if regular_colors(n, k, m, s):
                yield k, m, s


def complement(k: int, m: int, S: FrozenSet[int]) -> FrozenSet[int]:
    """Дополнение S до [k, m)."""
    return frozenset(range(k, m)) - S


def words(n: int, max_len: int, min_len: int = 1) -> Iterator[Tuple[int, ...]]:
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=length)


def set_text(S: FrozenSet[int]) -> List[int]:
    return sorted(S)


def random_word(rng: random.Random, n: int, length: int, letters: Optional[List[int]] = None) -> Tuple[int, ...]:
    pool = letters or list(range(1, n + 1))
    return tuple(rng.choice(pool) for _ in range(length))


def random_group(rng: random.Random, n: int) -> GroupElement:
    return GroupElement(
        tuple(rng.randint(-1, 1) for _ in range(n)),
        tuple(rng.randint(-1, 1) for _ in range(n)),
    )


def random_homogeneous(
    rng: random.Random,
    n: int,
    max_len: int,
    sign: Optional[str] = None,
    letters: Optional[List[int]] = None,
    with_group: bool = False,
) -> Element:
    """
    Чисто знаковый элемент, однородный по обеим градуировкам:
    комбинация одного-двух слов одного состава, возможно с групповым множителем слева.
    """
    sign = sign or rng.choice((POSITIVE, NEGATIVE))
    length = rng.randint(1, max_len)
    base = random_word(rng, n, length, letters)
    shuffled = list(base)
    rng.shuffle(shuffled)
    h = random_group(rng, n) if with_group else GroupElement.identity(n)
    terms = {}
    for word, coeff in ((base, rng.randint(1, 3)), (tuple(shuffled), rng.randint(-3, 3))):
        term = MixedTerm((), h, word) if sign == POSITIVE else MixedTerm(word, h, ())
        terms[term] = terms.get(term, 0) + coeff
    element = Element(terms)
    if element.is_zero():
        term = MixedTerm((), h, base) if sign == POSITIVE else MixedTerm(base, h, ())
        element = Element({term: 1})
    return element


@lru_cache(maxsize=None)
def regular_scheme_list(n: int, sign: str = POSITIVE) -> Tuple[Scheme, ...]:
    """Регулярные схемы ранга n в фиксированном порядке; индексы служат ключами случаев."""
    return tuple(regular_schemes(n, sign))
