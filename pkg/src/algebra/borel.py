"""
Фактор типа B: равенство и пропорциональность в U_q(so_{2n+1}).

Идеал соотношений Серра режется по мультистепеням; каждый срез хранится в
приведенном ступенчатом виде, а нормальная форма слова берется в дополнении.
Треугольное разложение позволяет приводить отрицательную и положительную
части терма независимо.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from src.algebra.echelon import EchelonBasis, SparseVector
from src.algebra.freealg import (
    NEGATIVE,
    POSITIVE,
    Element,
    MixedTerm,
    TensorElement,
    Word,
    bracket,
)
from src.algebra.group import GroupElement
from src.algebra.params import ParamSpec, word_counts
from src.config.app_config import settings
from src.exceptions.algebra_exceptions import DegreeBudgetExceeded
from src.utils.compute_cache import ComputeOnceCache

logger = logging.getLogger(__name__)

FULL = "full"
MultiDegree = Tuple[int, ...]


class SerrePresentation:
    """Соотношения Серра типа B_n для обеих борелевских половин."""

    def __init__(self, spec: ParamSpec):
        self.spec = spec
        self.n = spec.n
        self.positive: List[Element] = self._relations(POSITIVE)
        self.negative: List[Element] = self._relations(NEGATIVE)

    def _relations(self, sign: str) -> List[Element]:
        n, spec = self.n, self.spec

        def x(i: int) -> Element:
            return Element.letter(n, i, sign)

        def br(a: Element, b: Element) -> Element:
            return bracket(spec, a, b)

        rels: List[Element] = []
        for i in range(1, n):
            rels.append(br(x(i), br(x(i), x(i + 1))))
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                rels.append(br(x(i), x(j)))
        for i in range(1, n - 1):
            rels.append(br(br(x(i), x(i + 1)), x(i + 1)))
        if n >= 2:
            rels.append(br(br(br(x(n - 1), x(n)), x(n)), x(n)))
        return rels

    def by_degree(self, sign: str) -> Dict[MultiDegree, List[SparseVector]]:
        """Соотношения как разреженные векторы, сгруппированные по мультистепени."""
        grouped: Dict[MultiDegree, List[SparseVector]] = {}
        for rel in (self.positive if sign == POSITIVE else self.negative):
            vector: SparseVector = {}
            for term, coeff in rel.items():
                word = term.pos if sign == POSITIVE else term.neg
                vector[word] = vector.get(word, Fraction(0)) + coeff
            d = word_counts(self.n, next(iter(vector)))
            grouped.setdefault(d, []).append(vector)
        return grouped


@dataclass
class IdealSlice:
    """Срез идеала в фиксированной мультистепени."""

    sign: str
    degree: MultiDegree
    basis: EchelonBasis = field(default_factory=EchelonBasis)

    def normal_form(self, vector: SparseVector) -> SparseVector:
        return self.basis.reduce(vector)


class BorelQuotient:
    """Приведение элементов 𝔉_n по модулю идеалов Серра обеих половин."""

    def __init__(self, spec: ParamSpec, max_degree: Optional[int] = None):
        self.spec = spec
        self.n = spec.n
        self.max_degree = settings.MAX_DEGREE if max_degree is None else max_degree
        self.presentation = SerrePresentation(spec)
        self._relations = {
            POSITIVE: self.presentation.by_degree(POSITIVE),
            NEGATIVE: self.presentation.by_degree(NEGATIVE),
        }
        self._slices = ComputeOnceCache(f"borel-slices-n{self.n}")
        self._word_nf = ComputeOnceCache(f"borel-words-n{self.n}")
        logger.debug(f"BorelQuotient initialized for {spec} with max degree {self.max_degree}")

    # region Slices
    def ideal_slice(self, sign: str, degree: MultiDegree) -> IdealSlice:
        """Срез I_d = Σ x_i I_{d-e_i} + Σ I_{d-e_i} x_i + R_d (вычисляется один раз)."""
        return self._slices.get_or_compute((sign, degree), lambda: self._build_slice(sign, degree))

    def _build_slice(self, sign: str, degree: MultiDegree) -> IdealSlice:
        piece = IdealSlice(sign, degree)
        for i in range(1, self.n + 1):
            if degree[i - 1] == 0:
                continue
            lower = list(degree)
            lower[i - 1] -= 1
            sub = self.ideal_slice(sign, tuple(lower))
            for row in list(sub.basis.rows.values()):
                piece.basis.add({(i,) + w: c for w, c in row.items()})
                piece.basis.add({w + (i,): c for w, c in row.items()})
        for rel in self._relations[sign].get(degree, []):
            piece.basis.add(rel)
        if piece.basis.rows:
            logger.debug(f"Ideal slice {sign} {degree}: dimension {len(piece.basis)}")
        return piece

    def slice_codimension(self, sign: str, degree: MultiDegree) -> int:
        """Число нормальных слов данной мультистепени (диагностика PBW)."""
        total = factorial(sum(degree))
        for d in degree:
            total //= factorial(d)
        return total - len(self.ideal_slice(sign, degree).basis)
    # endregion

    # region Reduction
    def _check_budget(self, term: MixedTerm) -> None:
        if len(term.neg) + len(term.pos) > self.max_degree:
            raise DegreeBudgetExceeded(
                (word_counts(self.n, term.neg), word_counts(self.n, term.pos)), self.max_degree
            )

    def word_normal_form(self, sign: str, word: Word) -> SparseVector:
        if len(word) < 2:
            return {word: Fraction(1)}

        def compute() -> SparseVector:
            piece = self.ideal_slice(sign, word_counts(self.n, word))
            return piece.normal_form({word: Fraction(1)})

        return self._word_nf.get_or_compute((sign, word), compute)

    def reduce(self, a: Element, side: str = FULL) -> Element:
        """Канонический представитель в U_q(so_{2n+1})."""
        acc: Dict[MixedTerm, Fraction] = {}
        for term, coeff in a.items():
            self._check_budget(term)
            if side in (NEGATIVE, FULL):
                neg_nf = self.word_normal_form(NEGATIVE, term.neg)
            else:
                neg_nf = {term.neg: Fraction(1)}
            if side in (POSITIVE, FULL):
                pos_nf = self.word_normal_form(POSITIVE, term.pos)
            else:
                pos_nf = {term.pos: Fraction(1)}
            for nw, nc in neg_nf.items():
                for pw, pc in pos_nf.items():
                    key = MixedTerm(nw, term.grp, pw)
                    acc[key] = acc.get(key, Fraction(0)) + coeff * nc * pc
        return Element(acc)

    def reduce_tensor(self, t: TensorElement) -> TensorElement:
        """Приведение каждой ноги тензора."""
        acc: Dict[Tuple[MixedTerm, MixedTerm], Fraction] = {}
        for (left, right), coeff in t.items():
            red_left = self.reduce(Element({left: 1}))
            red_right = self.reduce(Element({right: 1}))
            for lt, lc in red_left.items():
                for rt, rc in red_right.items():
                    acc[(lt, rt)] = acc.get((lt, rt), Fraction(0)) + coeff * lc * rc
        return TensorElement(acc)

    def is_zero(self, a: Element) -> bool:
        return self.reduce(a).is_zero()

    def equals(self, a: Element, b: Element) -> bool:
        return self.reduce(a - b).is_zero()

    def tensor_equals(self, a: TensorElement, b: TensorElement) -> bool:
        return self.reduce_tensor(a - b).is_zero()

    def is_proportional(self, a: Element, b: Element) -> Optional[Fraction]:
        """Скаляр α с a = α·b в факторе, либо None; 0 ~ 0 дает α = 1."""
        ra, rb = self.reduce(a), self.reduce(b)
        return proportionality(ra, rb)
    # endregion

    def get_metrics(self) -> Dict[str, object]:
        return {"slices": self._slices.get_metrics(), "words": self._word_nf.get_metrics()}


def proportionality(a: Element, b: Element) -> Optional[Fraction]:
    """α с a = α·b для уже приведенных элементов."""
    if a.is_zero() and b.is_zero():
        return Fraction(1)
    if a.is_zero() or b.is_zero():
        return None
    pivot, b_coeff = b.sorted_items()[0]
    a_coeff = a.coefficient(pivot)
    if not a_coeff:
        return None
    alpha = a_coeff / b_coeff
    return alpha if a == b.scale(alpha) else None


_QUOTIENTS = ComputeOnceCache("borel-quotients")


def get_quotient(spec: ParamSpec, max_degree: Optional[int] = None) -> BorelQuotient:
    """Общий экземпляр BorelQuotient на пару (spec, max_degree)."""
    budget = settings.MAX_DEGREE if max_degree is None else max_degree
    return _QUOTIENTS.get_or_compute((spec, budget), lambda: BorelQuotient(spec, budget))
