"""
Четыре дифференциальных исчисления на борелевских половинах и проверки,
которые на них опираются: сопряженные операторы, сравнения для копроизведения,
критерий принадлежности правой коидеальной подалгебре.
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from src.algebra.borel import BorelQuotient
from src.algebra.freealg import (
    NEGATIVE,
    POSITIVE,
    Element,
    MixedTerm,
    TensorElement,
    Word,
    bracket,
    coproduct,
    format_element,
    multiply,
)
from src.algebra.group import GroupElement
from src.algebra.params import ParamSpec, char_value, word_counts
from src.algebra.sigma import SigmaMonoid
from src.exceptions.algebra_exceptions import MixedSignError

logger = logging.getLogger(__name__)

D = "d"
D_STAR = "d_star"
D_NEG = "d_neg"
D_NEG_STAR = "d_neg_star"
VARIANTS = (D, D_STAR, D_NEG, D_NEG_STAR)

CALC = "calc"
CALC_DU = "calcdu"
CALC_NEG = "calc1"
CALC_NEG_DU = "dum2"


@dataclass
class Verdict:
    passed: bool
    witness: Optional[str] = None


def _unit(n: int, i: int) -> Tuple[int, ...]:
    return tuple(1 if t == i else 0 for t in range(1, n + 1))


def _word_coefficient(spec: ParamSpec, variant: str, i: int, word: Word, t: int) -> Fraction:
    n = spec.n
    prefix, suffix = word[:t], word[t + 1:]
    if variant == D:
        # χ^{prefix}(g_i)
        return char_value(spec, word_counts(n, prefix), GroupElement.g_i(n, i))
    if variant == D_STAR:
        # χ^i(g_suffix)
        return char_value(spec, _unit(n, i), GroupElement(word_counts(n, suffix), (0,) * n))
    if variant == D_NEG:
        value = Fraction(1)
        for j in prefix:
            value /= spec.pij(i, j)
        return value
    value = Fraction(1)
    for j in suffix:
        value /= spec.pij(j, i)
    return value


def derive(spec: ParamSpec, f: Element, i: int, variant: str = D) -> Element:
    """
    Частная производная ∂_i, ∂*_i, ∂_{-i} или ∂*_{-i}.

    :param f: Чисто положительный (для ∂, ∂*) или чисто отрицательный элемент
    :param i: Индекс буквы 1..n
    :param variant: Одно из VARIANTS
    :raises MixedSignError: при смешанном знаке или ненулевой групповой части
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown derivative variant {variant!r}")
    positive = variant in (D, D_STAR)
    if positive and not f.is_pure_positive():
        raise MixedSignError(f"{variant} needs a pure positive element, got {format_element(f)}")
    if not positive and not f.is_pure_negative():
        raise MixedSignError(f"{variant} needs a pure negative element, got {format_element(f)}")

    e = GroupElement.identity(spec.n)
    acc: Dict[MixedTerm, Fraction] = {}
    for term, coeff in f.items():
        word = term.pos if positive else term.neg
        for t, letter in enumerate(word):
            if letter != i:
                continue
            rest = word[:t] + word[t + 1:]
            key = MixedTerm((), e, rest) if positive else MixedTerm(rest, e, ())
            acc[key] = acc.get(key, Fraction(0)) + coeff * _word_coefficient(spec, variant, i, word, t)
    return Element(acc)


def _witness(quotient: BorelQuotient, lhs: Element, rhs: Element) -> Optional[str]:
    diff = quotient.reduce(lhs - rhs)
    if diff.is_zero():
        return None
    term, coeff = diff.sorted_items()[0]
    return f"difference has term {format_element(Element({term: coeff}))}"


# region Adjoint operators
def adjoint_sides(spec: ParamSpec, f: Element, i: int) -> Tuple[Element, Element]:
    """
    Обе стороны формул для [x_i, u^-] (u^- отрицательный) или [u, x_i^-] (u положительный).

    Обе стороны продолжены линейно по словам f.
    """
    n = spec.n
    h_i = GroupElement.h_i(n, i)
    lhs, rhs = Element(), Element()
    if f.is_pure_negative():
        x_i = Element.letter(n, i, POSITIVE)
        for term, coeff in f.items():
            word = Element({term: coeff})
            lhs = lhs + bracket(spec, x_i, word)
            twist = char_value(spec, _unit(n, i), GroupElement((0,) * n, word_counts(n, term.neg)))
            first = derive(spec, word, i, D_NEG_STAR).scale(twist / spec.pij(i, i))
            second = multiply(spec, Element.group(h_i), derive(spec, word, i, D_NEG))
            rhs = rhs + first - second
        return lhs, rhs
    if f.is_pure_positive():
        x_i_neg = Element.letter(n, i, NEGATIVE)
        for term, coeff in f.items():
            word = Element({term: coeff})
            lhs = lhs + bracket(spec, word, x_i_neg)
            p_u_xi = char_value(spec, word_counts(n, term.pos), GroupElement.g_i(n, i))
            first = derive(spec, word, i, D_STAR)
            second = multiply(spec, derive(spec, word, i, D), Element.group(h_i))
            rhs = rhs + first - second.scale(spec.pij(i, i) / p_u_xi)
        return lhs, rhs
    raise MixedSignError(f"adjoint check needs a pure-sign element, got {format_element(f)}")


def check_adjoint(quotient: BorelQuotient, f: Element, i: int) -> Verdict:
    """Проверить дифференциальную форму [x_i, u^-] или [u, x_i^-] в факторе."""
    lhs, rhs = adjoint_sides(quotient.spec, f, i)
    witness = _witness(quotient, lhs, rhs)
    return Verdict(witness is None, witness)
# endregion


# region Coproduct congruences
def _left_tensor(left: Element, right: Element) -> TensorElement:
    return TensorElement.pure(left, right)


def congruence_truncation(spec: ParamSpec, u: Element, variant: str) -> TensorElement:
    """Усечение Δ(u), которое вычитается в соответствующем сравнении."""
    n = spec.n
    one = Element.one(n)
    result = TensorElement()
    for term, coeff in u.items():
        word = Element({term: coeff})
        if variant == CALC:
            result = result + _left_tensor(word, one)
            for i in range(1, n + 1):
                d = derive(spec, word, i, D)
                shifted = Element({MixedTerm((), GroupElement.g_i(n, i), t.pos): c for t, c in d.items()})
                result = result + _left_tensor(shifted, Element.letter(n, i, POSITIVE))
        elif variant == CALC_DU:
            g_u = GroupElement(word_counts(n, term.pos), (0,) * n)
            result = result + _left_tensor(Element.group(g_u), word)
            for i in range(1, n + 1):
                left = Element({MixedTerm((), g_u * GroupElement.g_i(n, i, -1), (i,)): 1})
                result = result + _left_tensor(left, derive(spec, word, i, D_STAR))
        elif variant == CALC_NEG:
            result = result + _left_tensor(word, one)
            for i in range(1, n + 1):
                left = multiply(spec, Element.group(GroupElement.f_i(n, i)), derive(spec, word, i, D_NEG))
                result = result + _left_tensor(left, Element.letter(n, i, NEGATIVE))
        elif variant == CALC_NEG_DU:
            f_u = GroupElement((0,) * n, word_counts(n, term.neg))
            result = result + _left_tensor(Element.group(f_u), word)
            for i in range(1, n + 1):
                left = multiply(
                    spec, Element.group(f_u * GroupElement.f_i(n, i, -1)), Element.letter(n, i, NEGATIVE)
                )
                result = result + _left_tensor(left, derive(spec, word, i, D_NEG_STAR))
        else:
            raise ValueError(f"unknown congruence {variant!r}")
    return result


_REMAINDER_TESTS: Dict[str, Callable[[MixedTerm, MixedTerm], bool]] = {
    CALC: lambda left, right: len(right.pos) >= 2,
    CALC_DU: lambda left, right: len(left.pos) >= 2,
    CALC_NEG: lambda left, right: len(right.neg) >= 2,
    CALC_NEG_DU: lambda left, right: len(left.neg) >= 2,
}


def check_coproduct_congruence(quotient: BorelQuotient, u: Element, variant: Optional[str] = None) -> Verdict:
    """
    Δ(u) минус усечение должен лежать в указанном идеале тензорного квадрата.

    Без variant проверяются оба сравнения для знака u.
    """
    spec = quotient.spec
    if variant is None:
        if u.is_pure_positive():
            variants = [CALC, CALC_DU]
        elif u.is_pure_negative():
            variants = [CALC_NEG, CALC_NEG_DU]
        else:
            raise MixedSignError(f"congruence needs a pure-sign element, got {format_element(u)}")
    else:
        variants = [variant]

    delta = coproduct(spec, u)
    for name in variants:
        remainder = delta - congruence_truncation(spec, u, name)
        test = _REMAINDER_TESTS[name]
        for (left, right), coeff in remainder.sorted_items():
            if not test(left, right):
                return Verdict(False, f"{name}: stray term {coeff} at ({left}, {right})")
    return Verdict(True)
# endregion


# region Integrability
def _normalized(a: Element) -> Element:
    _, lead = a.sorted_items()[0]
    return a.scale(1 / lead)


def integrability_check(quotient: BorelQuotient, mon: SigmaMonoid, f: Element) -> Verdict:
    """
    f лежит в подалгебре с монодом корней mon, если каждая ненулевая
    производная ∂_u f имеет степень из mon.
    """
    spec = quotient.spec
    start = quotient.reduce(f)
    if start.is_zero():
        return Verdict(True)
    if not start.is_pure_positive():
        raise MixedSignError(f"integrability needs a positive element, got {format_element(f)}")

    seen = {_normalized(start)}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        weights = g.chi_weights()
        if len(weights) != 1:
            return Verdict(False, f"inhomogeneous derivative {format_element(g)}")
        gamma = next(iter(weights))
        if not mon.contains(gamma):
            return Verdict(False, f"derivative of degree {gamma} outside the root monoid")
        for i in range(1, spec.n + 1):
            child = quotient.reduce(derive(spec, g, i, D))
            if child.is_zero():
                continue
            key = _normalized(child)
            if key in seen:
                continue
            seen.add(key)
            queue.append(child)
    return Verdict(True)
# endregion
