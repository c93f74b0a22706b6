"""
Смешанная алгебра 𝔉_n: линейные комбинации треугольных термов (w^-, h, w).

Умножение сводит произведение к треугольной форме правилами
x_i x_j^- = p_ji x_j^- x_i + δ_ij (1 - g_i f_i) и коммутацией букв с группой.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

from src.algebra.group import GroupElement
from src.algebra.params import Degree, ParamSpec, char_value, compare_degrees, word_counts
from src.exceptions.algebra_exceptions import HomogeneityError, ZeroElementError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Number = Union[int, Fraction]

POSITIVE = "positive"
NEGATIVE = "negative"


class MixedTerm(NamedTuple):
    """Треугольный терм: отрицательное слово, элемент группы, положительное слово."""

    neg: Word
    grp: GroupElement
    pos: Word

    def sort_key(self) -> Tuple:
        return (len(self.neg) + len(self.pos), self.neg, self.pos, self.grp.g, self.grp.f)

    def degree(self) -> Degree:
        n = self.grp.rank
        return Degree(word_counts(n, self.pos), word_counts(n, self.neg))

    def chi_weight(self) -> Tuple[int, ...]:
        return self.degree().folded

    def h_degree(self) -> GroupElement:
        """grp * gr(neg) * gr(pos)."""
        d = self.degree()
        return self.grp * GroupElement(d.pos, d.neg)

    def is_scalar_like(self) -> bool:
        return not self.neg and not self.pos


class Element:
    """Элемент 𝔉_n: конечное отображение MixedTerm -> Fraction без нулей."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[MixedTerm, Number]] = None):
        cleaned: Dict[MixedTerm, Fraction] = {}
        for term, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                cleaned[term] = coeff
        self._terms = cleaned
        self._hash: Optional[int] = None

    # region Constructors
    @classmethod
    def zero(cls) -> 'Element':
        return cls()

    @classmethod
    def scalar(cls, n: int, value: Number) -> 'Element':
        return cls({MixedTerm((), GroupElement.identity(n), ()): value})

    @classmethod
    def one(cls, n: int) -> 'Element':
        return cls.scalar(n, 1)

    @classmethod
    def group(cls, h: GroupElement, coeff: Number = 1) -> 'Element':
        return cls({MixedTerm((), h, ()): coeff})

    @classmethod
    def word(cls, n: int, word: Iterable[int], sign: str = POSITIVE, coeff: Number = 1) -> 'Element':
        word = tuple(word)
        e = GroupElement.identity(n)
        if sign == POSITIVE:
            return cls({MixedTerm((), e, word): coeff})
        return cls({MixedTerm(word, e, ()): coeff})

    @classmethod
    def letter(cls, n: int, i: int, sign: str = POSITIVE) -> 'Element':
        return cls.word(n, (i,), sign)
    # endregion

    @property
    def terms(self) -> Dict[MixedTerm, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[MixedTerm, Fraction]]:
        return iter(self._terms.items())

    def sorted_items(self) -> List[Tuple[MixedTerm, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, term: MixedTerm) -> Fraction:
        return self._terms.get(term, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: 'Element') -> 'Element':
        result = dict(self._terms)
        for term, coeff in other._terms.items():
            result[term] = result.get(term, Fraction(0)) + coeff
        return Element(result)

    def __neg__(self) -> 'Element':
        return Element({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: 'Element') -> 'Element':
        return self + (-other)

    def scale(self, value: Number) -> 'Element':
        value = Fraction(value)
        if not value:
            return Element()
        return Element({t: c * value for t, c in self._terms.items()})

    def __rmul__(self, value: Number) -> 'Element':
        if isinstance(value, (int, Fraction)):
            return self.scale(value)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # region Sign and homogeneity
    def is_pure_positive(self) -> bool:
        return all(not t.neg and t.grp.is_identity() for t in self._terms)

    def is_pure_negative(self) -> bool:
        return all(not t.pos and t.grp.is_identity() for t in self._terms)

    def chi_weights(self) -> set:
        return {t.chi_weight() for t in self._terms}

    def h_degrees(self) -> set:
        return {t.h_degree() for t in self._terms}

    def is_chi_homogeneous(self) -> bool:
        return len(self.chi_weights()) <= 1

    def is_h_homogeneous(self) -> bool:
        return len(self.h_degrees()) <= 1
    # endregion

    def __repr__(self) -> str:
        return f"Element({format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)


def format_term(term: MixedTerm) -> str:
    parts = [f"x{i}-" for i in term.neg]
    if not term.grp.is_identity():
        parts.append(str(term.grp))
    parts.extend(f"x{i}" for i in term.pos)
    return "*".join(parts) if parts else "1"


def format_element(a: Element) -> str:
    if a.is_zero():
        return "0"
    chunks = []
    for term, coeff in a.sorted_items():
        chunks.append(f"({coeff})*{format_term(term)}")
    return " + ".join(chunks)


# region Multiplication
def _single_letter_past(spec: ParamSpec, i: int, neg: Word) -> List[Tuple[Fraction, Word, GroupElement, Word]]:
    """x_i · N в треугольной форме: список (коэффициент, N', h, P')."""
    n = spec.n
    e = GroupElement.identity(n)
    out: List[Tuple[Fraction, Word, GroupElement, Word]] = []
    main = char_value(spec, _unit(n, i), GroupElement((0,) * n, word_counts(n, neg)))
    out.append((main, neg, e, (i,)))
    h_i = GroupElement.h_i(n, i)
    for t, letter in enumerate(neg):
        if letter != i:
            continue
        prefix_twist = char_value(spec, _unit(n, i), GroupElement((0,) * n, word_counts(n, neg[:t])))
        rest = neg[:t] + neg[t + 1:]
        out.append((prefix_twist, rest, e, ()))
        tail = word_counts(n, neg[t + 1:])
        out.append((-prefix_twist * char_value(spec, tail, h_i), rest, h_i, ()))
    return out


@lru_cache(maxsize=None)
def _unit(n: int, i: int) -> Tuple[int, ...]:
    v = [0] * n
    v[i - 1] = 1
    return tuple(v)


@lru_cache(maxsize=200000)
def _swap(spec: ParamSpec, pos: Word, neg: Word) -> Tuple[Tuple[Fraction, Word, GroupElement, Word], ...]:
    """P · N для положительного P и отрицательного N в треугольной форме."""
    n = spec.n
    if not pos or not neg:
        return ((Fraction(1), neg, GroupElement.identity(n), pos),)
    head, last = pos[:-1], pos[-1]
    acc: Dict[Tuple[Word, GroupElement, Word], Fraction] = {}
    for c1, n1, h1, p1 in _single_letter_past(spec, last, neg):
        for c2, n2, h2, p2 in _swap(spec, head, n1):
            # p2 · h1 = χ^{p2}(h1) h1 · p2
            coeff = c1 * c2 * char_value(spec, word_counts(n, p2), h1)
            key = (n2, h2 * h1, p2 + p1)
            acc[key] = acc.get(key, Fraction(0)) + coeff
    return tuple((c, k[0], k[1], k[2]) for k, c in acc.items() if c)


def term_product(spec: ParamSpec, t1: MixedTerm, t2: MixedTerm) -> Dict[MixedTerm, Fraction]:
    """(N1 h1 P1)(N2 h2 P2) в треугольной форме."""
    n = spec.n
    out: Dict[MixedTerm, Fraction] = {}
    for c, n_mid, h_mid, p_mid in _swap(spec, t1.pos, t2.neg):
        coeff = c
        if n_mid:
            # h1 · N' = χ^{N'}(h1)^{-1} N' · h1, χ^{N'} = (χ^{counts})^{-1}
            coeff *= char_value(spec, word_counts(n, n_mid), t1.grp)
        if p_mid:
            coeff *= char_value(spec, word_counts(n, p_mid), t2.grp)
        term = MixedTerm(t1.neg + n_mid, t1.grp * h_mid * t2.grp, p_mid + t2.pos)
        out[term] = out.get(term, Fraction(0)) + coeff
    return out


def multiply(spec: ParamSpec, a: Element, b: Element) -> Element:
    """Произведение a·b в треугольной форме."""
    acc: Dict[MixedTerm, Fraction] = {}
    for t1, c1 in a.items():
        for t2, c2 in b.items():
            for term, c in term_product(spec, t1, t2).items():
                acc[term] = acc.get(term, Fraction(0)) + c1 * c2 * c
    return Element(acc)


def multiply_all(spec: ParamSpec, *factors: Element) -> Element:
    result = factors[0]
    for factor in factors[1:]:
        result = multiply(spec, result, factor)
    return result
# endregion


# region Bracket
def skew_coefficient(spec: ParamSpec, u: Element, v: Element) -> Fraction:
    """p(u, v) = χ^u(gr v) для однородных u, v."""
    (weight,) = u.chi_weights()
    (h,) = v.h_degrees()
    return char_value(spec, weight, h)


def bracket(spec: ParamSpec, u: Element, v: Element) -> Element:
    """Косой коммутатор [u, v] = uv - p(u, v)·vu."""
    if not u.is_chi_homogeneous():
        raise HomogeneityError("left", f"left factor {u} is not χ-homogeneous")
    if not v.is_h_homogeneous():
        raise HomogeneityError("right", f"right factor {v} is not H-homogeneous")
    if u.is_zero() or v.is_zero():
        return Element()
    coeff = skew_coefficient(spec, u, v)
    return multiply(spec, u, v) - multiply(spec, v, u).scale(coeff)


def bracket_with_group(spec: ParamSpec, u: Element, h: GroupElement) -> Element:
    """[u, 1 - h], вычисленная явно: u(1-h) - χ^u(h)(1-h)u."""
    if not u.is_chi_homogeneous():
        raise HomogeneityError("left", f"left factor {u} is not χ-homogeneous")
    if u.is_zero():
        return Element()
    (weight,) = u.chi_weights()
    one_minus_h = Element.one(spec.n) - Element.group(h)
    return multiply(spec, u, one_minus_h) - multiply(spec, one_minus_h, u).scale(char_value(spec, weight, h))
# endregion


# region Antipode and coproduct
@lru_cache(maxsize=None)
def _antipode_letter(spec: ParamSpec, i: int, sign: str) -> Element:
    n = spec.n
    if sign == POSITIVE:
        return Element({MixedTerm((), GroupElement.g_i(n, i, -1), (i,)): -1})
    return multiply(spec, Element.group(GroupElement.f_i(n, i, -1), -1), Element.letter(n, i, NEGATIVE))


def antipode(spec: ParamSpec, a: Element) -> Element:
    """Антиавтоморфизм σ: σ(x_i) = -g_i^{-1}x_i, σ(x_i^-) = -f_i^{-1}x_i^-, σ(h) = h^{-1}."""
    result = Element()
    for term, coeff in a.items():
        # σ(N h P) = σ(P) σ(h) σ(N)
        factors = [_antipode_letter(spec, i, POSITIVE) for i in reversed(term.pos)]
        factors.append(Element.group(term.grp.inverse()))
        factors.extend(_antipode_letter(spec, i, NEGATIVE) for i in reversed(term.neg))
        result = result + multiply_all(spec, *factors).scale(coeff)
    return result


class TensorElement:
    """Элемент тензорного квадрата: отображение (MixedTerm, MixedTerm) -> Fraction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[MixedTerm, MixedTerm], Number]] = None):
        self._terms: Dict[Tuple[MixedTerm, MixedTerm], Fraction] = {
            k: Fraction(c) for k, c in (terms or {}).items() if c
        }

    @classmethod
    def pure(cls, left: Element, right: Element) -> 'TensorElement':
        acc: Dict[Tuple[MixedTerm, MixedTerm], Fraction] = {}
        for t1, c1 in left.items():
            for t2, c2 in right.items():
                acc[(t1, t2)] = acc.get((t1, t2), Fraction(0)) + c1 * c2
        return cls(acc)

    def items(self) -> Iterator[Tuple[Tuple[MixedTerm, MixedTerm], Fraction]]:
        return iter(self._terms.items())

    def sorted_items(self) -> List[Tuple[Tuple[MixedTerm, MixedTerm], Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: 'TensorElement') -> 'TensorElement':
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return TensorElement(acc)

    def __neg__(self) -> 'TensorElement':
        return TensorElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: 'TensorElement') -> 'TensorElement':
        return self + (-other)

    def scale(self, value: Number) -> 'TensorElement':
        return TensorElement({k: c * Fraction(value) for k, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        chunks = [f"({c})*{format_term(a)}⊗{format_term(b)}" for (a, b), c in self.sorted_items()]
        return "TensorElement(" + (" + ".join(chunks) if chunks else "0") + ")"


def tensor_multiply(spec: ParamSpec, a: TensorElement, b: TensorElement) -> TensorElement:
    """(a⊗b)(c⊗d) = ac⊗bd."""
    acc: Dict[Tuple[MixedTerm, MixedTerm], Fraction] = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            left = term_product(spec, l1, l2)
            right = term_product(spec, r1, r2)
            for lt, lc in left.items():
                for rt, rc in right.items():
                    key = (lt, rt)
                    acc[key] = acc.get(key, Fraction(0)) + c1 * c2 * lc * rc
    return TensorElement(acc)


@lru_cache(maxsize=None)
def _coproduct_letter(spec: ParamSpec, i: int, sign: str) -> TensorElement:
    n = spec.n
    e = GroupElement.identity(n)
    if sign == POSITIVE:
        letter = MixedTerm((), e, (i,))
        twist = GroupElement.g_i(n, i)
    else:
        letter = MixedTerm((i,), e, ())
        twist = GroupElement.f_i(n, i)
    one = MixedTerm((), e, ())
    return TensorElement({(letter, one): 1, (MixedTerm((), twist, ()), letter): 1})


def coproduct(spec: ParamSpec, a: Element) -> TensorElement:
    """Δ, продолженное мультипликативно: Δ(x_i) = x_i⊗1 + g_i⊗x_i, Δ(h) = h⊗h."""
    result = TensorElement()
    for term, coeff in a.items():
        group_part = MixedTerm((), term.grp, ())
        acc = TensorElement({(group_part, group_part): 1})
        factors = [_coproduct_letter(spec, i, NEGATIVE) for i in term.neg]
        prefix = TensorElement({(MixedTerm((), GroupElement.identity(spec.n), ()),) * 2: 1})
        for factor in factors:
            prefix = tensor_multiply(spec, prefix, factor)
        acc = tensor_multiply(spec, prefix, acc)
        for i in term.pos:
            acc = tensor_multiply(spec, acc, _coproduct_letter(spec, i, POSITIVE))
        result = result + acc.scale(coeff)
    return result


def counit(a: Element) -> Fraction:
    """ε: буквы в 0, группа в 1."""
    return sum((c for t, c in a.items() if t.is_scalar_like()), Fraction(0))


def counit_left(spec: ParamSpec, t: TensorElement) -> Element:
    """(ε⊗id)(t)."""
    acc: Dict[MixedTerm, Fraction] = {}
    for (left, right), c in t.items():
        if left.is_scalar_like():
            acc[right] = acc.get(right, Fraction(0)) + c
    return Element(acc)


def counit_right(spec: ParamSpec, t: TensorElement) -> Element:
    """(id⊗ε)(t)."""
    acc: Dict[MixedTerm, Fraction] = {}
    for (left, right), c in t.items():
        if right.is_scalar_like():
            acc[left] = acc.get(left, Fraction(0)) + c
    return Element(acc)


def antipode_convolution(spec: ParamSpec, t: TensorElement) -> Element:
    """μ(σ⊗id)(t)."""
    result = Element()
    for (left, right), c in t.items():
        result = result + multiply(spec, antipode(spec, Element({left: 1})), Element({right: c}))
    return result
# endregion


# region Degrees and projections
def project_positive(a: Element) -> Element:
    """ε^-⊗ε^0⊗id: отбросить термы с отрицательными буквами, стереть группу."""
    acc: Dict[MixedTerm, Fraction] = {}
    for term, coeff in a.items():
        if term.neg:
            continue
        key = MixedTerm((), GroupElement.identity(term.grp.rank), term.pos)
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return Element(acc)


def substitute_negative(a: Element) -> Element:
    """Буквальная подстановка x_i -> x_i^- в чисто положительном элементе."""
    return Element({MixedTerm(t.pos, t.grp, ()): c for t, c in a.items()})


def degree(a: Element) -> Degree:
    """Максимальная степень терма по порядку (ord)."""
    if a.is_zero():
        raise ZeroElementError("degree of the zero element is undefined")
    best: Optional[Degree] = None
    for term, _ in a.items():
        d = term.degree()
        if best is None or compare_degrees(d, best) > 0:
            best = d
    return best


def folded_degree(a: Element) -> Tuple[int, ...]:
    """Свернутая Γ-степень Γ-однородного элемента."""
    weights = a.chi_weights()
    if not weights:
        raise ZeroElementError("degree of the zero element is undefined")
    if len(weights) > 1:
        raise HomogeneityError("argument", f"{a} is not Γ-homogeneous")
    return next(iter(weights))
# endregion
