"""
Выделенные элементы: u[k,m], Φ^S(k,m), их отрицательные и зеркальные версии,
а также таблицы коэффициентов σ, μ, τ.
"""

import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from src.algebra.freealg import (
    NEGATIVE,
    POSITIVE,
    Element,
    bracket,
    multiply,
    multiply_all,
    substitute_negative,
)
from src.algebra.group import GroupElement, fold, psi
from src.algebra.params import Degree, ParamSpec, pform, word_counts
from src.exceptions.algebra_exceptions import IndexRangeError
from src.utils.compute_cache import ComputeOnceCache

logger = logging.getLogger(__name__)

SIGMA = "sigma"
MU = "mu"

_cache = ComputeOnceCache("generators")


def _check_interval(spec: ParamSpec, k: int, m: int) -> None:
    if not (1 <= k <= m <= 2 * spec.n):
        raise IndexRangeError(f"interval [{k},{m}] is outside 1..{2 * spec.n}")


def u_word(n: int, k: int, m: int) -> Tuple[int, ...]:
    """Слово u(k,m) = x_k x_{k+1} ... x_m; пустое при k > m."""
    return tuple(fold(n, t) for t in range(k, m + 1))


def u_degree(n: int, k: int, m: int) -> Degree:
    return Degree(word_counts(n, u_word(n, k, m)), (0,) * n)


def folded_interval(n: int, k: int, m: int) -> Tuple[int, ...]:
    """Степень [k:m] в N^n."""
    return word_counts(n, u_word(n, k, m))


def form_on_intervals(spec: ParamSpec, a: Tuple[int, int], b: Tuple[int, int]) -> Fraction:
    """p(u(a), u(b)) для интервалов; пустой интервал дает нулевую степень."""
    return pform(spec, u_degree(spec.n, *a), u_degree(spec.n, *b))


def tau(spec: ParamSpec, i: int) -> Fraction:
    """τ_i = q при i = n, иначе 1."""
    return spec.q if i == spec.n else Fraction(1)


def _apply_sign(a: Element, sign: str) -> Element:
    return a if sign == POSITIVE else substitute_negative(a)


def _u_positive(spec: ParamSpec, k: int, m: int) -> Element:
    n = spec.n
    if k > m:
        return Element.one(n)

    def compute() -> Element:
        letters = [Element.letter(n, fold(n, t)) for t in range(k, m + 1)]
        if k == m:
            return letters[0]
        if m < psi(n, k):
            acc = letters[0]
            for letter in letters[1:]:
                acc = bracket(spec, acc, letter)
            return acc
        if m > psi(n, k):
            acc = letters[-1]
            for letter in reversed(letters[:-1]):
                acc = bracket(spec, letter, acc)
            return acc
        beta = -1 / form_on_intervals(spec, (n + 1, m), (k, n))
        return bracket(spec, _u_positive(spec, n + 1, m), _u_positive(spec, k, n)).scale(beta)

    return _cache.get_or_compute(("u", spec, k, m), compute)


def u_bracket(spec: ParamSpec, k: int, m: int, sign: str = POSITIVE) -> Element:
    """
    u[k,m] со скобками по трем случаям: левая нормировка при m < ψ(k),
    правая при m > ψ(k), β[u[n+1,m], u[k,n]] при m = ψ(k).

    :raises IndexRangeError: при индексах вне 1 <= k <= m <= 2n
    """
    _check_interval(spec, k, m)
    return _apply_sign(_u_positive(spec, k, m), sign)


def u_or_one(spec: ParamSpec, k: int, m: int, sign: str = POSITIVE) -> Element:
    """u[k,m] с соглашением u[m+1,m] = 1."""
    if k == m + 1:
        return Element.one(spec.n)
    return u_bracket(spec, k, m, sign)


def clip_set(k: int, m: int, s: Iterable[int]) -> FrozenSet[int]:
    return frozenset(t for t in s if k <= t < m)


def _phi_positive(spec: ParamSpec, k: int, m: int, s: FrozenSet[int]) -> Element:
    if k > m:
        return Element.one(spec.n)

    def compute() -> Element:
        q = spec.q
        result = _u_positive(spec, k, m)
        for point in sorted(s):
            alpha = tau(spec, point) / form_on_intervals(spec, (point + 1, m), (k, point))
            tail = multiply(spec, _phi_positive(spec, point + 1, m, clip_set(point + 1, m, s)),
                            _u_positive(spec, k, point))
            result = result - tail.scale((1 - q ** -2) * alpha)
        return result

    return _cache.get_or_compute(("phi", spec, k, m, s), compute)


def phi(spec: ParamSpec, k: int, m: int, s: Iterable[int] = (), sign: str = POSITIVE) -> Element:
    """
    Φ^S(k,m) = u[k,m] - (1-q^{-2}) Σ_{s∈S} τ_s p(u(1+s,m),u(k,s))^{-1} Φ^S(1+s,m)·u[k,s].

    Регулярность S не требуется.
    """
    _check_interval(spec, k, m)
    return _apply_sign(_phi_positive(spec, k, m, clip_set(k, m, s)), sign)


def phi_or_one(spec: ParamSpec, k: int, m: int, s: Iterable[int] = (), sign: str = POSITIVE) -> Element:
    """Φ^S(k,m) с соглашением Φ(k,k-1) = 1."""
    if k == m + 1:
        return Element.one(spec.n)
    return phi(spec, k, m, s, sign)


def u_minus(spec: ParamSpec, k: int, m: int) -> Element:
    return u_bracket(spec, k, m, NEGATIVE)


def phi_minus(spec: ParamSpec, k: int, m: int, s: Iterable[int] = ()) -> Element:
    return phi(spec, k, m, s, NEGATIVE)


# region σ and μ
def sigma_direct(spec: ParamSpec, k: int, m: int) -> Fraction:
    """σ_k^m = p(u(k,m), u(k,m))."""
    _check_interval(spec, k, m)
    return form_on_intervals(spec, (k, m), (k, m))


def mu_direct(spec: ParamSpec, k: int, m: int, i: int) -> Fraction:
    """μ_k^{m,i} = p(u(k,i), u(i+1,m)) p(u(i+1,m), u(k,i))."""
    _check_interval(spec, k, m)
    if not k <= i < m:
        raise IndexRangeError(f"μ needs k <= i < m, got k={k}, i={i}, m={m}")
    return form_on_intervals(spec, (k, i), (i + 1, m)) * form_on_intervals(spec, (i + 1, m), (k, i))


def sigma_closed(spec: ParamSpec, k: int, m: int) -> Fraction:
    _check_interval(spec, k, m)
    n, q = spec.n, spec.q
    if m == n or k == n + 1:
        return q
    if m == psi(n, k):
        return q ** 4
    return q ** 2


def mu_closed(spec: ParamSpec, k: int, m: int, i: int) -> Fraction:
    _check_interval(spec, k, m)
    if not k <= i < m:
        raise IndexRangeError(f"μ needs k <= i < m, got k={k}, i={i}, m={m}")
    n, q = spec.n, spec.q
    if m < psi(n, k):
        if m > n and i == psi(n, m) - 1:
            return q ** -4
        return Fraction(1) if i == n else q ** -2
    if m == psi(n, k):
        return q ** 2 if i == n else Fraction(1)
    if k <= n and i == psi(n, k):
        return q ** -4
    return Fraction(1) if i == n else q ** -2


def sigma_mu_closed(spec: ParamSpec, kind: str, k: int, m: int, i: Optional[int] = None) -> Fraction:
    if kind == SIGMA:
        return sigma_closed(spec, k, m)
    return mu_closed(spec, k, m, i)


def sigma_mu_direct(spec: ParamSpec, kind: str, k: int, m: int, i: Optional[int] = None) -> Fraction:
    if kind == SIGMA:
        return sigma_direct(spec, k, m)
    return mu_direct(spec, k, m, i)


def coefficient_table(spec: ParamSpec, kind: str) -> List[Dict[str, object]]:
    """Все допустимые значения σ или μ вместе с прямым вычислением."""
    n = spec.n
    rows: List[Dict[str, object]] = []
    for k in range(1, 2 * n + 1):
        for m in range(k, 2 * n + 1):
            if kind == SIGMA:
                rows.append({"k": k, "m": m, "closed": sigma_closed(spec, k, m), "direct": sigma_direct(spec, k, m)})
                continue
            for i in range(k, m):
                rows.append({
                    "k": k, "m": m, "i": i,
                    "closed": mu_closed(spec, k, m, i), "direct": mu_direct(spec, k, m, i),
                })
    return rows
# endregion


def mirror(spec: ParamSpec, a: Element) -> Element:
    """
    Почленная подстановка x_i -> p_ii^{-1} x_i^-, x_i^- -> -x_i, g_i <-> f_i
    с последующим перемножением в треугольную форму.
    """
    n = spec.n
    result = Element()
    for term, coeff in a.items():
        factors = [Element.letter(n, i, POSITIVE).scale(-1) for i in term.neg]
        factors.append(Element.group(GroupElement(term.grp.f, term.grp.g)))
        factors.extend(Element.letter(n, i, NEGATIVE).scale(1 / spec.pij(i, i)) for i in term.pos)
        result = result + multiply_all(spec, *factors).scale(coeff)
    return result

