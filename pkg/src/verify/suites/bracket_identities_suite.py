"""
Тождества косого коммутатора на случайных однородных тройках:
ассоциативность, тождества Якоби, ad-тождества, перестановки с группой,
условные тождества и независимость от расстановки скобок.
"""

import itertools
import logging
from typing import Dict, List, Tuple

from src.algebra.freealg import (
    NEGATIVE,
    POSITIVE,
    Element,
    bracket,
    bracket_with_group,
    format_element,
    multiply,
    multiply_all,
    skew_coefficient,
)
from src.algebra.generators import u_bracket
from src.algebra.group import GroupElement
from src.algebra.params import char_value
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure
from src.verify.enumeration import random_group, random_homogeneous

logger = logging.getLogger(__name__)

TRIPLE = "triple"
CHAIN = "chain"


def _left_normed(spec, items: List[Element]) -> Element:
    acc = items[0]
    for y in items[1:]:
        acc = bracket(spec, acc, y)
    return acc


class BracketIdentitiesSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        trials = int(ctx.option("trials", 500))
        cases = [SuiteCase(key=(TRIPLE, index), label=TRIPLE, payload={"trial": index}) for index in range(trials)]
        cases.extend(self._chain_cases(ctx))
        return cases

    #region Случайные тройки
    def _triple(self, ctx: SuiteContext, index: int) -> Tuple[str, Element, Element, Element]:
        rng = ctx.rng(f"triple:{index}")
        n = ctx.n
        max_len = int(ctx.option("max_word_length", 2))
        kinds = [POSITIVE, NEGATIVE] + (["split"] if n >= 2 else [])
        kind = rng.choice(kinds)
        if kind == "split":
            # u положителен на A, w отрицателен на B, A и B не пересекаются
            letters = list(range(1, n + 1))
            rng.shuffle(letters)
            cut = rng.randint(1, n - 1)
            left, right = letters[:cut], letters[cut:]
            v_sign = rng.choice((POSITIVE, NEGATIVE))
            u = random_homogeneous(rng, n, max_len, POSITIVE, left)
            v = random_homogeneous(rng, n, max_len, v_sign, left if v_sign == POSITIVE else right,
                                   with_group=rng.random() < 0.3)
            w = random_homogeneous(rng, n, max_len, NEGATIVE, right)
            return kind, u, v, w
        u, v, w = (random_homogeneous(rng, n, max_len, kind, with_group=rng.random() < 0.3) for _ in range(3))
        return kind, u, v, w

    def _check_triple(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        kind, u, v, w = self._triple(ctx, case.payload["trial"])
        case.payload.update({"kind": kind, "u": format_element(u), "v": format_element(v), "w": format_element(w)})

        def p(a: Element, b: Element):
            return skew_coefficient(spec, a, b)

        def br(a: Element, b: Element) -> Element:
            return bracket(spec, a, b)

        def mul(*factors: Element) -> Element:
            return multiply_all(spec, *factors)

        checks: Dict[str, Tuple[Element, Element]] = {
            "associativity": (mul(mul(u, v), w), mul(u, mul(v, w))),
            "jacobi_right": (
                br(br(u, v), w),
                br(u, br(v, w)) + br(br(u, w), v).scale(1 / p(w, v))
                + mul(br(u, w), v).scale(p(v, w) - 1 / p(w, v)),
            ),
            "jacobi_left": (
                br(br(u, v), w),
                br(u, br(v, w)) - br(v, br(u, w)).scale(1 / p(v, u))
                + mul(v, br(u, w)).scale(1 / p(v, u) - p(u, v)),
            ),
            "product_left": (br(mul(u, v), w), mul(br(u, w), v).scale(p(v, w)) + mul(u, br(v, w))),
            "product_right": (br(u, mul(v, w)), mul(br(u, v), w) + mul(v, br(u, w)).scale(p(u, v))),
        }

        rng = ctx.rng(f"group:{case.payload['trial']}")
        g = GroupElement(random_group(rng, n).g, (0,) * n)
        g_el = Element.group(g)
        (v_weight,) = v.chi_weights()
        (u_weight,) = u.chi_weights()
        chi_u_g = char_value(spec, u_weight, g)
        chi_v_g = char_value(spec, v_weight, g)
        checks["group_right"] = (br(u, multiply(spec, g_el, v)), mul(g_el, br(u, v)).scale(chi_u_g))
        checks["group_left"] = (
            br(multiply(spec, g_el, u), v),
            mul(g_el, br(u, v)) + mul(g_el, v, u).scale(p(u, v) * (1 - chi_v_g)),
        )
        checks["group_left_twisted"] = (
            br(multiply(spec, g_el, u), v),
            mul(g_el, br(u, v)).scale(chi_v_g) + mul(g_el, u, v).scale(1 - chi_v_g),
        )

        i = rng.randint(1, n)
        h_i = GroupElement.h_i(n, i)
        chi_u_h = char_value(spec, u_weight, h_i)
        checks["bracket_with_one_minus_h"] = (bracket_with_group(spec, u, h_i), u.scale(1 - chi_u_h))
        commutator = br(Element.letter(n, i, POSITIVE), Element.letter(n, i, NEGATIVE))
        checks["commutator_on_left"] = (br(commutator, u), mul(Element.group(h_i), u).scale(chi_u_h - 1))

        if p(u, v) * p(v, u) == 1:
            checks["antisymmetry"] = (br(u, v), br(v, u).scale(-p(u, v)))
        if br(u, w).is_zero():
            checks["jacobi_commuting_outer"] = (br(br(u, v), w), br(u, br(v, w)))
            checks["product_commuting"] = (br(mul(u, v), w), mul(u, br(v, w)))
        if br(u, v).is_zero() and p(u, v) * p(v, u) == 1:
            checks["jacobi_commuting_inner"] = (br(u, br(v, w)), br(v, br(u, w)).scale(p(u, v)))

        outcomes = []
        for name, (lhs, rhs) in checks.items():
            outcome = self.expect_identical(lhs, rhs)
            if not outcome.passed:
                outcome.message = f"{name}: {outcome.message}"
            outcomes.append(outcome)
        return first_failure(outcomes)
    #endregion

    #region Цепочки
    def _pool(self, ctx: SuiteContext, sign: str) -> List[Tuple[str, Element, int]]:
        """Элементы u[k,m] короткой длины: (метка, элемент, длина)."""
        span = int(ctx.option("chain_pool_span", 2))
        pool = []
        for k in range(1, 2 * ctx.n + 1):
            for m in range(k, min(k + span, 2 * ctx.n + 1)):
                pool.append((f"u[{k},{m}]", u_bracket(ctx.spec, k, m, sign), m - k + 1))
        return pool

    def _chain_cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        """Последовательности, у которых несоседние члены коммутируют в факторе."""
        max_degree = int(ctx.option("chain_max_degree", 6))
        lengths = ctx.option("chain_lengths", [3, 4])
        cases: List[SuiteCase] = []
        for sign in (POSITIVE, NEGATIVE):
            pool = self._pool(ctx, sign)
            size = [length for _, _, length in pool]
            commuting: Dict[Tuple[int, int], bool] = {}

            def commutes(a: int, b: int) -> bool:
                if (a, b) not in commuting:
                    commuting[(a, b)] = ctx.quotient.is_zero(bracket(ctx.spec, pool[a][1], pool[b][1]))
                return commuting[(a, b)]

            for length in lengths:
                for chain in itertools.product(range(len(pool)), repeat=length):
                    if sum(size[a] for a in chain) > max_degree:
                        continue
                    if all(commutes(chain[a], chain[b]) for a in range(length) for b in range(a + 2, length)):
                        cases.append(SuiteCase(
                            key=(CHAIN, sign, chain),
                            label=CHAIN,
                            payload={"sign": sign, "chain": [pool[a][0] for a in chain]},
                        ))
        logger.debug(f"{len(cases)} admissible bracket chains at n={ctx.n}")
        return cases

    def _check_chain(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec = ctx.spec
        pool = self._pool(ctx, case.key[1])
        items = [pool[a][1] for a in case.key[2]]
        whole = _left_normed(spec, items)
        outcomes = []
        for s in range(1, len(items)):
            split = bracket(spec, _left_normed(spec, items[:s]), _left_normed(spec, items[s:]))
            outcome = self.expect_equal(ctx, whole, split)
            if not outcome.passed:
                outcome.message = f"split after {s}: {outcome.message}"
            outcomes.append(outcome)
        return first_failure(outcomes)
    #endregion

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        if case.label == TRIPLE:
            return self._check_triple(ctx, case)
        return self._check_chain(ctx, case)
