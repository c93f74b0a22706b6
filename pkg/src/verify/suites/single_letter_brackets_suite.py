"""
Скобки элементов u[k,m] с образующими противоположного знака
и следствие о нулевых скобках при непересекающихся носителях.
"""

from typing import List, Set

from src.algebra.freealg import NEGATIVE, POSITIVE, Element, bracket, multiply
from src.algebra.generators import u_bracket, u_minus
from src.algebra.group import GroupElement, fold, psi
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext
from src.verify.enumeration import intervals, proper_intervals

WITH_NEGATIVE_LETTER = "interval_with_negative_letter"
LETTER_WITH_NEGATIVE = "letter_with_negative_interval"
DISJOINT = "disjoint_supports_commute"


def _letters(n: int, *indices: int) -> Set[int]:
    return {fold(n, t) for t in indices}


def _outside(n: int, points, a: int, b: int) -> bool:
    """Ни одна из точек p, ψ(p) не лежит в [a, b]."""
    return all(not a <= t <= b for p in points for t in (p, psi(n, p)))


class SingleLetterBracketsSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []
        for k, m in proper_intervals(n):
            for i in range(1, n + 1):
                if i in _letters(n, k, m) and m == psi(n, k):
                    continue
                cases.append(SuiteCase(key=(WITH_NEGATIVE_LETTER, k, m, i), label=WITH_NEGATIVE_LETTER,
                                       payload={"k": k, "m": m, "i": i}))
                cases.append(SuiteCase(key=(LETTER_WITH_NEGATIVE, k, m, i), label=LETTER_WITH_NEGATIVE,
                                       payload={"letter": i, "i": k, "j": m}))
        for k, m in intervals(n):
            for i, j in intervals(n):
                if _outside(n, (k, m), i, j) or _outside(n, (i, j), k, m):
                    cases.append(SuiteCase(key=(DISJOINT, k, m, i, j), label=DISJOINT,
                                           payload={"k": k, "m": m, "i": i, "j": j}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        p = case.payload

        if case.label == DISJOINT:
            lhs = bracket(spec, u_bracket(spec, p["k"], p["m"]), u_minus(spec, p["i"], p["j"]))
            return self.expect_zero(ctx, lhs)

        if case.label == WITH_NEGATIVE_LETTER:
            k, m, i = p["k"], p["m"], p["i"]
            lhs = bracket(spec, u_bracket(spec, k, m), Element.letter(n, i, NEGATIVE))
            if i not in _letters(n, k, m):
                return self.expect_zero(ctx, lhs)
            if i == fold(n, k):
                h = GroupElement.h_i(n, fold(n, k))
                return self.expect_proportional(ctx, lhs, multiply(spec, Element.group(h), u_bracket(spec, k + 1, m)))
            return self.expect_proportional(ctx, lhs, u_bracket(spec, k, m - 1))

        letter, i, j = p["letter"], p["i"], p["j"]
        lhs = bracket(spec, Element.letter(n, letter, POSITIVE), u_minus(spec, i, j))
        if letter not in _letters(n, i, j):
            return self.expect_zero(ctx, lhs)
        if letter == fold(n, i):
            h = GroupElement.h_i(n, fold(n, i))
            return self.expect_proportional(ctx, lhs, multiply(spec, Element.group(h), u_minus(spec, i + 1, j)))
        return self.expect_proportional(ctx, lhs, u_minus(spec, i, j - 1))
