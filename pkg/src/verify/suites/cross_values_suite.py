"""
Ненулевые значения скобок положительных и отрицательных элементов:
пары интервалов в общем положении, зеркальные интервалы и
Φ-элементы с дополнительными множествами.
"""

from typing import List

from src.algebra.freealg import NEGATIVE, Element, bracket, multiply_all
from src.algebra.generators import phi, phi_minus, u_bracket, u_minus, u_or_one
from src.algebra.group import GroupElement, psi
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext
from src.verify.enumeration import complement, intervals, regular_configurations, set_text

GENERAL_POSITION = "interleaved_intervals_value"
MIRROR_PAIR = "mirror_interval_value"
COMPLEMENTARY = "complementary_sets_value"


def interleaved(n: int, k: int, m: int, i: int, j: int) -> bool:
    """ψ(j) <= k <= ψ(i) <= m при i ≠ k, j ≠ m, кроме случая, когда оба хвоста пусты."""
    if i == k or j == m:
        return False
    if not psi(n, j) <= k <= psi(n, i) <= m:
        return False
    return psi(n, m) != i or psi(n, k) != j


def one_minus_h(n: int, k: int, m: int) -> Element:
    return Element.one(n) - Element.group(GroupElement.h_range(n, k, m))


class CrossValuesSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []
        for k, m in intervals(n):
            for i, j in intervals(n):
                if interleaved(n, k, m, i, j):
                    cases.append(SuiteCase(key=(GENERAL_POSITION, k, m, i, j), label=GENERAL_POSITION,
                                           payload={"k": k, "m": m, "i": i, "j": j}))
            if m != psi(n, k):
                cases.append(SuiteCase(key=(MIRROR_PAIR, k, m), label=MIRROR_PAIR, payload={"k": k, "m": m}))
        for k, m, s in regular_configurations(n):
            cases.append(SuiteCase(key=(COMPLEMENTARY, k, m, tuple(sorted(s))), label=COMPLEMENTARY,
                                   payload={"k": k, "m": m, "S": set_text(s)}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        payload = case.payload
        k, m = payload["k"], payload["m"]

        if case.label == GENERAL_POSITION:
            i, j = payload["i"], payload["j"]
            lhs = bracket(spec, u_bracket(spec, k, m), u_minus(spec, i, j))
            rhs = multiply_all(
                spec,
                Element.group(GroupElement.h_range(n, k, psi(n, i))),
                u_or_one(spec, psi(n, k) + 1, j, NEGATIVE),
                u_or_one(spec, psi(n, i) + 1, m),
            )
            return self.expect_proportional(ctx, lhs, rhs)

        if case.label == MIRROR_PAIR:
            lhs = bracket(spec, u_bracket(spec, k, m), u_minus(spec, psi(n, m), psi(n, k)))
            return self.expect_proportional(ctx, lhs, one_minus_h(n, k, m))

        s = frozenset(payload["S"])
        lhs = bracket(spec, phi(spec, k, m, s), phi_minus(spec, k, m, complement(k, m, s)))
        outcome = self.expect_proportional(ctx, lhs, one_minus_h(n, k, m))
        if not outcome.passed:
            outcome.message = f"S={payload['S']}: {outcome.message}"
        return outcome
