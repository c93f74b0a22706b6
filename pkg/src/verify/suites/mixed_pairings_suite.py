"""
Скобки [u, v^-] в свободной алгебре: нулевые для слов с непересекающимися
алфавитами и явные групповые значения для квадратичных и кубических спариваний.
"""

from typing import List

from src.algebra.freealg import NEGATIVE, POSITIVE, Element, bracket
from src.algebra.group import GroupElement
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext
from src.verify.enumeration import words

DISJOINT = "disjoint_words_commute"
QUADRATIC = "quadratic_pairing"
CUBIC = "cubic_pairing"


class MixedPairingsSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        max_len = int(ctx.option("max_word_length", 3))
        cases: List[SuiteCase] = []
        for u in words(n, max_len):
            for v in words(n, max_len):
                if set(u) & set(v):
                    continue
                cases.append(SuiteCase(key=(DISJOINT, u, v), label=DISJOINT, payload={"u": list(u), "v": list(v)}))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                cases.append(SuiteCase(key=(QUADRATIC, i, j), label=QUADRATIC, payload={"i": i, "j": j}))
                cases.append(SuiteCase(key=(CUBIC, i, j), label=CUBIC, payload={"i": i, "j": j}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        if case.label == DISJOINT:
            u = Element.word(n, case.key[1], POSITIVE)
            v = Element.word(n, case.key[2], NEGATIVE)
            lhs = bracket(spec, u, v)
            return self.expect_identical(lhs, Element())

        i, j = case.key[1], case.key[2]

        def x(a: int, sign: str = POSITIVE) -> Element:
            return Element.letter(n, a, sign)

        def br(a: Element, b: Element) -> Element:
            return bracket(spec, a, b)

        mixed = spec.pij(i, j) * spec.pij(j, i)
        one = Element.one(n)
        if case.label == QUADRATIC:
            lhs = br(br(x(i), x(j)), br(x(j, NEGATIVE), x(i, NEGATIVE)))
            h = GroupElement.h_i(n, i) * GroupElement.h_i(n, j)
            rhs = (one - Element.group(h)).scale(1 - mixed)
            return self.expect_identical(lhs, rhs)

        p_jj = spec.pij(j, j)
        epsilon = (1 + p_jj) * (1 - mixed) * (1 - mixed * p_jj)
        lhs = br(
            br(br(x(i), x(j)), x(j)),
            br(x(j, NEGATIVE), br(x(j, NEGATIVE), x(i, NEGATIVE))),
        )
        h = GroupElement.h_i(n, i) * GroupElement.h_i(n, j, 2)
        rhs = (one - Element.group(h)).scale(epsilon)
        return self.expect_identical(lhs, rhs)
