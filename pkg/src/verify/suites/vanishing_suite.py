"""
Нулевые скобки [u[k,m], u[i,j]^-] при различных концах и условиях на ψ-образы.
"""

from typing import List

from src.algebra.freealg import bracket
from src.algebra.generators import u_bracket, u_minus
from src.algebra.group import psi
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure
from src.verify.enumeration import intervals

MIRROR_OUTSIDE_NEGATIVE = "mirror_ends_outside_negative"
MIRROR_OUTSIDE_POSITIVE = "mirror_ends_outside_positive"


def _mirrors_outside(n: int, a: int, b: int, lo: int, hi: int) -> bool:
    """ψ(a), ψ(b) не лежат в [lo, hi]."""
    return not lo <= psi(n, a) <= hi and not lo <= psi(n, b) <= hi


class VanishingSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []
        for k, m in intervals(n):
            for i, j in intervals(n):
                if i == k or j == m:
                    continue
                claims = []
                if _mirrors_outside(n, m, k, i, j):
                    claims.append(MIRROR_OUTSIDE_NEGATIVE)
                if _mirrors_outside(n, j, i, k, m):
                    claims.append(MIRROR_OUTSIDE_POSITIVE)
                for label in claims:
                    cases.append(SuiteCase(key=(label, k, m, i, j), label=label,
                                           payload={"k": k, "m": m, "i": i, "j": j}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec = ctx.spec
        _, k, m, i, j = case.key
        lhs = bracket(spec, u_bracket(spec, k, m), u_minus(spec, i, j))
        outcomes = [self.expect_zero(ctx, lhs)]
        # эквивалентная форма условия
        if case.label == MIRROR_OUTSIDE_NEGATIVE:
            n = ctx.n
            equivalent = not psi(n, j) <= k <= psi(n, i) and not psi(n, j) <= m <= psi(n, i)
            outcomes.append(self.expect_true(equivalent, "mirrored form of the condition disagrees"))
        return first_failure(outcomes)
