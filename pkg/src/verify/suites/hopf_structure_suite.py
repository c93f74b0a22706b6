"""
Аксиомы алгебры Хопфа на случайных элементах: мультипликативность Δ,
коединица, свертка с антиподом, антимультипликативность σ и
образ u[k,m] под антиподом.
"""

from typing import List, Tuple

from src.algebra.freealg import (
    POSITIVE,
    NEGATIVE,
    Element,
    antipode,
    antipode_convolution,
    coproduct,
    counit,
    counit_left,
    counit_right,
    multiply,
    tensor_multiply,
)
from src.algebra.generators import u_bracket
from src.algebra.group import GroupElement, psi
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure
from src.verify.enumeration import intervals, random_homogeneous

AXIOMS = "hopf_axioms"
U_ANTIPODE = "antipode_of_u"


class HopfStructureSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        trials = int(ctx.option("trials", 500))
        cases = [SuiteCase(key=(AXIOMS, index), label=AXIOMS, payload={"trial": index}) for index in range(trials)]
        for k, m in intervals(ctx.n):
            cases.append(SuiteCase(key=(U_ANTIPODE, k, m), label=U_ANTIPODE, payload={"k": k, "m": m}))
        return cases

    def _pair(self, ctx: SuiteContext, index: int) -> Tuple[Element, Element]:
        rng = ctx.rng(f"hopf:{index}")
        max_len = int(ctx.option("max_word_length", 2))
        a = random_homogeneous(rng, ctx.n, max_len, rng.choice((POSITIVE, NEGATIVE)), with_group=rng.random() < 0.5)
        b = random_homogeneous(rng, ctx.n, max_len, rng.choice((POSITIVE, NEGATIVE)), with_group=rng.random() < 0.5)
        return a, b

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n

        if case.label == U_ANTIPODE:
            k, m = case.payload["k"], case.payload["m"]
            image = multiply(spec, Element.group(GroupElement.g_range(n, k, m)), antipode(spec, u_bracket(spec, k, m)))
            return self.expect_proportional(ctx, image, u_bracket(spec, psi(n, m), psi(n, k)))

        a, b = self._pair(ctx, case.payload["trial"])
        ab = multiply(spec, a, b)
        delta_a = coproduct(spec, a)
        outcomes = [
            self.expect_tensor_equal(ctx, coproduct(spec, ab), tensor_multiply(spec, delta_a, coproduct(spec, b))),
            self.expect_identical(counit_left(spec, delta_a), a),
            self.expect_identical(counit_right(spec, delta_a), a),
            self.expect_equal(ctx, antipode_convolution(spec, delta_a), Element.scalar(n, counit(a))),
            self.expect_identical(antipode(spec, ab), multiply(spec, antipode(spec, b), antipode(spec, a))),
            self.expect_true(counit(ab) == counit(a) * counit(b), "counit is not multiplicative"),
        ]
        names = ("coproduct_multiplicative", "left_counit", "right_counit", "antipode_convolution",
                 "antipode_reverses_products", "counit_multiplicative")
        for name, outcome in zip(names, outcomes):
            if not outcome.passed:
                outcome.message = f"{name}: {outcome.message}"
        return first_failure(outcomes)
