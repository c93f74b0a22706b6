"""
Ограничения на матрицу p_ij: диагональ, произведения соседних
и несоседних пар, восстановление из явной матрицы.
"""

from fractions import Fraction
from typing import List

from src.algebra.params import check_constraints, make_spec, spec_from_matrix
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure


class ParameterConstraintsSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        count = int(ctx.option("seeds_per_run", 25))
        cases = [SuiteCase(key=("given",), label="given_spec")]
        for s in range(count):
            cases.append(SuiteCase(key=("generated", s), label="generated_spec", payload={"seed": ctx.seed * 1000 + s}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        if case.label == "given_spec":
            spec = ctx.spec
        else:
            spec = make_spec(ctx.n, ctx.spec.q, seed=case.payload["seed"])

        n, q = spec.n, spec.q
        outcomes = []
        problems = check_constraints(spec)
        outcomes.append(self.expect_true(not problems, "; ".join(problems)))
        for i in range(1, n + 1):
            expected = q if i == n else q ** 2
            outcomes.append(self.expect_scalar(spec.pij(i, i), expected))
            for j in range(i + 1, n + 1):
                product = spec.pij(i, j) * spec.pij(j, i)
                outcomes.append(self.expect_scalar(product, q ** -2 if j == i + 1 else Fraction(1)))

        matrix = [[spec.pij(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        rebuilt = spec_from_matrix(n, q, matrix)
        outcomes.append(self.expect_true(rebuilt == spec, "matrix round trip changed the spec"))
        return first_failure(outcomes)
