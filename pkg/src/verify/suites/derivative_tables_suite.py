"""
Таблицы σ и μ, производные элементов u[k,m], дифференциальная форма
присоединенных операторов и копроизведение u[k,m].
"""

from fractions import Fraction
from typing import List

from src.algebra.calculus import D, D_STAR, check_adjoint, check_coproduct_congruence, derive
from src.algebra.freealg import NEGATIVE, POSITIVE, Element, TensorElement, coproduct, multiply
from src.algebra.generators import (
    MU,
    SIGMA,
    coefficient_table,
    sigma_mu_closed,
    sigma_mu_direct,
    tau,
    u_bracket,
)
from src.algebra.group import GroupElement, fold
from src.utils.string_utils import format_fraction
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext
from src.verify.enumeration import intervals, words

TABLE = "closed_form_table"
LEFT_DERIVATIVE = "left_derivative_of_u"
RIGHT_DERIVATIVE = "right_derivative_of_u"
ADJOINT = "adjoint_differential_form"
CONGRUENCE = "coproduct_congruence"
COPRODUCT = "coproduct_of_u"


class DerivativeTablesSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []
        for kind in (SIGMA, MU):
            for row in coefficient_table(ctx.spec, kind):
                key = (TABLE, kind, row["k"], row["m"], row.get("i", 0))
                cases.append(SuiteCase(key=key, label=TABLE, payload={
                    "kind": kind, "k": row["k"], "m": row["m"], "i": row.get("i"),
                }))
        if n in ctx.option("table_only_ranks", []):
            return cases

        for k, m in intervals(n):
            cases.append(SuiteCase(key=(COPRODUCT, k, m), label=COPRODUCT, payload={"k": k, "m": m}))
            cases.append(SuiteCase(key=(CONGRUENCE, "u", k, m), label=CONGRUENCE, payload={"k": k, "m": m}))
            for i in range(1, n + 1):
                cases.append(SuiteCase(key=(LEFT_DERIVATIVE, k, m, i), label=LEFT_DERIVATIVE,
                                       payload={"k": k, "m": m, "i": i}))
                cases.append(SuiteCase(key=(RIGHT_DERIVATIVE, k, m, i), label=RIGHT_DERIVATIVE,
                                       payload={"k": k, "m": m, "i": i}))

        max_len = int(ctx.option("adjoint_word_length", 4))
        for word in words(n, max_len):
            for sign in (POSITIVE, NEGATIVE):
                for i in range(1, n + 1):
                    cases.append(SuiteCase(key=(ADJOINT, sign, word, i), label=ADJOINT,
                                           payload={"sign": sign, "word": list(word), "i": i}))
                if len(word) <= int(ctx.option("congruence_word_length", 3)):
                    cases.append(SuiteCase(key=(CONGRUENCE, sign, word), label=CONGRUENCE,
                                           payload={"sign": sign, "word": list(word)}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n, q = ctx.spec, ctx.n, ctx.spec.q
        payload = case.payload

        if case.label == TABLE:
            args = (spec, payload["kind"], payload["k"], payload["m"], payload["i"])
            outcome = self.expect_scalar(sigma_mu_closed(*args), sigma_mu_direct(*args))
            if not outcome.passed:
                outcome.message = f"{payload['kind']} closed form differs from the form value"
            return outcome

        if case.label in (LEFT_DERIVATIVE, RIGHT_DERIVATIVE):
            k, m, i = payload["k"], payload["m"], payload["i"]
            u = u_bracket(spec, k, m)
            if case.label == LEFT_DERIVATIVE:
                actual = derive(spec, u, i, D)
                edge, rest = k, (k + 1, m)
                factor = (1 - q ** -2) * tau(spec, k)
            else:
                actual = derive(spec, u, i, D_STAR)
                edge, rest = m, (k, m - 1)
                factor = (1 - q ** -2) * tau(spec, m - 1) if m > k else Fraction(1)
            if fold(n, edge) != i:
                expected = Element()
            elif k == m:
                expected = Element.one(n)
            else:
                expected = u_bracket(spec, *rest).scale(factor)
            return self.expect_equal(ctx, actual, expected)

        if case.label == ADJOINT:
            f = Element.word(n, tuple(payload["word"]), payload["sign"])
            verdict = check_adjoint(ctx.quotient, f, payload["i"])
            return self.expect_true(verdict.passed, f"adjoint form fails: {verdict.witness}")

        if case.label == CONGRUENCE:
            if "word" in payload:
                f = Element.word(n, tuple(payload["word"]), payload["sign"])
            else:
                f = u_bracket(spec, payload["k"], payload["m"])
            verdict = check_coproduct_congruence(ctx.quotient, f)
            return self.expect_true(verdict.passed, f"coproduct congruence fails: {verdict.witness}")

        k, m = payload["k"], payload["m"]
        u = u_bracket(spec, k, m)
        one = Element.one(n)
        expected = TensorElement.pure(u, one) + TensorElement.pure(Element.group(GroupElement.g_range(n, k, m)), u)
        for i in range(k, m):
            left = multiply(spec, Element.group(GroupElement.g_range(n, k, i)), u_bracket(spec, i + 1, m))
            coeff = tau(spec, i) * (1 - q ** -2)
            expected = expected + TensorElement.pure(left, u_bracket(spec, k, i)).scale(coeff)
        outcome = self.expect_tensor_equal(ctx, coproduct(spec, u), expected)
        if not outcome.passed:
            outcome.message = f"coproduct of u[{k},{m}] at q={format_fraction(q)}: {outcome.message}"
        return outcome
