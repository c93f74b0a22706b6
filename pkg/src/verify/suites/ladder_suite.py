"""
Лестничные тождества: скобки Φ^S(k,n) с отрезками отрицательной части,
разложения по бело-белым столбцам, суммы для u[k,t] и u[t,m],
ненулевая положительная проекция.
"""

from typing import List

from src.algebra.freealg import NEGATIVE, Element, bracket, multiply, multiply_all, project_positive
from src.algebra.generators import folded_interval, phi, phi_minus, phi_or_one, u_bracket, u_minus, u_or_one
from src.algebra.group import GroupElement
from src.combinatorics.schemes import BLACK, ST, WHITE, Scheme, SchemePair, all_subsets, is_regular, overlay_columns
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext
from src.verify.enumeration import complement, set_text

PEELED = "peeled_bracket"
LADDER = "white_columns_expansion"
LOWER_SUM = "lower_interval_sum"
UPPER_SUM = "upper_interval_sum"
PROJECTION = "positive_projection_nonzero"


def ladder_columns(n: int, k: int, m: int, S, i: int, T):
    """
    Полные столбцы наложения (k,m,S) и (i,m,T), если оно допустимо:
    единственный черно-черный столбец последний, первый полный столбец бело-белый.
    """
    pair = SchemePair(Scheme(n, k, m, S), Scheme(n, i, m, T))
    complete = [c for c in overlay_columns(pair, ST) if c[1] is not None and c[2] is not None]
    if not complete or (complete[0][1], complete[0][2]) != (WHITE, WHITE):
        return None
    black_pairs = [label for label, top, bottom in complete if top == BLACK and bottom == BLACK]
    if black_pairs != [m]:
        return None
    return complete


class LadderSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []

        for k in range(1, n):
            for s_set in all_subsets(k, n):
                for s in sorted(s_set):
                    cases.append(SuiteCase(key=(PEELED, k, s, tuple(sorted(s_set))), label=PEELED,
                                           payload={"k": k, "s": s, "S": set_text(s_set)}))

        for m in range(1, n + 1):
            for k in range(1, m + 1):
                for i in range(1, m + 1):
                    if i == k:
                        continue
                    for s_set in all_subsets(k, m):
                        for t_set in all_subsets(i, m):
                            if ladder_columns(n, k, m, s_set, i, t_set) is None:
                                continue
                            cases.append(SuiteCase(
                                key=(LADDER, k, m, i, tuple(sorted(s_set)), tuple(sorted(t_set))),
                                label=LADDER,
                                payload={"k": k, "m": m, "i": i, "S": set_text(s_set), "T": set_text(t_set)},
                            ))

        for t in range(1, n + 1):
            for k in range(2, t + 1):
                for i in range(1, k):
                    cases.append(SuiteCase(key=(LOWER_SUM, i, k, t), label=LOWER_SUM,
                                           payload={"i": i, "k": k, "t": t}))

        for t in range(n + 1, 2 * n + 1):
            for m in range(t, 2 * n + 1):
                for j in range(t, 2 * n + 1):
                    if m != j:
                        cases.append(SuiteCase(key=(UPPER_SUM, t, m, j), label=UPPER_SUM,
                                               payload={"t": t, "m": m, "j": j}))

        for k in range(1, n + 1):
            for m in range(n + 1, 2 * n + 1):
                for s_set in all_subsets(k, m):
                    if is_regular(n, k, m, s_set, BLACK):
                        cases.append(SuiteCase(key=(PROJECTION, k, m, tuple(sorted(s_set))), label=PROJECTION,
                                               payload={"k": k, "m": m, "S": set_text(s_set)}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        payload = case.payload

        if case.label == PEELED:
            k, s, S = payload["k"], payload["s"], frozenset(payload["S"])
            lhs = bracket(spec, phi(spec, k, n, S), phi_minus(spec, k, s, complement(k, s, S)))
            return self.expect_proportional(ctx, lhs, phi(spec, 1 + s, n, S))

        if case.label == LADDER:
            k, m, i = payload["k"], payload["m"], payload["i"]
            S, T = frozenset(payload["S"]), frozenset(payload["T"])
            columns = ladder_columns(n, k, m, S, i, T)
            lhs = bracket(spec, phi(spec, k, m, S), phi_minus(spec, i, m, T))
            nu = max(i, k)
            parts = {
                b: multiply(spec, phi_or_one(spec, i, b, T, NEGATIVE), phi_or_one(spec, k, b, S))
                for b in range(nu - 1, m)
            }
            white_pairs = [label for label, top, bottom in columns if top == WHITE and bottom == WHITE]
            return self.expect_expansion(ctx, lhs, parts, white_pairs)

        if case.label == LOWER_SUM:
            i, k, t = payload["i"], payload["k"], payload["t"]
            lhs = bracket(spec, u_bracket(spec, k, t), u_minus(spec, i, t))
            parts = {
                b: multiply(spec, u_or_one(spec, i, b, NEGATIVE), u_or_one(spec, k, b))
                for b in range(k - 1, t)
            }
            return self.expect_expansion(ctx, lhs, parts, parts.keys())

        if case.label == UPPER_SUM:
            t, m, j = payload["t"], payload["m"], payload["j"]
            mu = min(m, j)
            lhs = bracket(spec, u_bracket(spec, t, m), u_minus(spec, t, j))
            parts = {
                a: multiply_all(
                    spec,
                    Element.group(GroupElement.h_range(n, t, a - 1)),
                    u_or_one(spec, a, j, NEGATIVE),
                    u_or_one(spec, a, m),
                )
                for a in range(t + 1, mu + 2)
            }
            return self.expect_expansion(ctx, lhs, parts, parts.keys())

        k, m, S = payload["k"], payload["m"], frozenset(payload["S"])
        lhs = bracket(spec, phi(spec, k, m, S), phi_minus(spec, k, n, complement(k, n, S)))
        projected = ctx.quotient.reduce(project_positive(ctx.quotient.reduce(lhs)))
        if projected.is_zero():
            return CaseOutcome.fail("positive projection vanishes", "0", "nonzero")
        expected = folded_interval(n, n + 1, m)
        weights = projected.chi_weights()
        return self.expect_true(weights == {expected}, "projection has a wrong degree", sorted(weights), expected)
