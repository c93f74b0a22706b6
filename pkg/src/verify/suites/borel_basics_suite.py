"""
Базовые соотношения в U_q^+(so_{2n+1}): соотношения Серра, отделенные элементы,
независимость u[k,m] от расстановки скобок, нулевые скобки и размерности срезов.
"""

import itertools
from functools import lru_cache
from typing import List, Tuple

from src.algebra.freealg import NEGATIVE, POSITIVE, Element, bracket
from src.algebra.generators import folded_interval, form_on_intervals, u_bracket
from src.algebra.group import fold, psi
from src.algebra.borel import proportionality
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure
from src.verify.enumeration import intervals, words

SERRE = "serre_relations_vanish"
LETTER_SWAP = "letter_bracket_reversal"
SEPARATED = "separated_commute"
MIDDLE = "middle_letter_commutes"
LEFT_LETTER = "letter_left_of_interval"
RIGHT_LETTER = "letter_right_of_interval"
NONADJACENT = "nonadjacent_intervals_commute"
SPLIT_AT_N = "split_at_middle"
SPLIT = "split_anywhere"
SPLIT_EXCEPTION = "split_exception_fails"
PBW = "pbw_dimension"


@lru_cache(maxsize=None)
def kostant_count(n: int, degree: Tuple[int, ...]) -> int:
    """Число мультимножеств положительных корней с суммой degree."""
    roots = sorted({folded_interval(n, k, m) for k in range(1, n + 1) for m in range(k, psi(n, k))})

    @lru_cache(maxsize=None)
    def count(rest: Tuple[int, ...], start: int) -> int:
        if not any(rest):
            return 1
        total = 0
        for index in range(start, len(roots)):
            root = roots[index]
            left = tuple(a - b for a, b in zip(rest, root))
            if min(left) >= 0:
                total += count(left, index)
        return total

    return count(degree, 0)


def _nonadjacent_claims(n: int, k: int, i: int, j: int, m: int) -> Tuple[bool, bool]:
    """Какие из двух скобок u[k,i] и u[j+1,m] обязаны обращаться в ноль."""
    common = m != psi(n, i) - 1 and j != psi(n, k)
    return common and m != psi(n, k), common and i != psi(n, j) - 1


class BorelBasicsSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []
        cases.append(SuiteCase(key=(SERRE,), label=SERRE))

        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    cases.append(SuiteCase(key=(LETTER_SWAP, i, j), label=LETTER_SWAP, payload={"i": i, "j": j}))

        max_len = int(ctx.option("separated_word_length", 2))
        for j in range(1, n + 1):
            lower = [w for w in words(n, max_len) if max(w) < j]
            upper = [w for w in words(n, max_len) if min(w) > j]
            for u, v in itertools.product(lower, upper):
                for sign in (POSITIVE, NEGATIVE):
                    cases.append(SuiteCase(key=(SEPARATED, j, u, v, sign), label=SEPARATED,
                                           payload={"j": j, "u": list(u), "v": list(v), "sign": sign}))

        for lam in range(2, 2 * n):
            if lam not in (n, n + 1):
                cases.append(SuiteCase(key=(MIDDLE, lam), label=MIDDLE, payload={"lambda": lam}))

        for k, a in intervals(n):
            for lam in range(k, a):
                if a <= n:
                    cases.append(SuiteCase(key=(LEFT_LETTER, k, a, lam), label=LEFT_LETTER,
                                           payload={"k": k, "a": a, "lambda": lam}))
            for lam in range(k + 1, a + 1):
                if k > n:
                    cases.append(SuiteCase(key=(RIGHT_LETTER, k, a, lam), label=RIGHT_LETTER,
                                           payload={"k": k, "a": a, "lambda": lam}))

        for k, m in intervals(n):
            for i in range(k, m):
                for j in range(i + 1, m):
                    if not any(_nonadjacent_claims(n, k, i, j, m)):
                        continue
                    cases.append(SuiteCase(key=(NONADJACENT, k, i, j, m), label=NONADJACENT,
                                           payload={"k": k, "i": i, "j": j, "m": m}))
            if m == psi(n, k):
                continue
            if k <= n < m:
                cases.append(SuiteCase(key=(SPLIT_AT_N, k, m), label=SPLIT_AT_N, payload={"k": k, "m": m}))
            for i in range(k, m):
                # в исключительных точках разбиение обязано не выполняться
                if i in (psi(n, m) - 1, psi(n, k)):
                    cases.append(SuiteCase(key=(SPLIT_EXCEPTION, k, i, m), label=SPLIT_EXCEPTION,
                                           payload={"k": k, "i": i, "m": m}))
                    continue
                cases.append(SuiteCase(key=(SPLIT, k, i, m), label=SPLIT, payload={"k": k, "i": i, "m": m}))

        pbw_total = int(ctx.option("pbw_max_total", 4))
        for total in range(2, pbw_total + 1):
            for degree in itertools.product(range(total + 1), repeat=n):
                if sum(degree) == total:
                    cases.append(SuiteCase(key=(PBW, degree), label=PBW, payload={"degree": list(degree)}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n

        def x(index: int, sign: str = POSITIVE) -> Element:
            return Element.letter(n, fold(n, index), sign)

        def u(k: int, m: int) -> Element:
            return u_bracket(spec, k, m)

        def br(a: Element, b: Element) -> Element:
            return bracket(spec, a, b)

        if case.label == SERRE:
            relations = ctx.quotient.presentation.positive + ctx.quotient.presentation.negative
            return first_failure(self.expect_zero(ctx, rel, "Serre relation") for rel in relations)

        if case.label == LETTER_SWAP:
            i, j = case.key[1], case.key[2]
            mixed = spec.pij(i, j) * spec.pij(j, i)
            p_jj = spec.pij(j, j)
            a = next((a for a in range(1, 4) if mixed == p_jj ** (1 - a)), None)
            if a is None:
                return CaseOutcome.skip(f"p_ij p_ji is not a power of p_jj for ({i},{j})")
            left = x(i)
            right = x(i)
            for _ in range(a):
                left = br(left, x(j))
            for _ in range(a):
                right = br(x(j), right)
            alpha = proportionality(left, right)
            return self.expect_true(alpha is not None and alpha != 0,
                                    f"left and right normed brackets with {a} letters x_{j} are not proportional",
                                    left, right)

        if case.label == SEPARATED:
            _, _, w1, w2, sign = case.key
            a, b = Element.word(n, w1, sign), Element.word(n, w2, sign)
            return first_failure([self.expect_zero(ctx, br(a, b)), self.expect_zero(ctx, br(b, a))])

        if case.label == MIDDLE:
            lam = case.key[1]
            middle = u(lam - 1, lam + 1)
            return first_failure([
                self.expect_zero(ctx, br(x(lam), middle), "letter on the left"),
                self.expect_zero(ctx, br(middle, x(lam)), "letter on the right"),
            ])

        if case.label == LEFT_LETTER:
            _, k, a, lam = case.key
            return self.expect_zero(ctx, br(x(lam), u(k, a)))

        if case.label == RIGHT_LETTER:
            _, k, a, lam = case.key
            return self.expect_zero(ctx, br(u(k, a), x(lam)))

        if case.label == NONADJACENT:
            _, k, i, j, m = case.key
            left_claim, right_claim = _nonadjacent_claims(n, k, i, j, m)
            outcomes = []
            if left_claim:
                outcomes.append(self.expect_zero(ctx, br(u(k, i), u(j + 1, m)), "left bracket"))
            if right_claim:
                outcomes.append(self.expect_zero(ctx, br(u(j + 1, m), u(k, i)), "right bracket"))
            return first_failure(outcomes)

        if case.label == SPLIT_AT_N:
            _, k, m = case.key
            beta = -1 / form_on_intervals(spec, (n + 1, m), (k, n))
            return first_failure([
                self.expect_equal(ctx, u(k, m), br(u(k, n), u(n + 1, m))),
                self.expect_equal(ctx, u(k, m), br(u(n + 1, m), u(k, n)).scale(beta)),
            ])

        if case.label == SPLIT:
            _, k, i, m = case.key
            return self.expect_equal(ctx, br(u(k, i), u(i + 1, m)), u(k, m))

        if case.label == SPLIT_EXCEPTION:
            _, k, i, m = case.key
            return self.expect_not_equal(ctx, br(u(k, i), u(i + 1, m)), u(k, m))

        degree = tuple(case.key[1])
        expected = kostant_count(n, degree)
        outcomes = [
            self.expect_true(ctx.quotient.slice_codimension(sign, degree) == expected,
                             f"{sign} normal words in degree {degree}",
                             ctx.quotient.slice_codimension(sign, degree), expected)
            for sign in (POSITIVE, NEGATIVE)
        ]
        return first_failure(outcomes)
