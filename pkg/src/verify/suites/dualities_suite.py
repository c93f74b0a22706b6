"""
Двойственности регулярных множеств и разложения Φ^S(k,m):
дополнение, ψ-сдвиг, звезда, ограничение на подынтервал,
левое и правое расщепление, образ антипода.
"""

from typing import List

from src.algebra.freealg import NEGATIVE, POSITIVE, Element, antipode, bracket, multiply
from src.algebra.generators import phi
from src.algebra.group import GroupElement, psi
from src.combinatorics.schemes import BLACK, WHITE, Scheme, all_subsets, is_regular, star
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure
from src.verify.enumeration import complement, intervals, regular_colors, set_text

COMPLEMENT = "complement_swaps_colors"
PSI_SHIFT = "psi_shift_keeps_color"
STAR = "star_is_proportional"
RESTRICT_WHITE = "white_restriction"
RESTRICT_BLACK = "black_restriction"
LEFT_SPLIT = "left_split"
RIGHT_SPLIT = "right_split"
ANTIPODE = "antipode_image"


def _shifted(n: int, S) -> frozenset:
    return frozenset(psi(n, s) - 1 for s in S)


class DualitiesSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []
        for k, m in intervals(n):
            for s_set in all_subsets(k, m):
                key_set = tuple(sorted(s_set))
                payload = {"k": k, "m": m, "S": set_text(s_set)}
                cases.append(SuiteCase(key=(COMPLEMENT, k, m, key_set), label=COMPLEMENT, payload=payload))
                cases.append(SuiteCase(key=(PSI_SHIFT, k, m, key_set), label=PSI_SHIFT, payload=payload))
                colors = regular_colors(n, k, m, s_set)
                if not colors:
                    continue
                cases.append(SuiteCase(key=(STAR, k, m, key_set), label=STAR, payload=payload))
                cases.append(SuiteCase(key=(ANTIPODE, k, m, key_set), label=ANTIPODE, payload=payload))
                for color, label in ((WHITE, RESTRICT_WHITE), (BLACK, RESTRICT_BLACK)):
                    if color in colors:
                        cases.append(SuiteCase(key=(label, k, m, key_set), label=label, payload=payload))
                for t in range(k, m):
                    if self._left_split_applies(n, k, m, s_set, t):
                        cases.append(SuiteCase(key=(LEFT_SPLIT, k, m, key_set, t), label=LEFT_SPLIT,
                                               payload={**payload, "t": t}))
                    if self._right_split_applies(n, k, m, s_set, t):
                        cases.append(SuiteCase(key=(RIGHT_SPLIT, k, m, key_set, t), label=RIGHT_SPLIT,
                                               payload={**payload, "t": t}))
        return cases

    @staticmethod
    def _left_split_applies(n: int, k: int, m: int, S, t: int) -> bool:
        if t not in S and is_regular(n, k, m, S | {t}, WHITE):
            return True
        return is_regular(n, k, m, S, BLACK) and t not in S - {n}

    @staticmethod
    def _right_split_applies(n: int, k: int, m: int, S, s: int) -> bool:
        if is_regular(n, k, m, S, WHITE) and (s in S or s == n):
            return True
        return s in S and is_regular(n, k, m, S - {s}, BLACK)

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        payload = case.payload
        k, m, S = payload["k"], payload["m"], frozenset(payload["S"])

        if case.label == COMPLEMENT:
            rest = complement(k, m, S)
            return first_failure([
                self.expect_true(is_regular(n, k, m, S, WHITE) == is_regular(n, k, m, rest, BLACK),
                                 "white regularity of S differs from black regularity of the complement"),
                self.expect_true(is_regular(n, k, m, S, BLACK) == is_regular(n, k, m, rest, WHITE),
                                 "black regularity of S differs from white regularity of the complement"),
            ])

        if case.label == PSI_SHIFT:
            shifted = _shifted(n, S)
            a, b = psi(n, m), psi(n, k)
            return first_failure([
                self.expect_true(is_regular(n, k, m, S, color) == is_regular(n, a, b, shifted, color),
                                 f"{color} regularity changes under the psi shift")
                for color in (WHITE, BLACK)
            ])

        if case.label == STAR:
            mirrored = star(Scheme(n, k, m, S))
            outcomes = [self.expect_true(bool(regular_colors(n, mirrored.k, mirrored.m, mirrored.S)),
                                         f"star scheme {mirrored} is not regular")]
            for sign in (POSITIVE, NEGATIVE):
                outcomes.append(self.expect_proportional(
                    ctx, phi(spec, k, m, S, sign), phi(spec, mirrored.k, mirrored.m, mirrored.S, sign)))
            return first_failure(outcomes)

        if case.label in (RESTRICT_WHITE, RESTRICT_BLACK):
            return self._check_restriction(n, k, m, S, case.label)

        if case.label == LEFT_SPLIT:
            t = payload["t"]
            rhs = bracket(spec, phi(spec, k, t, S), phi(spec, 1 + t, m, S))
            return self.expect_proportional(ctx, phi(spec, k, m, S), rhs)

        if case.label == RIGHT_SPLIT:
            s = payload["t"]
            rhs = bracket(spec, phi(spec, 1 + s, m, S), phi(spec, k, s, S))
            return self.expect_proportional(ctx, phi(spec, k, m, S), rhs)

        image = multiply(spec, Element.group(GroupElement.g_range(n, k, m)), antipode(spec, phi(spec, k, m, S)))
        return first_failure([
            self.expect_proportional(ctx, image, phi(spec, psi(n, m), psi(n, k), _shifted(n, S))),
            self.expect_proportional(ctx, image, phi(spec, k, m, complement(k, m, S))),
        ])

    def _check_restriction(self, n: int, k: int, m: int, S, label: str) -> CaseOutcome:
        """Регулярность S на подынтервалах [1+t, s] по цветам концевых точек."""
        coloring = Scheme(n, k, m, S).coloring()
        outcomes = []
        for t in range(k - 1, m):
            for s in range(t + 1, m + 1):
                if label == RESTRICT_WHITE:
                    if coloring[s] != BLACK:
                        continue
                    probe = psi(n, t) - 1
                    color = WHITE
                    expected = coloring.get(probe) == WHITE or not t <= probe <= s
                else:
                    if coloring[t] != WHITE:
                        continue
                    probe = psi(n, s) - 1
                    color = BLACK
                    expected = coloring.get(probe) == BLACK or not t <= probe <= s
                actual = is_regular(n, 1 + t, s, S, color)
                outcomes.append(self.expect_true(actual == expected,
                                                 f"{color} regularity on [{1 + t},{s}]", actual, expected))
        return first_failure(outcomes)
