"""
Согласованность комбинаторных проверок: регулярность по определению и по
сдвинутой схеме, инвариантность наложений относительно ρ, отрисовка схем.
"""

from typing import List

from src.combinatorics.schemes import (
    BLACK,
    FLAT,
    NEGATIVE,
    POSITIVE,
    RHO_PARTNER,
    SHIFTED,
    TWO_LINE,
    VARIANTS,
    WHITE,
    Scheme,
    SchemePair,
    all_subsets,
    bale_check,
    has_gra3_form,
    is_balanced,
    is_regular,
    is_strong,
    overlay_columns,
    regular_sets,
    render,
    rho_pair,
    shifted_black_ok,
    shifted_white_ok,
    star,
)
from src.exceptions.algebra_exceptions import StyleNotApplicable
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure
from src.verify.enumeration import intervals, regular_scheme_list

CENSUS = "regularity_census"
RHO = "rho_invariance"
RENDER = "render_styles"


KNOWN_CENSUS = {
    # (n, k, m): (белые, черные)
    (2, 1, 3): ([frozenset()], [frozenset({1, 2})]),
}


class CheckerConsistencySuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        cases: List[SuiteCase] = []
        for k, m in intervals(n):
            cases.append(SuiteCase(key=(RENDER, k, m), label=RENDER, payload={"k": k, "m": m}))
            if k <= n < m:
                cases.append(SuiteCase(key=(CENSUS, k, m), label=CENSUS, payload={"k": k, "m": m}))

        positives = regular_scheme_list(n, POSITIVE)
        negatives = regular_scheme_list(n, NEGATIVE)
        rng = ctx.rng("rho")
        trials = int(ctx.option("trials", 500))
        total = len(positives) * len(negatives)
        if total <= trials:
            picks = [(a, b) for a in range(len(positives)) for b in range(len(negatives))]
        else:
            picks = sorted({(rng.randrange(len(positives)), rng.randrange(len(negatives))) for _ in range(trials)})
        for a, b in picks:
            cases.append(SuiteCase(key=(RHO, a, b), label=RHO,
                                   payload={"pos": str(positives[a]), "neg": str(negatives[b])}))
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        n = ctx.n
        if case.label == CENSUS:
            return self._check_census(n, case.payload["k"], case.payload["m"])
        if case.label == RENDER:
            return self._check_render(n, case.payload["k"], case.payload["m"])

        pos = regular_scheme_list(n, POSITIVE)[case.key[1]]
        neg = regular_scheme_list(n, NEGATIVE)[case.key[2]]
        pair = SchemePair(pos, neg)
        outcomes = []
        for variant in VARIANTS:
            columns = overlay_columns(pair, variant)
            partner = overlay_columns(pair, RHO_PARTNER[variant])
            outcomes.append(self.expect_true(rho_pair(pair, variant) == partner,
                                             f"rho does not map {variant} onto {RHO_PARTNER[variant]}"))
            outcomes.append(self.expect_true(is_balanced(columns) == is_balanced(partner),
                                             f"balance of {variant} and its rho partner differ"))
            outcomes.append(self.expect_true(has_gra3_form(columns) == has_gra3_form(partner),
                                             f"opposite-color form of {variant} and its rho partner differ"))
            outcomes.append(self.expect_true(is_strong(columns) == is_strong(partner),
                                             f"strength of {variant} and its rho partner differ"))
        verdict = bale_check(pair)
        for swapped in (SchemePair(star(pos), neg), SchemePair(pos, star(neg))):
            outcomes.append(self.expect_true(bale_check(swapped).passes == verdict.passes,
                                             "necessary condition changes under star"))
        return first_failure(outcomes)

    def _check_census(self, n: int, k: int, m: int) -> CaseOutcome:
        subsets = all_subsets(k, m)
        white = [s for s in subsets if shifted_white_ok(n, k, m, s)]
        black = [s for s in subsets if shifted_black_ok(n, k, m, s)]
        outcomes = [
            self.expect_true(set(regular_sets(n, k, m, WHITE)) == set(white),
                             "white regular sets differ from the shifted scheme test",
                             sorted(map(sorted, regular_sets(n, k, m, WHITE))), sorted(map(sorted, white))),
            self.expect_true(set(regular_sets(n, k, m, BLACK)) == set(black),
                             "black regular sets differ from the shifted scheme test",
                             sorted(map(sorted, regular_sets(n, k, m, BLACK))), sorted(map(sorted, black))),
        ]
        known = KNOWN_CENSUS.get((n, k, m))
        if known:
            outcomes.append(self.expect_true(
                (regular_sets(n, k, m, WHITE), regular_sets(n, k, m, BLACK)) == known,
                "census differs from the known table"))
        for s in subsets:
            if not is_regular(n, k, m, s, WHITE) and not is_regular(n, k, m, s, BLACK):
                continue
            outcomes.append(self.expect_true(not (is_regular(n, k, m, s, WHITE) and is_regular(n, k, m, s, BLACK)),
                                             f"{sorted(s)} is regular of both colors on a proper interval"))
        return first_failure(outcomes)

    def _check_render(self, n: int, k: int, m: int) -> CaseOutcome:
        sch = Scheme(n, k, m)
        outcomes = []
        flat = render(sch, FLAT)
        outcomes.append(self.expect_true(flat.split() == [f"{t}:{'∘' if t < m else '●'}" for t in sch.labels],
                                         "flat rendering of an empty set", flat))
        for style in (TWO_LINE, SHIFTED):
            if k <= n < m:
                text = render(sch, style)
                lines = text.split("\n")
                outcomes.append(self.expect_true(len(lines) == 2, f"{style} rendering needs two rows", text))
                outcomes.append(self.expect_true(render(sch, style) == text, f"{style} rendering is unstable"))
                if style == SHIFTED:
                    outcomes.append(self.expect_true(text.count(f"{n}:") == 2,
                                                     "shifted rendering shows the point n twice", text))
            else:
                try:
                    render(sch, style)
                except StyleNotApplicable:
                    continue
                outcomes.append(CaseOutcome.fail(f"{style} rendering accepted an interval off the middle"))
        return first_failure(outcomes)
