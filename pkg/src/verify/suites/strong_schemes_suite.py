"""
Пары регулярных схем: сильные наложения дают нулевую скобку,
наложение вида (∘ ... ●) с противоположными цветами дает элемент групповой алгебры.
"""

import logging
from typing import List

from src.algebra.freealg import bracket
from src.algebra.generators import phi, phi_minus
from src.combinatorics.schemes import (
    NEGATIVE,
    ST,
    ST_STAR,
    POSITIVE,
    SchemePair,
    bale_check,
    is_strong,
    overlay_columns,
)
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext
from src.verify.enumeration import regular_scheme_list
from src.verify.suites.cross_values_suite import one_minus_h

logger = logging.getLogger(__name__)

STRONG = "strong_overlays_vanish"
OPPOSITE = "opposite_overlay_in_group_algebra"


class StrongSchemesSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        positives = regular_scheme_list(n, POSITIVE)
        negatives = regular_scheme_list(n, NEGATIVE)
        cases: List[SuiteCase] = []
        for a, pos in enumerate(positives):
            for b, neg in enumerate(negatives):
                pair = SchemePair(pos, neg)
                payload = {"pos": str(pos), "neg": str(neg), "a": a, "b": b}
                if is_strong(overlay_columns(pair, ST)) and is_strong(overlay_columns(pair, ST_STAR)):
                    cases.append(SuiteCase(key=(STRONG, a, b), label=STRONG, payload=payload))
                elif bale_check(pair).gra3_witness is not None:
                    cases.append(SuiteCase(key=(OPPOSITE, a, b), label=OPPOSITE, payload=payload))
        logger.debug(f"{len(cases)} scheme pairs with a determined bracket at n={n}")
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        pos = regular_scheme_list(n, POSITIVE)[case.key[1]]
        neg = regular_scheme_list(n, NEGATIVE)[case.key[2]]
        lhs = bracket(spec, phi(spec, pos.k, pos.m, pos.S), phi_minus(spec, neg.k, neg.m, neg.S))
        if case.label == STRONG:
            return self.expect_zero(ctx, lhs, f"bracket of {pos} and {neg}")
        return self.expect_proportional(ctx, lhs, one_minus_h(n, pos.k, pos.m))
