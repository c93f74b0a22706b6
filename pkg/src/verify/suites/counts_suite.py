"""
Число корневых последовательностей и число пар правых коидеальных подалгебр.
"""

from math import factorial
from typing import List

from src.combinatorics.roots import (
    count_root_sequences,
    count_subalgebra_pairs,
    enumerate_root_sequences,
    is_root_sequence,
)
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure


class CountsSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        return [
            SuiteCase(key=(ctx.n, "count"), label="root_sequence_count"),
            SuiteCase(key=(ctx.n, "pairs"), label="pair_count"),
            SuiteCase(key=(ctx.n, "enumeration"), label="enumeration_agrees"),
        ]

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        n = ctx.n
        weyl_order = 2 ** n * factorial(n)
        if case.label == "root_sequence_count":
            known = {int(k): v for k, v in (ctx.option("known_counts") or {}).items()}
            outcomes = [self.expect_true(count_root_sequences(n) == weyl_order,
                                         "count differs from 2^n n!", count_root_sequences(n), weyl_order)]
            if n in known:
                outcomes.append(self.expect_true(count_root_sequences(n) == known[n],
                                                 "count differs from the tabulated value",
                                                 count_root_sequences(n), known[n]))
            return first_failure(outcomes)
        if case.label == "pair_count":
            return self.expect_true(count_subalgebra_pairs(n) == weyl_order ** 2,
                                    "pair count differs from |W|^2", count_subalgebra_pairs(n), weyl_order ** 2)

        sequences = list(enumerate_root_sequences(n))
        outcomes = [
            self.expect_true(len(sequences) == weyl_order, "enumeration size mismatch", len(sequences), weyl_order),
            self.expect_true(len(set(sequences)) == len(sequences), "enumeration repeats a sequence"),
            self.expect_true(all(is_root_sequence(n, theta) for theta in sequences),
                             "enumeration produced an invalid sequence"),
        ]
        return first_failure(outcomes)
