"""
Корни правых коидеальных подалгебр U^S(k,m): моноид Σ по схеме,
простые корни, вложенность подалгебр по моноидам, ядерная форма
и дифференциальная замкнутость.
"""

import itertools
import logging
from typing import List, Tuple

from src.algebra.calculus import D, derive, integrability_check
from src.algebra.freealg import Element
from src.algebra.generators import folded_interval, phi
from src.algebra.group import psi
from src.algebra.params import word_counts
from src.algebra.sigma import SigmaMonoid
from src.combinatorics.schemes import BLACK, WHITE, Scheme, scheme_is_regular, sigma_generators
from src.verify.base_suite import BaseSuite, CaseOutcome, SuiteCase, SuiteContext, first_failure
from src.verify.enumeration import regular_scheme_list, words

logger = logging.getLogger(__name__)

GENERATOR = "generator_in_own_monoid"
SIMPLE_WHITE = "simple_root_white"
SIMPLE_BLACK = "simple_root_black"
SUBGENERATOR = "subinterval_generator"
LATTICE = "inclusion_by_monoids"
KERNEL = "kernel_form"
CLOSED = "differentially_closed"


def white_black_pairs(sch: Scheme) -> List[Tuple[int, int]]:
    """Пары (t, s): белая точка t левее черной точки s."""
    coloring = sch.coloring()
    return [(t, s) for t, s in itertools.combinations(sorted(coloring), 2)
            if coloring[t] == WHITE and coloring[s] == BLACK]


class CoidealRootsSuite(BaseSuite):

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        n = ctx.n
        schemes = regular_scheme_list(n)
        cases: List[SuiteCase] = []
        for a, sch in enumerate(schemes):
            payload = {"scheme": str(sch), "index": a}
            cases.append(SuiteCase(key=(GENERATOR, a), label=GENERATOR, payload=payload))
            cases.append(SuiteCase(key=(KERNEL, a), label=KERNEL, payload=payload))
            coloring = sch.coloring()
            for t, s in white_black_pairs(sch):
                pair_payload = {**payload, "t": t, "s": s}
                if scheme_is_regular(sch, WHITE) and coloring.get(psi(n, 1 + t)) != BLACK:
                    cases.append(SuiteCase(key=(SIMPLE_WHITE, a, t, s), label=SIMPLE_WHITE, payload=pair_payload))
                if scheme_is_regular(sch, BLACK) and coloring.get(psi(n, 1 + s)) != WHITE:
                    cases.append(SuiteCase(key=(SIMPLE_BLACK, a, t, s), label=SIMPLE_BLACK, payload=pair_payload))
                if not t < n < s:
                    cases.append(SuiteCase(key=(SUBGENERATOR, a, t, s), label=SUBGENERATOR, payload=pair_payload))
            for b in range(len(schemes)):
                cases.append(SuiteCase(key=(LATTICE, a, b), label=LATTICE, payload={**payload, "other": b}))

        max_len = int(ctx.option("closure_word_length", 3))
        for a, sch in enumerate(schemes):
            mon = sigma_generators(sch)
            for word in words(n, max_len):
                if not mon.contains(word_counts(n, word)):
                    continue
                cases.append(SuiteCase(key=(CLOSED, a, word), label=CLOSED,
                                       payload={"index": a, "word": list(word)}))
        logger.debug(f"{len(schemes)} regular schemes at n={n}")
        return cases

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        spec, n = ctx.spec, ctx.n
        sch = regular_scheme_list(n)[case.key[1]]
        mon = sigma_generators(sch)
        f = phi(spec, sch.k, sch.m, sch.S)

        if case.label == GENERATOR:
            verdict = integrability_check(ctx.quotient, mon, f)
            return first_failure([
                self.expect_true(mon.contains(folded_interval(n, sch.k, sch.m)), f"[k:m] of {sch} is not in its monoid"),
                self.expect_true(verdict.passed, f"generator of {sch} fails integrability: {verdict.witness}"),
            ])

        if case.label in (SIMPLE_WHITE, SIMPLE_BLACK, SUBGENERATOR):
            t, s = case.payload["t"], case.payload["s"]
            sub = phi(spec, 1 + t, s, sch.S)
            verdict = integrability_check(ctx.quotient, mon, sub)
            outcomes = [self.expect_true(verdict.passed, f"Φ({1 + t},{s}) is outside U of {sch}: {verdict.witness}")]
            if case.label != SUBGENERATOR:
                outcomes.insert(0, self.expect_true(mon.is_indecomposable(folded_interval(n, 1 + t, s)),
                                                    f"[{1 + t}:{s}] is not a simple root of {sch}"))
            return first_failure(outcomes)

        if case.label == LATTICE:
            other = regular_scheme_list(n)[case.payload["other"]]
            other_mon = sigma_generators(other)
            included = all(other_mon.contains(g) for g in mon.generators)
            verdict = integrability_check(ctx.quotient, other_mon, f)
            return self.expect_true(verdict.passed == included,
                                    f"membership of Φ{sch} in U{other} disagrees with monoid inclusion",
                                    verdict.passed, included)

        if case.label == KERNEL:
            return self._check_kernel(ctx, mon, f)

        word = tuple(case.payload["word"])
        g = ctx.quotient.reduce(Element.word(n, word))
        if g.is_zero():
            return CaseOutcome.skip(f"word {word} vanishes in the quotient")
        children = [ctx.quotient.reduce(derive(spec, g, i, D)) for i in range(1, n + 1)]
        if not all(integrability_check(ctx.quotient, mon, child).passed for child in children):
            return CaseOutcome.ok()
        verdict = integrability_check(ctx.quotient, mon, g)
        return self.expect_true(verdict.passed, f"derivatives of {word} are in U but the word is not")

    def _check_kernel(self, ctx: SuiteContext, mon: SigmaMonoid, f: Element) -> CaseOutcome:
        """∂_u f = 0 для всех слов u с D(f) вне Σ + D(u)."""
        spec, n = ctx.spec, ctx.n
        (gamma,) = f.chi_weights()
        for word in words(n, sum(gamma)):
            rest = tuple(a - b for a, b in zip(gamma, word_counts(n, word)))
            if min(rest) >= 0 and mon.contains(rest):
                continue
            g = f
            for i in reversed(word):
                g = ctx.quotient.reduce(derive(spec, g, i, D))
                if g.is_zero():
                    break
            if not g.is_zero():
                return CaseOutcome.fail(f"derivative along {word} survives", str(g), "0")
        return CaseOutcome.ok()
