"""
Запуск проверочных наборов: специализации параметров, выборка случаев,
параллельная проверка и сборка отчета.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter
from typing import Any, Dict, List, Optional, Sequence

from tqdm import tqdm

from src.algebra.borel import get_quotient
from src.algebra.params import ParamSpec, make_spec
from src.config.app_config import settings
from src.config.verify_config import verify_settings
from src.exceptions import BaseError
from src.exceptions.algebra_exceptions import DegreeBudgetExceeded
from src.exceptions.verify_exceptions import ConfigurationError
from src.schemas.report_schemas import CaseFailure, CaseSkip, SuiteReport, VerifyRun
from src.utils.string_utils import format_fraction, parse_fraction
from src.utils.timing import log_duration
from src.verify.base_suite import FAILED, SKIPPED, BaseSuite, CaseOutcome, SuiteCase, SuiteContext
from src.verify.suite_registry import get_suite_registry

logger = logging.getLogger(__name__)

ALL = "all"

OUT_OF_SCOPE = [
    "percentage table of right coideal subalgebras for type A (needs external C_n data)",
    "end-to-end subalgebra closure for generator pairs (needs the generator construction algorithm)",
]

_EXTRA_Q = (Fraction(3), Fraction(3, 2), Fraction(5), Fraction(2, 5), Fraction(7, 3))


@dataclass
class RunOptions:
    """Параметры запуска; значения по умолчанию берутся из verify_settings."""

    jobs: int = field(default_factory=lambda: verify_settings.JOBS)
    trials: int = field(default_factory=lambda: verify_settings.TRIALS)
    sample_exhaustive_limit: int = field(default_factory=lambda: verify_settings.SAMPLE_EXHAUSTIVE_LIMIT)
    sample_size: int = field(default_factory=lambda: verify_settings.SAMPLE_SIZE)
    specializations: int = field(default_factory=lambda: verify_settings.SPECIALIZATIONS)
    show_progress: bool = field(default_factory=lambda: verify_settings.SHOW_PROGRESS)
    max_degree: int = field(default_factory=lambda: settings.MAX_DEGREE)


def specializations(n: int, q: Any = None, seed: int = 0, count: int = 3) -> List[ParamSpec]:
    """
    Несколько различных специализаций ранга n: первая с заданным q,
    остальные с q из фиксированного списка; зерно свободных p_ij растет на 1.
    """
    first = parse_fraction(settings.DEFAULT_Q if q is None else q)
    qs = [first] + [value for value in _EXTRA_Q if value != first]
    return [make_spec(n, qs[i % len(qs)], seed=seed + i) for i in range(max(1, count))]


def _jsonable(value: Any) -> Any:
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _key_text(case: SuiteCase) -> str:
    return f"{case.label}|{_jsonable(case.key)}"


def select_cases(cases: Sequence[SuiteCase], options: RunOptions, seed: int, cap: Optional[int] = None):
    """
    Исчерпывающий перебор при числе случаев не больше лимита,
    иначе детерминированная выборка.

    :param cap: Лимит набора для выборочных рангов
    :return: (выбранные случаи, описание политики)
    """
    ordered = sorted(cases, key=_key_text)
    limit = options.sample_exhaustive_limit if cap is None else min(cap, options.sample_exhaustive_limit)
    if len(ordered) <= limit:
        return ordered, f"exhaustive ({len(ordered)} cases)"
    size = min(limit, options.sample_size)
    chosen = random.Random(seed).sample(range(len(ordered)), size)
    picked = [ordered[i] for i in sorted(chosen)]
    return picked, f"seeded sample of {size} from {len(ordered)} cases (seed {seed})"


def _run_case(suite: BaseSuite, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
    try:
        return suite.check(ctx, case)
    except DegreeBudgetExceeded as e:
        return CaseOutcome.skip(str(e))
    except BaseError as e:
        logger.error(f"{suite.get_suite_name()} {case.label} {case.key}: {e}", exc_info=True)
        return CaseOutcome.fail(str(e))
    except Exception as e:
        logger.error(f"Unexpected error in {suite.get_suite_name()} {case.label} {case.key}: {e}", exc_info=True)
        return CaseOutcome.fail(f"{e.__class__.__name__}: {e}")


def run_suite(
    suite: BaseSuite,
    spec: ParamSpec,
    seed: int = 0,
    options: Optional[RunOptions] = None,
) -> SuiteReport:
    """
    Выполнить один набор на одной специализации параметров.

    :raises ConfigurationError: если ранг не поддерживается набором
    """
    options = options or RunOptions()
    config = suite.get_config()
    name = suite.get_suite_name()
    if not config.supports_rank(spec.n):
        raise ConfigurationError(
            f"suite '{name}' supports ranks {config.supported_ranks}, got n={spec.n}"
        )

    ctx = SuiteContext(
        spec=spec,
        quotient=get_quotient(spec, options.max_degree),
        seed=seed,
        settings={"trials": options.trials, **config.settings},
    )

    start = perf_counter()
    with log_duration(f"Suite {name} on {spec}", logger):
        cap = config.settings.get("sample_cap") if config.is_sampled(spec.n) else None
        chosen, policy = select_cases(suite.cases(ctx), options, seed, cap)

        def work(case: SuiteCase) -> CaseOutcome:
            return _run_case(suite, ctx, case)

        with ThreadPoolExecutor(max_workers=max(1, options.jobs)) as pool:
            results = pool.map(work, chosen)
            if options.show_progress:
                results = tqdm(results, total=len(chosen), desc=name, leave=False)
            outcomes = list(results)

    failures, skipped = [], []
    for case, outcome in zip(chosen, outcomes):
        if outcome.status == FAILED:
            failures.append(CaseFailure(
                key=_jsonable(case.key),
                label=case.label,
                inputs=_jsonable(case.payload),
                lhs=outcome.lhs,
                rhs=outcome.rhs,
                message=outcome.message,
            ))
        elif outcome.status == SKIPPED:
            skipped.append(CaseSkip(key=_jsonable(case.key), label=case.label, reason=outcome.message))

    report = SuiteReport(
        suite=name,
        description=config.description,
        spec=spec.fingerprint(),
        seed=seed,
        sampling=policy,
        cases_total=len(chosen),
        cases_run=len(chosen) - len(skipped),
        passed_cases=len(chosen) - len(skipped) - len(failures),
        failures=failures,
        skipped=skipped,
        notes=suite.notes(ctx),
        wall_time=perf_counter() - start,
    )
    if failures:
        logger.warning(f"Suite {name}: {len(failures)} failures on {spec}")
    return report


def run_suites(
    names: Sequence[str],
    n: int,
    q: Any = None,
    seed: int = 0,
    options: Optional[RunOptions] = None,
    spec: Optional[ParamSpec] = None,
) -> VerifyRun:
    """
    Выполнить наборы на нескольких специализациях ранга n.

    При явном spec используется только он. В режиме ALL наборы,
    не поддерживающие ранг, пропускаются с замечанием.
    """
    options = options or RunOptions()
    registry = get_suite_registry()
    explicit = list(names) != [ALL]
    selected = list(names) if explicit else registry.list_suites()
    specs = [spec] if spec is not None else specializations(n, q, seed, options.specializations)

    reports: List[SuiteReport] = []
    notes: List[str] = []
    for suite_name in selected:
        suite = registry.get_suite(suite_name)
        if not suite.get_config().supports_rank(n):
            if explicit:
                raise ConfigurationError(
                    f"suite '{suite_name}' supports ranks {suite.get_config().supported_ranks}, got n={n}"
                )
            notes.append(f"{suite_name}: skipped, rank {n} not supported")
            continue
        for index, current in enumerate(specs):
            reports.append(run_suite(suite, current, seed + index, options))

    return VerifyRun(reports=reports, out_of_scope=list(OUT_OF_SCOPE), notes=notes)


def report_summary(run: VerifyRun) -> Dict[str, Any]:
    """Краткая сводка для журнала."""
    return {
        "suites": len({r.suite for r in run.reports}),
        "reports": len(run.reports),
        "failures": sum(len(r.failures) for r in run.reports),
        "skipped": sum(len(r.skipped) for r in run.reports),
        "passed": run.passed,
    }
