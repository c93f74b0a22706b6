"""
Тесты для реестра наборов, загрузчика конфигураций и запуска наборов.

Запуск тестов:
    pytest src/tests/test_verify.py -v
    pytest src/tests/test_verify.py -v -m "not slow"
"""

import logging
from fractions import Fraction

import pytest

from src.algebra.borel import get_quotient
from src.algebra.generators import u_bracket
from src.exceptions.verify_exceptions import ConfigurationError, SuiteNotFoundError
from src.verify.base_suite import FAILED, SuiteCase, SuiteContext
from src.verify.runner import ALL, RunOptions, run_suite, run_suites, select_cases, specializations
from src.verify.suite_config_loader import SuiteConfigLoader, get_suite_config_loader
from src.verify.suite_registry import get_suite_registry

logger = logging.getLogger(__name__)

SUITES = [
    "borel_basics", "bracket_identities", "checker_consistency", "coideal_roots", "counts",
    "cross_values", "derivative_tables", "dualities", "hopf_structure", "ladder",
    "mixed_pairings", "parameter_constraints", "single_letter_brackets", "strong_schemes", "vanishing",
]


@pytest.fixture
def options() -> RunOptions:
    return RunOptions(jobs=2, specializations=1, show_progress=False)


class TestRegistryUnit:
    """
    Unit тесты реестра и конфигураций.
    """

    @pytest.mark.unit
    def test_all_suites_registered(self):
        """
        Тест обнаружения всех наборов.
        """
        registry = get_suite_registry()
        assert registry.list_suites() == SUITES, f"Unexpected suites: {registry.list_suites()}"
        assert get_suite_registry() is registry, "Registry should be a singleton"
        logger.info("✓ Registry test passed")

    @pytest.mark.unit
    def test_unknown_suite(self):
        """
        Тест ошибки для неизвестного набора.
        """
        with pytest.raises(SuiteNotFoundError) as info:
            get_suite_registry().get_suite("does_not_exist")
        assert "counts" in str(info.value), "Error should list the available suites"
        logger.info("✓ Unknown suite test passed")

    @pytest.mark.unit
    def test_config_loader(self):
        """
        Тест поиска конфигураций по snake_case и CamelCase.
        """
        loader = get_suite_config_loader()
        counts = loader.get_config_for_suite("counts")
        assert counts.supported_ranks == [1, 2, 3, 4], "counts supports ranks 1..4"
        assert loader.get_config_for_suite("CountsSuite") is counts, "CamelCase name should resolve"
        assert loader.get_config_for_suite("nothing_here") is None, "Unknown name gives None"
        assert loader.get_default_config().settings["sample_cap"] == 5000, "Default config should be loaded"

        bracket = loader.get_config_for_suite("bracket_identities")
        assert bracket.is_sampled(3) and not bracket.is_sampled(2), "Rank 3 is sampled, rank 2 exhaustive"
        logger.info("✓ Config loader test passed")

    @pytest.mark.unit
    def test_config_reload(self, tmp_path):
        """
        Тест перечитывания YAML после изменения файла.
        """
        path = tmp_path / "demo_suite.yaml"
        path.write_text('suite_name: "demo"\ndescription: "first"\nranks:\n  exhaustive: [2]\n', encoding="utf-8")
        loader = SuiteConfigLoader(str(tmp_path))
        assert loader.get_config_for_suite("demo").description == "first", "Config should be loaded lazily"

        path.write_text('suite_name: "demo"\ndescription: "second"\nranks:\n  exhaustive: [2, 3]\n', encoding="utf-8")
        assert loader.get_config_for_suite("demo").description == "first", "Configs are cached until reload"
        loader.reload_configs()
        reloaded = loader.get_config_for_suite("demo")
        assert reloaded.description == "second", "Reload should pick up the new file"
        assert reloaded.supported_ranks == [2, 3], "Reload should pick up the new ranks"
        logger.info("✓ Config reload test passed")


class TestSplitExceptionsUnit:
    """
    Unit тесты отрицательных проверок borel_basics.
    """

    @pytest.fixture
    def borel_context(self, spec2):
        suite = get_suite_registry().get_suite("borel_basics")
        ctx = SuiteContext(spec=spec2, quotient=get_quotient(spec2), seed=0, settings=suite.get_config().settings)
        return suite, ctx

    @pytest.mark.unit
    def test_exceptional_splits_are_enumerated(self, borel_context):
        """
        Тест: исключительные разбиения u[k,m] входят в перечень случаев.
        """
        suite, ctx = borel_context
        found = sorted((c.payload["k"], c.payload["i"], c.payload["m"])
                       for c in suite.cases(ctx) if c.label == "split_exception_fails")
        assert found == [(1, 1, 3), (2, 3, 4)], f"Unexpected exceptional splits: {found}"
        logger.info("✓ Exceptional splits enumeration test passed")

    @pytest.mark.unit
    def test_exceptional_splits_fail_as_equalities(self, borel_context):
        """
        Тест: [u[k,i], u[i+1,m]] ≠ u[k,m] в исключительных точках.
        """
        suite, ctx = borel_context
        exceptional = [c for c in suite.cases(ctx) if c.label == "split_exception_fails"]
        assert exceptional, "Exceptional splits should be checked"
        for case in exceptional:
            outcome = suite.check(ctx, case)
            assert outcome.passed, f"Split {case.payload} should not hold: {outcome.message}"
        logger.info("✓ Exceptional splits inequality test passed")

    @pytest.mark.unit
    def test_not_equal_reports_agreement(self, borel_context):
        """
        Тест отрицательного исхода: совпадающие стороны дают провал.
        """
        suite, ctx = borel_context
        u13 = u_bracket(ctx.spec, 1, 3)
        outcome = suite.expect_not_equal(ctx, u13, u13.scale(1))
        assert outcome.status == FAILED, "Equal sides should fail an inequality check"
        assert outcome.message == "sides unexpectedly agree", f"Unexpected message: {outcome.message}"
        logger.info("✓ Inequality failure test passed")


class TestSamplingUnit:
    """
    Unit тесты выборки случаев и специализаций.
    """

    @pytest.mark.unit
    def test_exhaustive_and_sampled(self):
        """
        Тест перехода от перебора к детерминированной выборке.
        """
        cases = [SuiteCase(key=(i,), label="case") for i in range(10)]
        chosen, policy = select_cases(cases, RunOptions(sample_exhaustive_limit=20, sample_size=4), seed=0)
        assert len(chosen) == 10 and policy == "exhaustive (10 cases)", "Small sets are exhaustive"

        small = RunOptions(sample_exhaustive_limit=5, sample_size=4)
        first, policy = select_cases(cases, small, seed=3)
        again, _ = select_cases(list(reversed(cases)), small, seed=3)
        assert len(first) == 4 and policy.startswith("seeded sample of 4 from 10"), f"Unexpected policy {policy}"
        assert first == again, "Sample should not depend on the input order"

        capped, policy = select_cases(cases, RunOptions(sample_exhaustive_limit=20, sample_size=4), seed=0, cap=3)
        assert len(capped) == 3, "Suite cap should bound the sample"
        logger.info("✓ Sampling test passed")

    @pytest.mark.unit
    def test_specializations(self):
        """
        Тест различных q у специализаций.
        """
        specs = specializations(2, "2", seed=0, count=3)
        assert [s.q for s in specs] == [Fraction(2), Fraction(3), Fraction(3, 2)], "q values are wrong"
        assert specializations(2, "3", count=2)[1].q == Fraction(3, 2), "Requested q is not repeated"
        logger.info("✓ Specializations test passed")


class TestRunnerIntegration:
    """
    Integration тесты запуска наборов.
    """

    @pytest.mark.integration
    @pytest.mark.parametrize("name", ["counts", "parameter_constraints"])
    def test_cheap_suites_pass(self, spec2, options, name):
        """
        Тест наборов без тяжелой алгебры на n = 2.
        """
        report = run_suite(get_suite_registry().get_suite(name), spec2, seed=0, options=options)
        assert report.passed, f"{name} failed: {report.failures[:3]}"
        assert report.sampling.startswith("exhaustive ("), "Rank 2 should be exhaustive"
        assert report.spec["n"] == 2, "Fingerprint should carry the rank"
        logger.info(f"✓ {name} suite test passed")

    @pytest.mark.integration
    def test_counts_report(self, spec2, options):
        """
        Тест отчета counts: три случая, все пройдены.
        """
        report = run_suite(get_suite_registry().get_suite("counts"), spec2, options=options)
        assert (report.cases_total, report.cases_run, report.passed_cases) == (3, 3, 3), "Counts should be 3/3/3"
        logger.info("✓ Counts report test passed")

    @pytest.mark.integration
    def test_unsupported_rank(self, options):
        """
        Тест ошибки при явном наборе и неподдерживаемом ранге.
        """
        with pytest.raises(ConfigurationError):
            run_suites(["counts"], n=5, options=options)
        logger.info("✓ Unsupported rank test passed")

    @pytest.mark.integration
    def test_checker_consistency_rank_two(self, options):
        """
        Тест согласованности проверки пар схем на n = 2.
        """
        run = run_suites(["checker_consistency"], n=2, options=options)
        assert run.passed, f"Failures: {[r.failures[:3] for r in run.reports]}"
        assert run.out_of_scope, "Out-of-scope items should be listed"
        logger.info("✓ Checker consistency n=2 test passed")

    @pytest.mark.slow
    def test_checker_consistency_rank_three(self, options):
        """
        Тест согласованности на n = 3.
        """
        run = run_suites(["checker_consistency"], n=3, options=options)
        assert run.passed, f"Failures: {[r.failures[:3] for r in run.reports]}"
        logger.info("✓ Checker consistency n=3 test passed")

    @pytest.mark.slow
    def test_all_suites_rank_four(self, options):
        """
        Тест режима all на n = 4: неподдерживающие наборы пропускаются с замечанием.
        """
        run = run_suites([ALL], n=4, options=options)
        assert {r.suite for r in run.reports} == {"counts", "derivative_tables", "parameter_constraints"}, \
            "Only rank 4 suites should run"
        assert "ladder: skipped, rank 4 not supported" in run.notes, "Skipped suites should be noted"
        assert run.passed, "Rank 4 suites should pass"
        logger.info("✓ All suites n=4 test passed")
