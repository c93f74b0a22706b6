import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from src.algebra.borel import BorelQuotient, proportionality
from src.algebra.freealg import Element, TensorElement, format_element
from src.algebra.params import ParamSpec, word_counts
from src.utils.string_utils import format_fraction, to_snake_case
from src.verify.suite_config_loader import SuiteConfig

PASSED = "passed"
FAILED = "failed"
SKIPPED = "skipped"


@dataclass
class SuiteCase:
    """Один проверяемый случай: ключ для сортировки, метка тождества и входные данные."""

    key: Tuple
    label: str
    payload: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CaseOutcome:
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    message: str = ""

    @classmethod
    def ok(cls) -> 'CaseOutcome':
        return cls(PASSED)

    @classmethod
    def fail(cls, message: str, lhs: Optional[str] = None, rhs: Optional[str] = None) -> 'CaseOutcome':
        return cls(FAILED, lhs, rhs, message)

    @classmethod
    def skip(cls, message: str) -> 'CaseOutcome':
        return cls(SKIPPED, message=message)

    @property
    def passed(self) -> bool:
        return self.status == PASSED


@dataclass
class SuiteContext:
    """Все, что нужно набору для построения и проверки случаев на одной специализации."""

    spec: ParamSpec
    quotient: BorelQuotient
    seed: int
    settings: Dict[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.spec.n

    def rng(self, salt: str = "") -> random.Random:
        """Генератор, детерминированный по seed и соли."""
        return random.Random(f"{self.seed}:{salt}")

    def option(self, name: str, default: Any = None) -> Any:
        return self.settings.get(name, default)


ComponentKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def component_key(n: int, term) -> ComponentKey:
    return word_counts(n, term.neg), word_counts(n, term.pos)


def split_components(n: int, a: Element) -> Dict[ComponentKey, Element]:
    """Разбиение элемента на компоненты по паре (отрицательная, положительная) мультистепеней."""
    parts: Dict[ComponentKey, Dict] = {}
    for term, coeff in a.items():
        parts.setdefault(component_key(n, term), {})[term] = coeff
    return {key: Element(terms) for key, terms in parts.items()}


class BaseSuite:
    """Базовый класс для всех проверочных наборов."""

    def __init__(self):
        self._config: Optional[SuiteConfig] = None

    def getName(self) -> str:
        """Возвращает имя набора, которое является именем класса."""
        return self.__class__.__name__

    def get_suite_name(self) -> str:
        """'CrossValuesSuite' -> 'cross_values'"""
        name = self.getName()
        if name.endswith('Suite'):
            name = name[:-5]
        return to_snake_case(name)

    def get_config(self) -> SuiteConfig:
        """
        Конфигурация набора из src/config/suites/<name>_suite.yaml.
        Если файл не найден, используется default_suite.yaml.
        """
        if self._config is None:
            # Импортируем здесь чтобы избежать циклических импортов
            from src.verify.suite_config_loader import get_suite_config_loader

            loader = get_suite_config_loader()
            self._config = loader.get_config_for_suite(self.get_suite_name()) or loader.get_default_config()
        return self._config

    @property
    def description(self) -> str:
        return self.get_config().description

    def cases(self, ctx: SuiteContext) -> List[SuiteCase]:
        """Перечисление всех допустимых случаев на данной специализации."""
        raise NotImplementedError("Метод cases должен быть реализован в подклассе.")

    def check(self, ctx: SuiteContext, case: SuiteCase) -> CaseOutcome:
        """Проверка одного случая."""
        raise NotImplementedError("Метод check должен быть реализован в подклассе.")

    def notes(self, ctx: SuiteContext) -> List[str]:
        """Дополнительные замечания для отчета."""
        return []

    #region Помощники сравнения
    def expect_zero(self, ctx: SuiteContext, a: Element, what: str = "") -> CaseOutcome:
        reduced = ctx.quotient.reduce(a)
        if reduced.is_zero():
            return CaseOutcome.ok()
        return CaseOutcome.fail(f"{what or 'element'} does not vanish", format_element(reduced), "0")

    def expect_equal(self, ctx: SuiteContext, lhs: Element, rhs: Element) -> CaseOutcome:
        left, right = ctx.quotient.reduce(lhs), ctx.quotient.reduce(rhs)
        if left == right:
            return CaseOutcome.ok()
        return CaseOutcome.fail("sides differ", format_element(left), format_element(right))

    def expect_identical(self, lhs: Element, rhs: Element) -> CaseOutcome:
        """Равенство в свободной алгебре, без редукции."""
        if lhs == rhs:
            return CaseOutcome.ok()
        return CaseOutcome.fail("sides differ in the free algebra", format_element(lhs), format_element(rhs))

    def expect_proportional(self, ctx: SuiteContext, lhs: Element, rhs: Element) -> CaseOutcome:
        """lhs = α·rhs с α ≠ 0; обе стороны должны быть ненулевыми."""
        alpha = ctx.quotient.is_proportional(lhs, rhs)
        if alpha is None:
            return CaseOutcome.fail("sides are not proportional", format_element(lhs), format_element(rhs))
        if ctx.quotient.is_zero(rhs):
            return CaseOutcome.fail("zero side in a proportionality", format_element(lhs), format_element(rhs))
        return CaseOutcome.ok()

    def expect_tensor_equal(self, ctx: SuiteContext, lhs: TensorElement, rhs: TensorElement) -> CaseOutcome:
        if ctx.quotient.tensor_equals(lhs, rhs):
            return CaseOutcome.ok()
        return CaseOutcome.fail("tensors differ", repr(ctx.quotient.reduce_tensor(lhs - rhs)), "0")

    def expect_not_equal(self, ctx: SuiteContext, lhs: Element, rhs: Element) -> CaseOutcome:
        left, right = ctx.quotient.reduce(lhs), ctx.quotient.reduce(rhs)
        if left != right:
            return CaseOutcome.ok()
        return CaseOutcome.fail("sides unexpectedly agree", format_element(left), format_element(right))

    def expect_true(self, flag: bool, message: str, lhs: Any = None, rhs: Any = None) -> CaseOutcome:
        if flag:
            return CaseOutcome.ok()
        return CaseOutcome.fail(message, None if lhs is None else str(lhs), None if rhs is None else str(rhs))

    def expect_scalar(self, actual: Fraction, expected: Fraction) -> CaseOutcome:
        if actual == expected:
            return CaseOutcome.ok()
        return CaseOutcome.fail("scalar mismatch", format_fraction(actual), format_fraction(expected))

    def expect_expansion(
        self,
        ctx: SuiteContext,
        lhs: Element,
        parts: Dict[Any, Element],
        nonzero: Iterable[Any],
    ) -> CaseOutcome:
        """
        lhs = Σ α_b·parts[b] в факторе, где α_b ≠ 0 ровно при b из nonzero.

        Слагаемые должны иметь попарно различные мультистепени, поэтому
        коэффициенты находятся покомпонентно.
        """
        n = ctx.n
        wanted = set(nonzero)
        components = split_components(n, ctx.quotient.reduce(lhs))
        claimed = set()
        for label, part in parts.items():
            reduced = ctx.quotient.reduce(part)
            if reduced.is_zero():
                if label in wanted:
                    return CaseOutcome.fail(f"summand {label} vanishes in the quotient")
                continue
            keys = set(split_components(n, reduced))
            if len(keys) != 1:
                return CaseOutcome.fail(f"summand {label} is not homogeneous")
            key = keys.pop()
            claimed.add(key)
            piece = components.get(key, Element())
            if piece.is_zero():
                if label in wanted:
                    return CaseOutcome.fail(f"coefficient at {label} is zero", "0", format_element(reduced))
                continue
            if label not in wanted:
                return CaseOutcome.fail(f"coefficient at {label} is nonzero", format_element(piece), "0")
            if proportionality(piece, reduced) is None:
                return CaseOutcome.fail(f"component {label} is not a multiple of the summand",
                                        format_element(piece), format_element(reduced))
        stray = [key for key in components if key not in claimed]
        if stray:
            return CaseOutcome.fail("terms outside the stated sum", format_element(components[stray[0]]))
        return CaseOutcome.ok()
    #endregion


def first_failure(outcomes: Iterable[CaseOutcome]) -> CaseOutcome:
    """Первый неуспешный исход либо успех."""
    for outcome in outcomes:
        if not outcome.passed:
            return outcome
    return CaseOutcome.ok()
