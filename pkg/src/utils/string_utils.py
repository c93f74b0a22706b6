import re
from fractions import Fraction
from typing import List, Union


def to_snake_case(name: str) -> str:
    """
    Преобразует строку из CamelCase в snake_case.
    Например, 'BracketIdentitiesSuite' -> 'bracket_identities_suite'.
    """
    s1 = re.sub('(.)([A-Z][a-z]+)', r'\1_\2', name)
    return re.sub('([a-z0-9])([A-Z])', r'\1_\2', s1).lower()


_FRACTION_RE = re.compile(r'^\s*[-+]?\d+(\s*/\s*[-+]?\d+)?\s*$')


def parse_fraction(value: Union[str, int, Fraction]) -> Fraction:
    """
    Разобрать рациональное число из "a", "a/b", int или Fraction.

    :raises ValueError: если строка не является рациональным числом
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _FRACTION_RE.match(value):
        raise ValueError(f"not a rational number: {value!r}")
    return Fraction(value.replace(" ", ""))


def format_fraction(value: Fraction) -> str:
    """Всегда в виде "num/den"."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_int_list(text: str) -> List[int]:
    """'1,2,3' -> [1, 2, 3]; пустая строка или '_' дают []."""
    text = text.strip().strip("{}")
    if text in ("", "_"):
        return []
    return [int(part) for part in text.split(",") if part.strip()]
