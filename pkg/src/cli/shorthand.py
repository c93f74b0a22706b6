"""
Сокращенная запись элементов для командной строки.

    u k m          u[k,m]
    phi k m {S}    Φ^S(k,m); пустое S записывается как {} или _
    x i            буква x_i, индекс 1..2n сворачивается
    h i, g i, f i  групповые элементы
    [a, b]         косой коммутатор
    a * b, a + b, a - b, 2/3 * a, (a)

Минус вплотную после атома (u 1 2-, x1-) означает отрицательную копию.
Бинарный минус отделяется пробелами. Разбор рекурсивным спуском:
каждая функция parse_* возвращает (элемент, неразобранный остаток).
"""

import json
import re
from pathlib import Path
from typing import Tuple

from pydantic import ValidationError

from src.algebra.freealg import Element, bracket, multiply, substitute_negative
from src.algebra.generators import phi, u_bracket
from src.algebra.group import GroupElement, fold
from src.algebra.params import ParamSpec
from src.exceptions.cli_exceptions import InputFormatError, ShorthandSyntaxError
from src.schemas.algebra_schemas import element_from_json
from src.utils.string_utils import parse_fraction, parse_int_list

_INT_RE = re.compile(r'\s*(\d+)')
_NUMBER_RE = re.compile(r'\d+(?:/\d+)?')
_NAME_RE = re.compile(r'(phi|u|x|h|g|f)(?![a-z])')
_SET_RE = re.compile(r'\s*(\{[\d,\s]*\}|_)')

_GROUPS = {"h": GroupElement.h_i, "g": GroupElement.g_i, "f": GroupElement.f_i}

Parsed = Tuple[Element, str]


def _take_int(s: str) -> Tuple[int, str]:
    match = _INT_RE.match(s)
    if match is None:
        raise ShorthandSyntaxError("expected an index", s)
    return int(match.group(1)), s[match.end():]


def parse_atom(s: str, spec: ParamSpec) -> Parsed:
    s = s.lstrip()
    if not s:
        raise ShorthandSyntaxError("unexpected end of input")
    if s[0] == '[':
        return parse_bracket(s, spec)
    if s[0] == '(':
        inner, rest = parse_sum(s[1:], spec)
        rest = rest.lstrip()
        if not rest.startswith(')'):
            raise ShorthandSyntaxError("missing ')'", rest)
        return inner, rest[1:]

    match = _NAME_RE.match(s)
    if match is None:
        raise ShorthandSyntaxError("cannot parse", s)
    name, rest = match.group(1), s[match.end():]
    n = spec.n

    if name in ("u", "phi"):
        k, rest = _take_int(rest)
        m, rest = _take_int(rest)
        if name == "u":
            return u_bracket(spec, k, m), rest
        set_match = _SET_RE.match(rest)
        if set_match is None:
            raise ShorthandSyntaxError("expected a set in braces or '_'", rest)
        return phi(spec, k, m, parse_int_list(set_match.group(1))), rest[set_match.end():]

    index, rest = _take_int(rest)
    if name == "x":
        if not 1 <= index <= 2 * n:
            raise ShorthandSyntaxError(f"letter index {index} outside 1..{2 * n}", s)
        return Element.letter(n, fold(n, index)), rest
    if not 1 <= index <= n:
        raise ShorthandSyntaxError(f"group index {index} outside 1..{n}", s)
    return Element.group(_GROUPS[name](n, index)), rest


def parse_bracket(s: str, spec: ParamSpec) -> Parsed:
    """[a, b] -> косой коммутатор."""
    assert s[0] == '['
    left, rest = parse_sum(s[1:], spec)
    rest = rest.lstrip()
    if not rest.startswith(','):
        raise ShorthandSyntaxError("expected ',' inside a bracket", rest)
    right, rest = parse_sum(rest[1:], spec)
    rest = rest.lstrip()
    if not rest.startswith(']'):
        raise ShorthandSyntaxError("missing ']'", rest)
    return bracket(spec, left, right), rest[1:]


def parse_factor(s: str, spec: ParamSpec) -> Parsed:
    s = s.lstrip()
    match = _NUMBER_RE.match(s)
    if match is not None:
        return Element.scalar(spec.n, parse_fraction(match.group(0))), s[match.end():]
    value, rest = parse_atom(s, spec)
    if rest.startswith('-'):
        if not value.is_pure_positive():
            raise ShorthandSyntaxError("a trailing '-' needs a purely positive element", rest)
        value, rest = substitute_negative(value), rest[1:]
    return value, rest


def parse_product(s: str, spec: ParamSpec) -> Parsed:
    value, s = parse_factor(s, spec)
    while True:
        stripped = s.lstrip()
        if not stripped.startswith('*'):
            return value, s
        factor, s = parse_factor(stripped[1:], spec)
        value = multiply(spec, value, factor)


def parse_sum(s: str, spec: ParamSpec) -> Parsed:
    s = s.lstrip()
    negate = s.startswith('-')
    if negate:
        s = s[1:]
    value, s = parse_product(s, spec)
    if negate:
        value = -value
    while True:
        stripped = s.lstrip()
        if not stripped[:1] or stripped[0] not in '+-':
            return value, s
        term, s = parse_product(stripped[1:], spec)
        value = value + term if stripped[0] == '+' else value - term


def from_string(text: str, spec: ParamSpec) -> Element:
    """Разобрать всю строку; остаток после выражения считается ошибкой."""
    value, rest = parse_sum(text, spec)
    if rest.strip():
        raise ShorthandSyntaxError("unexpected trailing input", rest.strip())
    return value


def parse_element(text: str, spec: ParamSpec) -> Element:
    """
    Элемент из аргумента командной строки.

    '@path' читает JSON из файла; строка, разбираемая как JSON (список термов
    или один терм), читается по схеме TermModel; все остальное считается
    сокращенной записью.
    """
    text = text.strip()
    if text.startswith('@'):
        path = Path(text[1:])
        if not path.is_file():
            raise InputFormatError(f"element file {path} not found")
        text = path.read_text(encoding="utf-8").strip()

    data = None
    if text[:1] in ('[', '{'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = None
    if data is None:
        return from_string(text, spec)

    if isinstance(data, dict):
        data = [data]
    try:
        return element_from_json(spec.n, data)
    except (ValidationError, ValueError, TypeError) as exc:
        raise InputFormatError(f"malformed element JSON: {exc}") from exc
