"""
Pydantic схемы для JSON-представления параметров и элементов алгебры.

Рациональные числа передаются строками "num/den".
"""

from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from src.algebra.freealg import Element, MixedTerm, TensorElement
from src.algebra.group import GroupElement
from src.algebra.params import ParamSpec, spec_from_matrix
from src.utils.string_utils import format_fraction, parse_fraction


def _validate_fraction(v: object) -> str:
    try:
        return format_fraction(parse_fraction(v))
    except ValueError as exc:
        raise ValueError(f"Ожидалось рациональное число, получено {v!r}") from exc


class ParamSpecModel(BaseModel):
    """Данные квантования: ранг, q и полная матрица p_ij."""

    n: int = Field(..., ge=1, description="Ранг")
    q: str = Field(..., description="Параметр q в виде num/den")
    p: List[List[str]] = Field(..., description="Матрица p_ij построчно")

    @field_validator('q', mode='before')
    @classmethod
    def validate_q(cls, v: object) -> str:
        """Проверка формата q."""
        return _validate_fraction(v)

    @field_validator('p', mode='before')
    @classmethod
    def validate_matrix(cls, v: object) -> List[List[str]]:
        """Проверка, что матрица состоит из рациональных чисел."""
        if not isinstance(v, list) or not all(isinstance(row, list) for row in v):
            raise ValueError("Матрица должна быть списком строк")
        return [[_validate_fraction(x) for x in row] for row in v]

    @classmethod
    def from_spec(cls, spec: ParamSpec) -> 'ParamSpecModel':
        return cls(
            n=spec.n,
            q=format_fraction(spec.q),
            p=[[format_fraction(x) for x in row] for row in spec.p],
        )

    def to_spec(self) -> ParamSpec:
        return spec_from_matrix(self.n, parse_fraction(self.q), [[parse_fraction(x) for x in row] for row in self.p])


class GroupModel(BaseModel):
    g: List[int] = Field(..., description="Показатели при g_1..g_n")
    f: List[int] = Field(..., description="Показатели при f_1..f_n")


class TermModel(BaseModel):
    """Треугольный терм с коэффициентом."""

    coeff: str = Field(..., description="Коэффициент num/den")
    neg: List[int] = Field(default_factory=list, description="Индексы отрицательного слова")
    grp: GroupModel
    pos: List[int] = Field(default_factory=list, description="Индексы положительного слова")

    @field_validator('coeff', mode='before')
    @classmethod
    def validate_coeff(cls, v: object) -> str:
        return _validate_fraction(v)


def term_to_model(term: MixedTerm, coeff: Fraction) -> TermModel:
    return TermModel(
        coeff=format_fraction(coeff),
        neg=list(term.neg),
        grp=GroupModel(g=list(term.grp.g), f=list(term.grp.f)),
        pos=list(term.pos),
    )


def _model_to_term(n: int, model: TermModel) -> MixedTerm:
    if len(model.grp.g) != n or len(model.grp.f) != n:
        raise ValueError(f"Групповая часть должна иметь длину {n}")
    for letter in model.neg + model.pos:
        if not 1 <= letter <= n:
            raise ValueError(f"Индекс буквы {letter} вне 1..{n}")
    return MixedTerm(tuple(model.neg), GroupElement(tuple(model.grp.g), tuple(model.grp.f)), tuple(model.pos))


def element_to_json(a: Element) -> List[Dict]:
    return [term_to_model(term, coeff).model_dump() for term, coeff in a.sorted_items()]


def element_from_json(n: int, data: List[Dict]) -> Element:
    acc: Dict[MixedTerm, Fraction] = {}
    for raw in data:
        model = TermModel.model_validate(raw)
        term = _model_to_term(n, model)
        acc[term] = acc.get(term, Fraction(0)) + parse_fraction(model.coeff)
    return Element(acc)


class TensorTermModel(BaseModel):
    coeff: str
    left: TermModel
    right: TermModel


def tensor_to_json(t: TensorElement) -> List[Dict]:
    out = []
    for (left, right), coeff in t.sorted_items():
        out.append(TensorTermModel(
            coeff=format_fraction(coeff),
            left=term_to_model(left, Fraction(1)),
            right=term_to_model(right, Fraction(1)),
        ).model_dump())
    return out


class VerdictModel(BaseModel):
    """Результат проверки тождества."""

    passed: bool = Field(..., alias="pass", description="Тождество выполнено")
    witness: Optional[str] = Field(None, description="Контрпример при неудаче")

    model_config = {"populate_by_name": True}
