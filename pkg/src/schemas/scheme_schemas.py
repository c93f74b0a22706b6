"""
Pydantic схемы для черно-белых схем и вердиктов по парам схем.
"""

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from src.combinatorics.schemes import PairVerdict, Scheme


class SchemeModel(BaseModel):
    """Схема (k, m, S) со знаком."""

    sign: Literal["positive", "negative"] = Field("positive", description="Знак схемы")
    k: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    set: List[int] = Field(default_factory=list, description="Черные внутренние точки")

    @field_validator('set')
    @classmethod
    def validate_set(cls, v: List[int]) -> List[int]:
        """Множество без повторов, в порядке возрастания."""
        return sorted(set(v))

    @classmethod
    def from_scheme(cls, sch: Scheme) -> 'SchemeModel':
        return cls(sign=sch.sign, k=sch.k, m=sch.m, set=sorted(sch.S))

    def to_scheme(self, n: int) -> Scheme:
        return Scheme(n, self.k, self.m, frozenset(self.set), self.sign)


class PairVerdictModel(BaseModel):
    """Вердикт проверки необходимого условия для пары схем."""

    passes: bool
    all_balanced: bool
    gra3_witness: Optional[str] = None
    overlays: Dict[str, List[Tuple[int, Optional[str], Optional[str]]]]

    @classmethod
    def from_verdict(cls, verdict: PairVerdict) -> 'PairVerdictModel':
        return cls(
            passes=verdict.passes,
            all_balanced=verdict.all_balanced,
            gra3_witness=verdict.gra3_witness,
            overlays={variant: [list(c) for c in cols] for variant, cols in verdict.overlays.items()},
        )
