"""
Pydantic схемы отчетов проверочных наборов.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class CaseFailure(BaseModel):
    """Неудачный случай с полными входными данными и обеими сторонами."""

    key: List[Any] = Field(..., description="Ключ случая")
    label: str = Field(..., description="Метка тождества")
    inputs: Dict[str, Any] = Field(default_factory=dict)
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    message: str = ""


class CaseSkip(BaseModel):
    """Пропущенный случай с причиной."""

    key: List[Any]
    label: str
    reason: str


class SuiteReport(BaseModel):
    """Отчет одного набора на одной специализации параметров."""

    suite: str
    description: str = ""
    spec: Dict[str, Any] = Field(..., description="Отпечаток параметров: n, q, свободные p_ij")
    seed: int
    sampling: str = Field(..., description="Политика выборки")
    cases_total: int
    cases_run: int
    passed_cases: int
    failures: List[CaseFailure] = Field(default_factory=list)
    skipped: List[CaseSkip] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    wall_time: float = Field(..., ge=0, description="Время выполнения в секундах")

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures


class VerifyRun(BaseModel):
    """Сводка по всем запрошенным наборам."""

    reports: List[SuiteReport]
    out_of_scope: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list, description="Пропущенные наборы и прочие замечания")

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)
