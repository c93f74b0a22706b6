"""
Инкрементальный приведенный ступенчатый вид над Fraction для разреженных векторов.

Векторы хранятся как dict: базисное слово -> коэффициент.
"""

from fractions import Fraction
from typing import Dict, Hashable, Iterable, Optional

SparseVector = Dict[Hashable, Fraction]


class EchelonBasis:
    """
    Полностью приведенный базис: у каждой строки ведущий коэффициент 1,
    и ведущее слово строки не встречается в других строках.
    """

    def __init__(self):
        self.rows: Dict[Hashable, SparseVector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Нормальная форма: вычесть строки по всем ведущим словам в носителе."""
        result = dict(vector)
        for pivot in [w for w in vector if w in self.rows]:
            coeff = result.get(pivot)
            if not coeff:
                continue
            for word, c in self.rows[pivot].items():
                value = result.get(word, Fraction(0)) - coeff * c
                if value:
                    result[word] = value
                else:
                    result.pop(word, None)
        return result

    def add(self, vector: SparseVector) -> Optional[Hashable]:
        """Добавить вектор; вернуть новое ведущее слово или None, если он зависим."""
        residue = self.reduce(vector)
        if not residue:
            return None
        pivot = min(residue)
        lead = residue[pivot]
        row = {w: c / lead for w, c in residue.items()}
        for other_pivot, other in self.rows.items():
            coeff = other.get(pivot)
            if not coeff:
                continue
            for word, c in row.items():
                value = other.get(word, Fraction(0)) - coeff * c
                if value:
                    other[word] = value
                else:
                    other.pop(word, None)
        self.rows[pivot] = row
        return pivot

    def extend(self, vectors: Iterable[SparseVector]) -> int:
        added = 0
        for vector in vectors:
            if self.add(vector) is not None:
                added += 1
        return added
