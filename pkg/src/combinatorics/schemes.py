"""
Комбинаторика черно-белых схем: регулярность, двойственности, отрисовка,
четыре наложения для пары схем, сбалансированность и проверка необходимого условия.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from src.algebra.group import psi
from src.algebra.sigma import SigmaMonoid
from src.exceptions.algebra_exceptions import IndexRangeError, NotRegularError, StyleNotApplicable

logger = logging.getLogger(__name__)

WHITE = "white"
BLACK = "black"
POSITIVE = "positive"
NEGATIVE = "negative"

FLAT = "flat"
TWO_LINE = "two_line"
SHIFTED = "shifted"
STYLES = (FLAT, TWO_LINE, SHIFTED)

ST = "ST"
ST_STAR = "ST*"
S_STAR_T = "S*T"
S_STAR_T_STAR = "S*T*"
VARIANTS = (ST, ST_STAR, S_STAR_T, S_STAR_T_STAR)

GLYPHS = {WHITE: "∘", BLACK: "●"}

Column = Tuple[int, Optional[str], Optional[str]]


def flip(color: Optional[str]) -> Optional[str]:
    if color is None:
        return None
    return BLACK if color == WHITE else WHITE


@dataclass(frozen=True)
class Scheme:
    """Тройка (k, m, S) ранга n; S хранится обрезанным до [k, m)."""

    n: int
    k: int
    m: int
    S: FrozenSet[int] = field(default_factory=frozenset)
    sign: str = POSITIVE

    def __post_init__(self):
        if not (1 <= self.k <= self.m <= 2 * self.n):
            raise IndexRangeError(f"scheme interval [{self.k},{self.m}] is outside 1..{2 * self.n}")
        object.__setattr__(self, "S", frozenset(t for t in self.S if self.k <= t < self.m))

    @property
    def labels(self) -> range:
        return range(self.k - 1, self.m + 1)

    def color(self, label: int) -> str:
        if label == self.k - 1:
            return WHITE
        if label == self.m:
            return BLACK
        return BLACK if label in self.S else WHITE

    def coloring(self) -> Dict[int, str]:
        return {label: self.color(label) for label in self.labels}

    def with_sign(self, sign: str) -> 'Scheme':
        return Scheme(self.n, self.k, self.m, self.S, sign)

    def __str__(self) -> str:
        body = ",".join(str(s) for s in sorted(self.S))
        return f"({self.k},{self.m},{{{body}}})"


# region Regularity
def is_regular(n: int, k: int, m: int, S: Iterable[int], color: str) -> bool:
    """Дословная проверка определения (k,m)-регулярности белого или черного цвета."""
    if not (1 <= k <= m <= 2 * n):
        raise IndexRangeError(f"interval [{k},{m}] is outside 1..{2 * n}")
    if m <= n or k > n:
        return True
    if m == psi(n, k):
        return False
    s = {t for t in S if k <= t < m}
    if color == WHITE:
        marked = s | {k - 1, m}
        for i in range(k - 1, m):
            if k <= psi(n, i) <= m + 1 and i in marked and psi(n, i) - 1 in marked:
                return False
        return True
    inner = s - {k - 1, m}
    for i in range(k, m + 1):
        if k <= psi(n, i) <= m + 1 and i not in inner and psi(n, i) - 1 not in inner:
            return False
    return True


def scheme_is_regular(sch: Scheme, color: Optional[str] = None) -> bool:
    if color is None:
        return is_regular(sch.n, sch.k, sch.m, sch.S, WHITE) or is_regular(sch.n, sch.k, sch.m, sch.S, BLACK)
    return is_regular(sch.n, sch.k, sch.m, sch.S, color)


def all_subsets(k: int, m: int) -> List[FrozenSet[int]]:
    points = list(range(k, m))
    subsets = []
    for mask in range(1 << len(points)):
        subsets.append(frozenset(p for bit, p in enumerate(points) if mask >> bit & 1))
    return subsets


def regular_sets(n: int, k: int, m: int, color: str) -> List[FrozenSet[int]]:
    """Перебор всех S ⊆ [k,m), регулярных данного цвета."""
    found = [s for s in all_subsets(k, m) if is_regular(n, k, m, s, color)]
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def shifted_columns(n: int, k: int, m: int, coloring: Dict[int, str]) -> List[Tuple[int, str, str]]:
    """Полные столбцы сдвинутой схемы: нижняя точка c, верхняя 2n-c."""
    columns = []
    for c in range(k - 1, n + 1):
        upper = 2 * n - c
        if n <= upper <= m and upper in coloring and c in coloring:
            columns.append((c, coloring[c], coloring[upper]))
    return columns


def shifted_white_ok(n: int, k: int, m: int, S: Iterable[int]) -> bool:
    """С перекрашенной в черный точкой k-1 нет черно-черных столбцов."""
    coloring = Scheme(n, k, m, frozenset(S)).coloring()
    coloring[k - 1] = BLACK
    return all(not (a == BLACK and b == BLACK) for _, a, b in shifted_columns(n, k, m, coloring))


def shifted_black_ok(n: int, k: int, m: int, S: Iterable[int]) -> bool:
    """С перекрашенной в белый точкой m нет бело-белых столбцов."""
    coloring = Scheme(n, k, m, frozenset(S)).coloring()
    coloring[m] = WHITE
    return all(not (a == WHITE and b == WHITE) for _, a, b in shifted_columns(n, k, m, coloring))
# endregion


# region Dualities
def complement_dual(sch: Scheme) -> Scheme:
    """(k, m, [k,m) \\ S)."""
    return Scheme(sch.n, sch.k, sch.m, frozenset(range(sch.k, sch.m)) - sch.S, sch.sign)


def psi_shift(sch: Scheme) -> Scheme:
    """(ψ(m), ψ(k), ψ(S)-1) без дополнения."""
    n = sch.n
    return Scheme(n, psi(n, sch.m), psi(n, sch.k), frozenset(psi(n, s) - 1 for s in sch.S), sch.sign)


def star(sch: Scheme) -> Scheme:
    """(ψ(m), ψ(k), дополнение ψ(S)-1 в [ψ(m), ψ(k)))."""
    return complement_dual(psi_shift(sch))
# endregion


# region Rendering
def _cell(label: Optional[int], color: Optional[str], width: int) -> str:
    if label is None:
        return " " * width
    return f"{label}:{GLYPHS[color]}".ljust(width)


def render(sch: Scheme, style: str = FLAT) -> str:
    """ASCII-схема в стиле flat, two_line или shifted."""
    if style not in STYLES:
        raise StyleNotApplicable(f"unknown style {style!r}")
    coloring = sch.coloring()
    if style == FLAT:
        return " ".join(f"{label}:{GLYPHS[color]}" for label, color in coloring.items())

    n = sch.n
    if not (sch.k <= n < sch.m):
        raise StyleNotApplicable(f"style {style} needs k <= n < m, got {sch}")

    upper: Dict[int, int] = {}
    for j in range(n + 1, sch.m + 1):
        column = psi(n, j) if style == TWO_LINE else psi(n, j) - 1
        upper[column] = j
    if style == SHIFTED:
        upper[n] = n
    lower = {c: c for c in range(sch.k - 1, n + 1)}

    columns = sorted(set(upper) | set(lower))
    width = max(len(f"{label}:∘") for label in coloring) + 1
    top = "".join(_cell(upper.get(c), coloring.get(upper.get(c)), width) for c in columns).rstrip()
    bottom = "".join(_cell(lower.get(c), coloring.get(lower.get(c)), width) for c in columns).rstrip()
    return f"{top}\n{bottom}"
# endregion


# region Pairs and overlays
@dataclass(frozen=True)
class SchemePair:
    """Положительная схема (k,m,S) и отрицательная (i,j,T)."""

    pos: Scheme
    neg: Scheme

    def __post_init__(self):
        if self.pos.n != self.neg.n:
            raise IndexRangeError("schemes of a pair must have the same rank")
        object.__setattr__(self, "pos", self.pos.with_sign(POSITIVE))
        object.__setattr__(self, "neg", self.neg.with_sign(NEGATIVE))

    @property
    def n(self) -> int:
        return self.pos.n


def overlay_columns(pair: SchemePair, variant: str) -> List[Column]:
    """Столбцы наложения: метки, где хотя бы в одной строке есть точка."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown overlay {variant!r}")
    top = star(pair.pos) if variant in (S_STAR_T, S_STAR_T_STAR) else pair.pos
    bottom = star(pair.neg) if variant in (ST_STAR, S_STAR_T_STAR) else pair.neg
    top_colors, bottom_colors = top.coloring(), bottom.coloring()
    labels = sorted(set(top_colors) | set(bottom_colors))
    return [(label, top_colors.get(label), bottom_colors.get(label)) for label in labels]


def _complete(columns: List[Column]) -> List[Column]:
    return [c for c in columns if c[1] is not None and c[2] is not None]


def is_balanced(columns: List[Column]) -> bool:
    """Нет полного бело-белого столбца строго левее полного черно-черного."""
    seen_white_pair = False
    for _, top, bottom in _complete(columns):
        if top == BLACK and bottom == BLACK and seen_white_pair:
            return False
        if top == WHITE and bottom == WHITE:
            seen_white_pair = True
    return True


def has_gra3_form(columns: List[Column]) -> bool:
    """Строки совпадают по протяженности, края (w,w) и (b,b), внутри цвета противоположны."""
    if len(columns) < 2 or len(_complete(columns)) != len(columns):
        return False
    first, last = columns[0], columns[-1]
    if (first[1], first[2]) != (WHITE, WHITE) or (last[1], last[2]) != (BLACK, BLACK):
        return False
    return all(top != bottom for _, top, bottom in columns[1:-1])


def is_strongly_white(columns: List[Column]) -> bool:
    complete = _complete(columns)
    if any(t == BLACK and b == BLACK for _, t, b in complete):
        return False
    if not columns or (columns[0][1] is not None and columns[0][2] is not None):
        return False
    if len(complete) >= 2 and (complete[0][1], complete[0][2]) != (WHITE, WHITE):
        return False
    return True


def is_strongly_black(columns: List[Column]) -> bool:
    complete = _complete(columns)
    if any(t == WHITE and b == WHITE for _, t, b in complete):
        return False
    if not columns or (columns[-1][1] is not None and columns[-1][2] is not None):
        return False
    if len(complete) >= 2 and (complete[-1][1], complete[-1][2]) != (BLACK, BLACK):
        return False
    return True


def is_strong(columns: List[Column]) -> bool:
    return is_strongly_white(columns) or is_strongly_black(columns)


def rho_columns(n: int, columns: List[Column]) -> List[Column]:
    """Соответствие ρ: метка a -> ψ(a)-1 = 2n-a, цвета меняются местами."""
    mapped = [(2 * n - label, flip(top), flip(bottom)) for label, top, bottom in columns]
    return sorted(mapped, key=lambda c: c[0])


RHO_PARTNER = {ST: S_STAR_T_STAR, S_STAR_T_STAR: ST, ST_STAR: S_STAR_T, S_STAR_T: ST_STAR}


def rho_pair(pair: SchemePair, variant: str) -> List[Column]:
    """Образ наложения variant при ρ; совпадает с наложением RHO_PARTNER[variant]."""
    return rho_columns(pair.n, overlay_columns(pair, variant))


@dataclass
class PairVerdict:
    passes: bool
    all_balanced: bool
    gra3_witness: Optional[str]
    overlays: Dict[str, List[Column]]
    balanced: Dict[str, bool]
    gra3: Dict[str, bool]


def bale_check(pair: SchemePair) -> PairVerdict:
    """Все четыре наложения сбалансированы, либо одно из них имеет вид gra3."""
    for sch in (pair.pos, pair.neg):
        if not scheme_is_regular(sch):
            raise NotRegularError(sch, f"{sch.sign} scheme {sch} is neither white nor black regular")
    overlays = {variant: overlay_columns(pair, variant) for variant in VARIANTS}
    balanced = {variant: is_balanced(cols) for variant, cols in overlays.items()}
    gra3 = {variant: has_gra3_form(cols) for variant, cols in overlays.items()}
    witness = next((variant for variant in VARIANTS if gra3[variant]), None)
    all_balanced = all(balanced.values())
    return PairVerdict(
        passes=all_balanced or witness is not None,
        all_balanced=all_balanced,
        gra3_witness=witness,
        overlays=overlays,
        balanced=balanced,
        gra3=gra3,
    )


def regular_schemes(n: int, sign: str = POSITIVE) -> List[Scheme]:
    """Все схемы ранга n с регулярным (белым или черным) множеством."""
    found = []
    for k in range(1, 2 * n + 1):
        for m in range(k, 2 * n + 1):
            for s in all_subsets(k, m):
                if is_regular(n, k, m, s, WHITE) or is_regular(n, k, m, s, BLACK):
                    found.append(Scheme(n, k, m, s, sign))
    return found
# endregion


def sigma_generators(sch: Scheme) -> SigmaMonoid:
    """Степени [1+t:s] для каждой белой точки t левее черной точки s."""
    from src.algebra.generators import folded_interval

    coloring = sch.coloring()
    whites = [t for t, c in coloring.items() if c == WHITE]
    blacks = [s for s, c in coloring.items() if c == BLACK]
    degrees = {folded_interval(sch.n, t + 1, s) for t in whites for s in blacks if t < s}
    return SigmaMonoid(degrees)
