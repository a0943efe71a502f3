"""
精確有理數單形法（兩階段、Bland 規則）

內部使用整數 tableau（fraction-free pivoting）：真正的 tableau 等於
D / delta，其中 delta 為目前基底的行列式，恆保持 delta > 0。
對外的輸入輸出一律是 fractions.Fraction。
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import List, Literal, Optional, Sequence, Tuple, Union

from models.errors import DimensionMismatchError, InternalConsistencyError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
LPStatus = Literal['feasible', 'infeasible', 'optimal', 'unbounded']


@dataclass(frozen=True)
class RationalMatrix:
    """有理數矩陣（矩形、維度為正）"""
    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Number]]) -> 'RationalMatrix':
        if not data or not data[0]:
            raise DimensionMismatchError("matrix must have positive dimensions")
        width = len(data[0])
        for row in data:
            if len(row) != width:
                raise DimensionMismatchError("matrix rows have different lengths")
        entries = tuple(tuple(Fraction(x) for x in row) for row in data)
        return cls(len(entries), width, entries)

    @classmethod
    def coerce(cls, data: Union['RationalMatrix', Sequence[Sequence[Number]]]) -> 'RationalMatrix':
        return data if isinstance(data, RationalMatrix) else cls.from_rows(data)

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def apply(self, x: Sequence[Number]) -> Tuple[Fraction, ...]:
        if len(x) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(x)} for {self.cols} columns")
        return tuple(sum((a * v for a, v in zip(r, x)), Fraction(0)) for r in self.entries)


@dataclass(frozen=True)
class LPOutcome:
    """線性規劃結果；witness 代回約束式必定精確成立"""
    status: LPStatus
    witness: Tuple[Fraction, ...] = ()
    objective: Optional[Fraction] = None
    pivots: int = 0

    @property
    def is_feasible(self) -> bool:
        return self.status in ('feasible', 'optimal', 'unbounded')


class _IntegerTableau:
    """Integer tableau D with denominator delta; last column is the rhs, last row the objective."""

    def __init__(self, rows: List[List[int]], basis: List[int], ceiling: int):
        self.D = rows
        self.basis = basis
        self.delta = 1
        self.pivots = 0
        self.ceiling = ceiling

    @property
    def m(self) -> int:
        return len(self.basis)

    def pivot(self, r: int, c: int):
        self.pivots += 1
        if self.pivots > self.ceiling:
            raise InternalConsistencyError(f"simplex pivot ceiling {self.ceiling} reached (cycling?)")
        D = self.D
        p = D[r][c]
        pr = D[r]
        delta = self.delta
        for i, row in enumerate(D):
            if i == r:
                continue
            f = row[c]
            if f == 0:
                D[i] = [(p * a) // delta for a in row]
            else:
                D[i] = [(p * a - f * b) // delta for a, b in zip(row, pr)]
        self.delta = p
        self.basis[r] = c
        if self.delta < 0:
            self.D = [[-a for a in row] for row in self.D]
            self.delta = -self.delta

    def bland(self, allowed: Sequence[bool]) -> Literal['optimal', 'unbounded']:
        """以 Bland 規則迭代至最優（目標列無負的 reduced cost）"""
        z = self.m
        while True:
            obj = self.D[z]
            entering = next((j for j, ok in enumerate(allowed) if ok and obj[j] < 0), None)
            if entering is None:
                return 'optimal'
            leave = None
            for i in range(self.m):
                a = self.D[i][entering]
                if a <= 0:
                    continue
                rhs = self.D[i][-1]
                if leave is None:
                    leave = i
                    continue
                la = self.D[leave][entering]
                lr = self.D[leave][-1]
                # rhs/a < lr/la，平手取基變數編號較小者
                lhs_cmp = rhs * la
                rhs_cmp = lr * a
                if lhs_cmp < rhs_cmp or (lhs_cmp == rhs_cmp and self.basis[i] < self.basis[leave]):
                    leave = i
            if leave is None:
                return 'unbounded'
            self.pivot(leave, entering)

    def drop_row(self, r: int):
        del self.D[r]
        del self.basis[r]

    def solution(self, ncols: int) -> List[Fraction]:
        x = [Fraction(0)] * ncols
        for i, j in enumerate(self.basis):
            if j < ncols:
                x[j] = Fraction(self.D[i][-1], self.delta)
        return x


def _integer_rows(A: RationalMatrix, b: Sequence[Fraction]) -> List[List[int]]:
    """每列乘上分母的最小公倍數並使 rhs ≥ 0"""
    rows = []
    for i in range(A.rows):
        vals = list(A.row(i)) + [b[i]]
        scale = lcm(*(v.denominator for v in vals))
        ints = [int(v * scale) for v in vals]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        rows.append(ints)
    return rows


def _solve(A: RationalMatrix, b: Sequence[Fraction], cost: Optional[Sequence[Fraction]]) -> LPOutcome:
    """兩階段單形法：max cost·x s.t. Ax = b, x ≥ 0（cost 為 None 時只求可行解）"""
    m, n = A.rows, A.cols
    rows = _integer_rows(A, b)

    # 1. 加入人工變數（第 n..n+m-1 欄）
    width = n + m
    tableau_rows = []
    for i, row in enumerate(rows):
        art = [0] * m
        art[i] = 1
        tableau_rows.append(row[:n] + art + [row[n]])
    objective = [-sum(r[j] for r in rows) for j in range(n)] + [0] * m + [-sum(r[n] for r in rows)]
    tableau_rows.append(objective)

    tab = _IntegerTableau(tableau_rows, list(range(n, n + m)), comb(m + width, m))

    # 2. 第一階段：最小化人工變數總和
    tab.bland([True] * n + [False] * m)
    phase1 = Fraction(-tab.D[tab.m][-1], tab.delta)
    if phase1 > 0:
        logger.debug(f"LP infeasible: phase-1 optimum {phase1} after {tab.pivots} pivots")
        return LPOutcome(status='infeasible', objective=phase1, pivots=tab.pivots)

    # 3. 將殘留在基底中的人工變數換出；換不出的列是多餘列
    r = 0
    while r < tab.m:
        if tab.basis[r] >= n:
            col = next((j for j in range(n) if tab.D[r][j] != 0), None)
            if col is None:
                tab.drop_row(r)
                continue
            tab.pivot(r, col)
        r += 1

    if cost is None:
        x = tab.solution(n)
        _verify(A, b, x)
        return LPOutcome(status='feasible', witness=tuple(x), pivots=tab.pivots)

    # 4. 第二階段：重設目標列
    scale = lcm(*(Fraction(c).denominator for c in cost))
    c_int = [int(Fraction(c) * scale) for c in cost] + [0] * m
    z = [0] * (width + 1)
    for i, j in enumerate(tab.basis):
        cb = c_int[j]
        if cb:
            row = tab.D[i]
            z = [zz + cb * a for zz, a in zip(z, row)]
    for j in range(width):
        z[j] -= c_int[j] * tab.delta
    tab.D[tab.m] = z

    status = tab.bland([True] * n + [False] * m)
    x = tab.solution(n)
    _verify(A, b, x)
    value = sum((Fraction(c) * v for c, v in zip(cost, x)), Fraction(0))
    return LPOutcome(status=status, witness=tuple(x), objective=value, pivots=tab.pivots)


def _verify(A: RationalMatrix, b: Sequence[Fraction], x: Sequence[Fraction]):
    if any(v < 0 for v in x) or list(A.apply(x)) != list(b):
        raise InternalConsistencyError("LP witness does not satisfy the constraints exactly")


def _check_dims(A: RationalMatrix, b: Sequence[Number]) -> List[Fraction]:
    if len(b) != A.rows:
        raise DimensionMismatchError(f"rhs of length {len(b)} for {A.rows} rows")
    return [Fraction(v) for v in b]


def lp_feasible(A: Union[RationalMatrix, Sequence[Sequence[Number]]], b: Sequence[Number]) -> LPOutcome:
    """
    判斷是否存在 x ≥ 0 使 Ax = b

    Returns:
        LPOutcome: feasible 時附精確 witness；infeasible 時 objective 為
        第一階段最優值（> 0 即為不可行的證明）
    """
    A = RationalMatrix.coerce(A)
    rhs = _check_dims(A, b)
    return _solve(A, rhs, None)


def lp_max_min_coordinate(A: Union[RationalMatrix, Sequence[Sequence[Number]]],
                          b: Sequence[Number]) -> LPOutcome:
    """
    最大化 ε，使 Ax = b 且 x ≥ ε·1（ε 不限正負）

    以 x = μ + (ε⁺ − ε⁻)·1 改寫成標準型。

    Returns:
        LPOutcome: optimal 時 objective = ε* ≥ 0，witness 為對應的 x；
        沒有非負解時為 infeasible，objective 為第一階段最優值
    """
    A = RationalMatrix.coerce(A)
    rhs = _check_dims(A, b)
    row_sums = [sum(A.row(i), Fraction(0)) for i in range(A.rows)]
    extended = RationalMatrix.from_rows(
        [list(A.row(i)) + [row_sums[i], -row_sums[i]] for i in range(A.rows)]
    )
    cost = [Fraction(0)] * A.cols + [Fraction(1), Fraction(-1)]
    outcome = _solve(extended, rhs, cost)
    if outcome.status == 'infeasible':
        return outcome
    if outcome.status == 'unbounded':
        return LPOutcome(status='unbounded', pivots=outcome.pivots)
    eps = outcome.witness[A.cols] - outcome.witness[A.cols + 1]
    if eps < 0:
        # ε* < 0：Ax = b 沒有非負解
        certificate = _solve(A, rhs, None)
        if certificate.status != 'infeasible':
            raise InternalConsistencyError(f"max-min optimum {eps} < 0 but the system has a non-negative solution")
        return LPOutcome(status='infeasible', objective=certificate.objective,
                         pivots=outcome.pivots + certificate.pivots)
    x = tuple(mu + eps for mu in outcome.witness[:A.cols])
    if list(A.apply(x)) != rhs or any(v < eps for v in x):
        raise InternalConsistencyError("max-min witness does not satisfy the constraints exactly")
    return LPOutcome(status='optimal', witness=x, objective=eps, pivots=outcome.pivots)
