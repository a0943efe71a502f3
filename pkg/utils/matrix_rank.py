"""
矩陣秩與零空間

- exact: 整數 Bareiss 消去（fraction-free）
- modular: 兩個約 30 位元質數上的 numpy 消去，結果不一致時改用 exact
"""
import logging
from fractions import Fraction
from math import isqrt, lcm
from typing import List, Literal, Sequence, Union

import numpy as np

from utils.rational_simplex import RationalMatrix

logger = logging.getLogger(__name__)

MODULAR_PRIMES = (1073741789, 1073741783)

RankMode = Literal['exact', 'modular']
MatrixLike = Union[RationalMatrix, Sequence[Sequence[Union[int, Fraction]]]]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _integer_rows(M: MatrixLike) -> List[List[int]]:
    """每列乘上分母的 lcm，轉成整數列（不改變秩）"""
    data = M.entries if isinstance(M, RationalMatrix) else M
    rows = []
    for row in data:
        vals = [Fraction(x) for x in row]
        scale = lcm(*(v.denominator for v in vals)) if vals else 1
        rows.append([int(v * scale) for v in vals])
    return rows


def rank_exact(M: MatrixLike) -> int:
    """Bareiss 消去求秩（全程整數、無捨入）"""
    rows = _integer_rows(M)
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        pivot_row = rows[rank]
        for i in range(rank + 1, nrows):
            row = rows[i]
            f = row[col]
            rows[i] = [(p * a - f * b) // prev for a, b in zip(row, pivot_row)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(M: MatrixLike, p: int) -> int:
    """模 p 的秩（numpy int64；p < 2^31 以免乘法溢位）"""
    rows = _integer_rows(M)
    if not rows or not rows[0]:
        return 0
    A = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        below = A[rank + 1:, col]
        targets = np.nonzero(below)[0]
        if targets.size:
            idx = rank + 1 + targets
            A[idx] = (A[idx] - np.outer(A[idx, col], A[rank]) % p) % p
        rank += 1
    return rank


def rank(M: MatrixLike, mode: RankMode = 'modular') -> int:
    """
    矩陣的秩

    Args:
        M: 有理數矩陣（RationalMatrix 或巢狀序列）
        mode: 'exact' 或 'modular'（兩質數交叉比對，不一致時退回 exact）

    Returns:
        int: 秩
    """
    if mode == 'exact':
        return rank_exact(M)
    r1, r2 = (rank_mod_p(M, p) for p in MODULAR_PRIMES)
    if r1 != r2:
        logger.warning(f"modular ranks disagree ({r1} vs {r2}), falling back to exact elimination")
        return rank_exact(M)
    return r1


def nullspace(M: MatrixLike, ncols: int) -> List[List[Fraction]]:
    """
    精確零空間基底（RREF，自由變數依欄序）

    Args:
        M: 係數矩陣（可為零列）
        ncols: 欄數（M 無列時仍需要）

    Returns:
        List[List[Fraction]]: 基底向量，每個向量在其自由變數位置為 1
    """
    data = M.entries if isinstance(M, RationalMatrix) else M
    rows = [[Fraction(x) for x in row] for row in data]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1

    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(v)
    return basis
