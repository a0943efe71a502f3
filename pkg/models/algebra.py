"""
代數資料模型：單項式、二項式、偶閉路徑
"""
from dataclasses import dataclass
from typing import Iterable, Tuple

from models.errors import DimensionMismatchError


@dataclass(frozen=True, order=True)
class Monomial:
    """邊變數 x_1..x_n 上的單項式（exponents 依邊的順序）"""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, n: int) -> 'Monomial':
        return cls((0,) * n)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> 'Monomial':
        """由 0-based 變數索引的多重集合建立"""
        exps = [0] * n
        for i in indices:
            exps[i] += 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        if len(other.exponents) != len(self.exponents):
            raise DimensionMismatchError("monomials over different variable sets")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def times_variable(self, k: int) -> 'Monomial':
        exps = list(self.exponents)
        exps[k] += 1
        return Monomial(tuple(exps))

    def divides(self, other: 'Monomial') -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        if not self.support:
            return "1"
        parts = []
        for i in self.support:
            e = self.exponents[i]
            parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class Binomial:
    """plus − minus；兩項次數相同且不相等"""
    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if self.plus == self.minus:
            raise ValueError("binomial with identical terms is zero")
        if self.plus.degree != self.minus.degree:
            raise ValueError(f"inhomogeneous binomial {self.plus} - {self.minus}")

    @property
    def degree(self) -> int:
        return self.plus.degree

    def negated(self) -> 'Binomial':
        return Binomial(self.minus, self.plus)

    def normalized(self) -> 'Binomial':
        """符號正規化：字典序較大的單項式放在前面"""
        return self if self.plus.exponents > self.minus.exponents else self.negated()

    def times(self, m: Monomial) -> 'Binomial':
        return Binomial(self.plus * m, self.minus * m)

    def __str__(self) -> str:
        return f"{self.plus} - {self.minus}"


@dataclass(frozen=True)
class EvenClosedWalk:
    """
    偶閉路徑 Γ = (e_{i_1}, ..., e_{i_{2q}})

    edge_indices 為 0-based 邊索引，trail 為頂點序列 v_1..v_{2q+1}（v_1 = v_{2q+1}），
    第 k 條邊連接 trail[k] 與 trail[k+1]。
    """
    edge_indices: Tuple[int, ...]
    trail: Tuple[int, ...]

    def __post_init__(self):
        if len(self.edge_indices) % 2 or not self.edge_indices:
            raise ValueError(f"walk length {len(self.edge_indices)} is not a positive even number")
        if len(self.trail) != len(self.edge_indices) + 1 or self.trail[0] != self.trail[-1]:
            raise ValueError("walk trail does not close")

    @property
    def half_length(self) -> int:
        return len(self.edge_indices) // 2

    @property
    def distinct_vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.trail)))
