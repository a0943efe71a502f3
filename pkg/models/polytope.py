"""
多面體資料模型：EdgePolytope、LatticePolytope、DeltaPolynomial
"""
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from models.errors import InternalConsistencyError

LatticePoint = Tuple[int, ...]


@dataclass(frozen=True)
class PolytopeBlock:
    """
    生成邊集合的一個連通分量

    coords 為該分量覆蓋的座標（0-based 頂點索引），
    bipartition 僅在分量為二部圖時給出 (U, V)。
    """
    coords: Tuple[int, ...]
    edge_indices: Tuple[int, ...]
    bipartition: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    @property
    def is_single_edge(self) -> bool:
        return len(self.edge_indices) == 1


@dataclass(frozen=True)
class EdgePolytope:
    """邊多面體 P = conv{ρ(e)}，generators 依邊的順序"""
    ambient_dim: int
    generators: Tuple[LatticePoint, ...]
    intrinsic_dim: int
    component_blocks: Tuple[PolytopeBlock, ...]
    edges: Tuple[Tuple[int, int], ...]
    counts: Dict[int, int] = field(default_factory=dict, repr=False, compare=False)
    block_counts: Dict[Tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.ambient_dim or sorted(g)[-2:] != [1, 1] or sum(g) != 2:
                raise InternalConsistencyError(f"generator {g} is not a 0/1 point with two ones")

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def covered(self) -> Tuple[int, ...]:
        return tuple(sorted(c for b in self.component_blocks for c in b.coords))


@dataclass(frozen=True)
class LatticePolytope:
    """一般格點多面體（僅由生成點給定），用於投影後的多面體"""
    ambient_dim: int
    generators: Tuple[LatticePoint, ...]
    intrinsic_dim: int
    counts: Dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    @property
    def num_generators(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class DeltaPolynomial:
    """δ 多項式 δ_0 + δ_1 λ + ... + δ_d λ^d 與其來源的 Ehrhart 計數 L(0..d)"""
    dim: int
    coefficients: Tuple[int, ...]
    ehrhart_counts: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return max(i for i, c in enumerate(self.coefficients) if c != 0)

    @property
    def codegree(self) -> int:
        return self.dim + 1 - self.degree

    @classmethod
    def from_counts(cls, dim: int, counts: Sequence[int]) -> 'DeltaPolynomial':
        """
        δ_i = Σ_{j≤i} (−1)^{i−j} C(d+1, i−j) L(j)

        Raises:
            InternalConsistencyError: 任一係數為負或 δ_0 ≠ 1（計數錯誤）
        """
        if len(counts) < dim + 1:
            raise InternalConsistencyError(f"need L(0..{dim}), got {len(counts)} values")
        coeffs = []
        for i in range(dim + 1):
            coeffs.append(sum((-1) ** (i - j) * comb(dim + 1, i - j) * counts[j] for j in range(i + 1)))
        if coeffs[0] != 1 or any(c < 0 for c in coeffs):
            raise InternalConsistencyError(f"invalid delta vector {coeffs} from counts {list(counts)}")
        return cls(dim=dim, coefficients=tuple(coeffs), ehrhart_counts=tuple(counts[:dim + 1]))

    def sanity_violations(self) -> List[str]:
        """
        檢查 δ 向量的已知必要不等式

        - Stanley：δ_0+…+δ_i ≤ δ_s+…+δ_{s−i}，s = degree，0 ≤ i ≤ ⌊s/2⌋
        - Hibi：δ_d+…+δ_{d−i} ≤ δ_1+…+δ_{i+1}，0 ≤ i ≤ ⌊(d−1)/2⌋
        - Hibi 下界：δ_d ≠ 0 時 δ_1 ≤ δ_i（1 ≤ i < d）
        """
        d = self.dim
        h = self.coefficients
        s = self.degree
        problems = []
        if h[0] != 1:
            problems.append(f"delta_0 = {h[0]}")
        if any(c < 0 for c in h):
            problems.append("negative coefficient")
        for i in range(s // 2 + 1):
            if sum(h[:i + 1]) > sum(h[s - i:s + 1]):
                problems.append(f"Stanley inequality fails at i={i}")
        for i in range((d - 1) // 2 + 1) if d >= 1 else ():
            if sum(h[d - i:d + 1]) > sum(h[1:i + 2]):
                problems.append(f"Hibi inequality fails at i={i}")
        if d >= 2 and h[d] != 0:
            for i in range(1, d):
                if h[1] > h[i]:
                    problems.append(f"Hibi lower bound fails at i={i}")
        return problems
