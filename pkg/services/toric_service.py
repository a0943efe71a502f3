"""
圖的 toric ideal：單項式纖維、各次數的維度、極小生成元、截斷 Betti 表
"""
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from networkx.utils import UnionFind

from models.algebra import Binomial, Monomial
from models.errors import DimensionMismatchError, InternalConsistencyError, NotApplicableError
from models.graph import SimpleGraph
from models.schemas import BettiTable, EisenbudGotoCheck, GeneratorRecord, IdealSummary
from services.polytope_service import affine_dimension, rho
from utils.matrix_rank import nullspace, rank

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Image = Tuple[int, ...]
SyzygyVector = Dict[Tuple[int, Exponents], Fraction]

DIOPHANTINE_BOUND = 10 ** 6


def pi_image(graph: SimpleGraph, m: Monomial) -> Tuple[Image, int]:
    """
    π(m) = Σ exponents_i · ρ(e_i)，並附上次數（s 的指數）

    Raises:
        DimensionMismatchError: 指數長度與邊數不符
    """
    if len(m.exponents) != graph.num_edges:
        raise DimensionMismatchError(f"monomial over {len(m.exponents)} variables, graph has {graph.num_edges} edges")
    image = [0] * graph.n
    for (u, v), e in zip(graph.edges, m.exponents):
        image[u - 1] += e
        image[v - 1] += e
    return tuple(image), m.degree


def diophantine_check(bound: int = DIOPHANTINE_BOUND) -> bool:
    """c(c+1)(c+2)/6 = 2 沒有正整數解（左式嚴格遞增，超過 2 即停止）"""
    for c in range(1, bound + 1):
        value = c * (c + 1) * (c + 2)
        if value == 12:
            return False
        if value > 12:
            break
    return True


class ToricService:
    """單一圖的 toric ideal 計算（纖維表依次數快取）"""

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self.n = graph.num_edges
        self._rho = [rho(graph.n, e) for e in graph.edges]
        self._fibers: Dict[int, Dict[Image, List[Exponents]]] = {}
        self._generators: Dict[int, List[Binomial]] = {}

    # ------------------------------------------------------------
    # 纖維
    # ------------------------------------------------------------

    def image_of(self, exps: Exponents) -> Image:
        image = [0] * self.graph.n
        for (u, v), e in zip(self.graph.edges, exps):
            if e:
                image[u - 1] += e
                image[v - 1] += e
        return tuple(image)

    def fibers(self, q: int) -> Dict[Image, List[Exponents]]:
        """
        次數 q 的單項式依 π 像分組

        Returns:
            Dict[Image, List[Exponents]]: 每個纖維內依字典序由大到小
        """
        if q in self._fibers:
            return self._fibers[q]
        table: Dict[Image, List[Exponents]] = {}
        for combo in combinations_with_replacement(range(self.n), q):
            exps = [0] * self.n
            for i in combo:
                exps[i] += 1
            exps = tuple(exps)
            table.setdefault(self.image_of(exps), []).append(exps)
        for members in table.values():
            members.sort(reverse=True)
        self._fibers[q] = table
        nontrivial = sum(1 for f in table.values() if len(f) > 1)
        logger.debug(f"degree {q}: {len(table)} fibers, {nontrivial} nontrivial")
        return table

    def graded_ideal_dim(self, q: int) -> int:
        """dim (I_G)_q = Σ_F (|F| − 1)"""
        if q < 1:
            raise NotApplicableError(f"degree must be positive, got {q}")
        return sum(len(f) - 1 for f in self.fibers(q).values())

    # ------------------------------------------------------------
    # 極小生成元
    # ------------------------------------------------------------

    def multiple_pairs(self, image: Image, q: int, members: List[Exponents]) -> List[Tuple[int, int]]:
        """(m·I)_q 在纖維內的生成差：x_k·a_0 − x_k·a_i，以纖維內位置表示"""
        position = {m: i for i, m in enumerate(members)}
        lower = self.fibers(q - 1)
        seen = set()
        pairs = []
        for m in members:
            for k, e in enumerate(m):
                if not e or k in seen:
                    continue
                seen.add(k)
                below = tuple(a - b for a, b in zip(image, self._rho[k]))
                sources = lower.get(below, [])
                if len(sources) < 2:
                    continue
                lifted = []
                for a in sources:
                    exps = list(a)
                    exps[k] += 1
                    lifted.append(position[tuple(exps)])
                pairs.extend((lifted[0], j) for j in lifted[1:])
        return pairs

    def _degree_generators(self, q: int) -> List[Binomial]:
        if q in self._generators:
            return self._generators[q]
        found: List[Binomial] = []
        for image, members in sorted(self.fibers(q).items()):
            if len(members) < 2:
                continue
            pairs = self.multiple_pairs(image, q, members) if q > 1 else []
            rows = []
            for a, b in pairs:
                row = [0] * len(members)
                row[a], row[b] = 1, -1
                rows.append(row)
            multiples_rank = rank(rows) if rows else 0
            count = len(members) - 1 - multiples_rank

            # 依字典序補齊基底：m_0 − m_i 與已選者獨立才加入
            components = UnionFind(range(len(members)))
            for a, b in pairs:
                components.union(a, b)
            chosen = []
            for i in range(1, len(members)):
                if components[i] != components[0]:
                    components.union(0, i)
                    chosen.append(Binomial(Monomial(members[0]), Monomial(members[i])))
            if len(chosen) != count:
                raise InternalConsistencyError(
                    f"fiber {image} at degree {q}: rank gives {count} generators, components give {len(chosen)}"
                )
            found.extend(chosen)
        self._generators[q] = found
        return found

    def minimal_generators(self, q_max: int) -> Dict[int, Tuple[int, List[Binomial]]]:
        """
        各次數的極小生成元

        Args:
            q_max: 次數上限（≥ 2）

        Returns:
            Dict[int, Tuple[int, List[Binomial]]]: q → (μ_q, 基底二項式)
        """
        if q_max < 2:
            raise NotApplicableError(f"q_max must be at least 2, got {q_max}")
        result = {}
        for q in range(2, q_max + 1):
            gens = self._degree_generators(q)
            result[q] = (len(gens), gens)
        if result[q_max][0]:
            logger.warning(f"mu_{q_max} = {result[q_max][0]} for {self.graph.to_literal()}: generator search truncated")
        return result

    def mu(self, q: int) -> int:
        return len(self._degree_generators(q))

    def binomial_in_ideal(self, b: Binomial) -> bool:
        return self.image_of(b.plus.exponents) == self.image_of(b.minus.exponents)

    # ------------------------------------------------------------
    # 一階 syzygy
    # ------------------------------------------------------------

    def _syzygy_betti(self, generators: Sequence[Binomial], j_max: int) -> Dict[int, int]:
        """
        β_{2,j}，依 π 像 B 分解：β_{2,B} = dim Syz_B − rank(Σ_k x_k·Syz_{B−ρ(e_k)})
        """
        gens = [(self.image_of(g.plus.exponents), g.degree, g) for g in generators]
        min_degree = min(d for _, d, _ in gens)
        beta: Dict[int, int] = {j: 0 for j in range(3, j_max + 1)}
        previous: Dict[Image, List[SyzygyVector]] = {}

        for j in range(min_degree + 1, j_max + 1):
            # 1. 至少兩個生成元可達的多重次數
            reach: Dict[Image, int] = {}
            for b_i, d_i, _ in gens:
                if j - d_i < 1:
                    continue
                for key in self.fibers(j - d_i):
                    target = tuple(a + b for a, b in zip(b_i, key))
                    reach[target] = reach.get(target, 0) + 1

            current: Dict[Image, List[SyzygyVector]] = {}
            for target in sorted(t for t, c in reach.items() if c >= 2):
                # 2. 未知數 (i, u)，方程式為各單項式的係數
                columns: List[Tuple[int, Exponents]] = []
                for i, (b_i, d_i, _) in enumerate(gens):
                    if j - d_i < 1:
                        continue
                    key = tuple(a - b for a, b in zip(target, b_i))
                    for u in self.fibers(j - d_i).get(key, []):
                        columns.append((i, u))
                col_index = {c: k for k, c in enumerate(columns)}
                row_index: Dict[Exponents, int] = {}
                entries: List[Tuple[int, int, int]] = []
                for k, (i, u) in enumerate(columns):
                    g = gens[i][2]
                    for term, sign in ((g.plus.exponents, 1), (g.minus.exponents, -1)):
                        w = tuple(a + b for a, b in zip(u, term))
                        r = row_index.setdefault(w, len(row_index))
                        entries.append((r, k, sign))
                matrix = [[0] * len(columns) for _ in range(len(row_index))]
                for r, k, sign in entries:
                    matrix[r][k] += sign
                basis = nullspace(matrix, len(columns))
                if not basis:
                    continue
                current[target] = [
                    {columns[k]: v for k, v in enumerate(vec) if v != 0} for vec in basis
                ]

                # 3. 低一次 syzygy 乘上 x_k
                multiples = []
                for k in range(self.n):
                    below = tuple(a - b for a, b in zip(target, self._rho[k]))
                    for vec in previous.get(below, []):
                        row = [Fraction(0)] * len(columns)
                        for (i, u), v in vec.items():
                            lifted = list(u)
                            lifted[k] += 1
                            row[col_index[(i, tuple(lifted))]] = v
                        multiples.append(row)
                reduced = rank(multiples) if multiples else 0
                beta[j] += len(basis) - reduced
            previous = current
            logger.debug(f"beta_2,{j} = {beta[j]}")
        return beta

    def truncated_betti(self, q_max: int, j_max: int) -> BettiTable:
        """
        截斷 Betti 表：μ_q（q ≤ q_max）與 β_{2,j}（j ≤ j_max）

        Raises:
            NotApplicableError: j_max < q_max + 1
        """
        if j_max < q_max + 1:
            raise NotApplicableError(f"j_max must be at least q_max + 1, got q_max={q_max}, j_max={j_max}")
        generators = self.minimal_generators(q_max)
        mu = {q: count for q, (count, _) in generators.items()}
        all_gens = [g for q in sorted(generators) for g in generators[q][1]]
        if len(all_gens) <= 1:
            beta2 = {j: 0 for j in range(3, j_max + 1)}
        else:
            beta2 = self._syzygy_betti(all_gens, j_max)
        return BettiTable(mu=mu, beta2=beta2, q_max=q_max, j_max=j_max, truncated=True)

    # ------------------------------------------------------------
    # 摘要
    # ------------------------------------------------------------

    def ring_dim(self) -> int:
        """dim K[G] = dim P_G + 1（邊集合的仿射維度）"""
        return affine_dimension(self._rho, self.graph.n) + 1

    def generator_records(self, q_max: int) -> List[GeneratorRecord]:
        records = []
        for q, (_, gens) in self.minimal_generators(q_max).items():
            for g in gens:
                records.append(GeneratorRecord(degree=q, binomial=str(g), fiber=list(self.image_of(g.plus.exponents))))
        return records

    def ideal_summary(self, table: BettiTable, polytope_degree: Optional[int] = None) -> IdealSummary:
        """
        codim c = |E| − dim K[G]、生成元次數、hypersurface、線性判定、Eisenbud–Goto 個數

        Args:
            table: truncated_betti 的結果
            polytope_degree: deg(P_G)，作為正則度下界一併回報
        """
        ring_dim = self.ring_dim()
        codim = self.n - ring_dim
        degrees = [q for q in sorted(table.mu) for _ in range(table.mu[q])]
        total = len(degrees)
        hypersurface = total == 1

        linearity = {}
        for q in range(2, table.q_max + 1):
            if q + 1 <= table.q_max and q + 2 <= table.j_max:
                linearity[q] = linearity_verdict(table, q)

        checks = []
        for q in range(2, table.q_max + 1):
            expected = comb(codim + q - 1, q)
            observed = table.mu.get(q, 0)
            checks.append(EisenbudGotoCheck(q=q, expected=expected, observed=observed, matches=expected == observed))

        hyper_reg = degrees[0] - 1 if hypersurface else None
        consistent = None
        if hyper_reg is not None and polytope_degree is not None:
            consistent = hyper_reg >= polytope_degree

        return IdealSummary(
            ring_dim=ring_dim,
            codim=codim,
            generator_degrees=degrees,
            total_generators=total,
            hypersurface=hypersurface,
            linearity=linearity,
            eisenbud_goto=checks,
            diophantine_ok=diophantine_check(),
            regularity_lower_bound=polytope_degree,
            hypersurface_regularity=hyper_reg,
            regularity_consistent=consistent,
            truncated=table.truncated
        )


def linearity_verdict(table: BettiTable, q: int) -> bool:
    """
    截斷的 q-線性判定：μ_q > 0、μ_j = 0（j ≠ q）、β_{2,j} = 0（j ≠ q+1）

    Raises:
        NotApplicableError: 表的界限未涵蓋 q+1（生成元）或 q+2（syzygy）
    """
    if q < 2 or table.q_max < q + 1 or table.j_max < q + 2:
        raise NotApplicableError(
            f"table bounds q_max={table.q_max}, j_max={table.j_max} do not cover q={q}"
        )
    if table.mu.get(q, 0) == 0:
        return False
    if any(count for degree, count in table.mu.items() if degree != q):
        return False
    return not any(count for degree, count in table.beta2.items() if degree != q + 1)


def graded_ideal_dim(graph: SimpleGraph, q: int) -> int:
    return ToricService(graph).graded_ideal_dim(q)


def minimal_generators(graph: SimpleGraph, q_max: int) -> Dict[int, Tuple[int, List[Binomial]]]:
    return ToricService(graph).minimal_generators(q_max)


def truncated_betti(graph: SimpleGraph, q_max: int, j_max: int) -> BettiTable:
    return ToricService(graph).truncated_betti(q_max, j_max)


def ideal_summary(graph: SimpleGraph, q_max: int, j_max: int,
                  polytope_degree: Optional[int] = None) -> IdealSummary:
    service = ToricService(graph)
    return service.ideal_summary(service.truncated_betti(q_max, j_max), polytope_degree)
