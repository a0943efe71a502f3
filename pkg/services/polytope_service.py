"""
邊多面體：建構、格點計數、δ 多項式、次數/餘次數、滿維投影
"""
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple, Union
import logging

import networkx as nx

from models.errors import (
    DimensionMismatchError, DisconnectedGraphError, InternalConsistencyError, NotApplicableError
)
from models.graph import SimpleGraph
from models.polytope import DeltaPolynomial, EdgePolytope, LatticePoint, LatticePolytope, PolytopeBlock
from services.graph_service import bipartition
from utils.matrix_rank import rank
from utils.rational_simplex import LPOutcome, RationalMatrix, lp_feasible, lp_max_min_coordinate

logger = logging.getLogger(__name__)

AnyPolytope = Union[EdgePolytope, LatticePolytope]


def rho(n: int, edge: Tuple[int, int]) -> LatticePoint:
    """ρ({i,j}) = e_i + e_j"""
    point = [0] * n
    point[edge[0] - 1] = 1
    point[edge[1] - 1] = 1
    return tuple(point)


def affine_dimension(points: Sequence[LatticePoint], ambient_dim: int) -> int:
    """仿射維度 = rank([points; 1]) − 1"""
    rows = [[p[i] for p in points] for i in range(ambient_dim)]
    rows.append([1] * len(points))
    return rank(rows) - 1


# ============================================================
# 建構
# ============================================================

def _build(graph: SimpleGraph, indices: Sequence[int]) -> EdgePolytope:
    n = graph.n
    chosen = sorted(set(indices))
    edges = tuple(graph.edges[i] for i in chosen)
    generators = tuple(rho(n, e) for e in edges)

    # 每個連通分量是一個區塊；座標為 0-based 頂點索引
    sub = nx.Graph()
    sub.add_edges_from(edges)
    blocks = []
    for comp in sorted((sorted(c) for c in nx.connected_components(sub)), key=lambda c: c[0]):
        members = set(comp)
        local = [k for k, e in enumerate(edges) if e[0] in members]
        comp_graph = sub.subgraph(comp)
        parts = None
        if nx.is_bipartite(comp_graph):
            coloring = nx.bipartite.color(comp_graph)
            side = coloring[comp[0]]
            U = tuple(v - 1 for v in comp if coloring[v] == side)
            V = tuple(v - 1 for v in comp if coloring[v] != side)
            parts = (U, V)
        blocks.append(PolytopeBlock(
            coords=tuple(v - 1 for v in comp),
            edge_indices=tuple(local),
            bipartition=parts
        ))

    dim = affine_dimension(generators, n)
    expected = sum(len(b.coords) - (1 if b.is_bipartite else 0) for b in blocks) - 1
    if dim != expected:
        raise InternalConsistencyError(
            f"edge polytope of {graph.to_literal()} has rank dimension {dim}, block rule gives {expected}"
        )
    return EdgePolytope(
        ambient_dim=n,
        generators=generators,
        intrinsic_dim=dim,
        component_blocks=tuple(blocks),
        edges=edges
    )


def edge_polytope(graph: SimpleGraph) -> EdgePolytope:
    """
    P_G = conv{ρ(e) : e ∈ E(G)}

    Raises:
        DisconnectedGraphError: 非連通圖
        NotApplicableError: 沒有邊
    """
    if not graph.is_connected():
        raise DisconnectedGraphError(graph.components())
    if graph.num_edges == 0:
        raise NotApplicableError("graph has no edges")
    return _build(graph, range(graph.num_edges))


def edge_subpolytope(graph: SimpleGraph, edge_subset: Sequence[int]) -> EdgePolytope:
    """
    由部分邊（0-based 索引）生成的多面體；不要求連通

    Raises:
        NotApplicableError: 空集合
    """
    if not edge_subset:
        raise NotApplicableError("edge subset is empty")
    for i in edge_subset:
        if not 0 <= i < graph.num_edges:
            raise DimensionMismatchError(f"edge index {i} out of range")
    return _build(graph, edge_subset)


# ============================================================
# 成員判定
# ============================================================

@lru_cache(maxsize=4096)
def _block_matrix(generators: Tuple[LatticePoint, ...], coords: Tuple[int, ...],
                  columns: Tuple[int, ...], with_sum_row: bool) -> RationalMatrix:
    rows = [[generators[k][c] for k in columns] for c in coords]
    if with_sum_row:
        rows.append([1] * len(columns))
    return RationalMatrix.from_rows(rows)


def _edge_system(P: EdgePolytope) -> RationalMatrix:
    return _block_matrix(P.generators, P.covered, tuple(range(P.num_generators)), False)


def _generic_system(Q: LatticePolytope) -> RationalMatrix:
    return _block_matrix(Q.generators, tuple(range(Q.ambient_dim)), tuple(range(Q.num_generators)), True)


def _prechecks(P: AnyPolytope, t: int, x: Sequence[int]) -> bool:
    if len(x) != P.ambient_dim:
        raise DimensionMismatchError(f"point of dimension {len(x)} for ambient dimension {P.ambient_dim}")
    if any(v < 0 for v in x):
        return False
    if isinstance(P, EdgePolytope):
        if sum(x) != 2 * t:
            return False
        covered = set(P.covered)
        if any(v for i, v in enumerate(x) if i not in covered):
            return False
    return True


def _system_rhs(P: AnyPolytope, t: int, x: Sequence[int]) -> Tuple[RationalMatrix, List[int]]:
    if isinstance(P, EdgePolytope):
        return _edge_system(P), [x[c] for c in P.covered]
    return _generic_system(P), list(x) + [t]


def contains(P: AnyPolytope, t: int, x: Sequence[int]) -> bool:
    """x ∈ tP ⟺ 存在 λ ≥ 0、Σλ = t、Σ λ_e ρ(e) = x"""
    if not _prechecks(P, t, x):
        return False
    if t == 0:
        return not any(x)
    A, b = _system_rhs(P, t, x)
    return lp_feasible(A, b).is_feasible


def interior_certificate(P: AnyPolytope, t: int, x: Sequence[int]) -> Optional[LPOutcome]:
    """max-min 座標 LP 的結果（x 不在 tP 時回傳 None）"""
    if t < 1 or not _prechecks(P, t, x):
        return None
    A, b = _system_rhs(P, t, x)
    outcome = lp_max_min_coordinate(A, b)
    return outcome if outcome.status == 'optimal' else None


def relint_contains(P: AnyPolytope, t: int, x: Sequence[int]) -> bool:
    """x 是所有生成點的全正組合（Σλ = t）⟺ ε* > 0"""
    outcome = interior_certificate(P, t, x)
    return outcome is not None and outcome.objective > 0


# ============================================================
# 格點計數
# ============================================================

def _compositions(total: int, parts: int, low: int, high: int) -> Iterator[Tuple[int, ...]]:
    """low ≤ 各分量 ≤ high、總和為 total 的所有整數向量（字典序）"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    rest_low = low * (parts - 1)
    rest_high = high * (parts - 1)
    for first in range(max(low, total - rest_high), min(high, total - rest_low) + 1):
        for tail in _compositions(total - first, parts - 1, low, high):
            yield (first,) + tail


def _block_candidates(block: PolytopeBlock, u: int, low: int = 0) -> Iterator[dict]:
    """區塊座標和為 u 的候選點（各座標 ≤ ⌊u/2⌋，二部區塊須平衡）"""
    if block.is_bipartite:
        if u % 2:
            return
        U, V = block.bipartition
        half = u // 2
        for left in _compositions(half, len(U), low, half):
            for right in _compositions(half, len(V), low, half):
                point = dict(zip(U, left))
                point.update(zip(V, right))
                yield point
    else:
        for values in _compositions(u, len(block.coords), low, u // 2):
            yield dict(zip(block.coords, values))


def _block_count(P: EdgePolytope, index: int, u: int) -> int:
    """區塊 index 在 (u/2)·P_block 中、座標和為 u 的格點數"""
    key = (index, u)
    if key in P.block_counts:
        return P.block_counts[key]
    block = P.component_blocks[index]
    if u == 0:
        count = 1
    else:
        A = _block_matrix(P.generators, block.coords, block.edge_indices, False)
        count = 0
        for point in _block_candidates(block, u):
            b = [point[c] for c in block.coords]
            if lp_feasible(A, b).is_feasible:
                count += 1
    P.block_counts[key] = count
    return count


def _budgets(blocks: Sequence[PolytopeBlock], total: int) -> Iterator[Tuple[int, ...]]:
    """各區塊的座標和 u_i（Σ u_i = total；二部或單邊區塊只允許偶數）"""
    if not blocks:
        if total == 0:
            yield ()
        return
    head, rest = blocks[0], blocks[1:]
    step = 2 if head.is_bipartite else 1
    for u in range(0, total + 1, step):
        for tail in _budgets(rest, total - u):
            yield (u,) + tail


def _generic_count(Q: LatticePolytope, t: int) -> int:
    """一般格點多面體：座標框 + 座標和界限篩選，LP 判定"""
    if Q.ambient_dim == 0:
        return 1
    highs = [t * max(g[j] for g in Q.generators) for j in range(Q.ambient_dim)]
    sums = [sum(g) for g in Q.generators]
    low_sum, high_sum = t * min(sums), t * max(sums)
    count = 0
    for x in product(*(range(h + 1) for h in highs)):
        if low_sum <= sum(x) <= high_sum and contains(Q, t, x):
            count += 1
    return count


def count_lattice_points(P: AnyPolytope, t: int) -> int:
    """
    |tP ∩ Z^N|

    邊多面體依連通區塊做卷積：Σ_{u_1+…+u_k = 2t} Π_i count_i(u_i)，
    其中 count_i(u) 為區塊 i 在 (u/2)·P_i 中的格點數（u 可為奇數）。
    結果依 (polytope, t) 快取。
    """
    if t < 0:
        raise NotApplicableError(f"dilation must be nonnegative, got {t}")
    if t in P.counts:
        return P.counts[t]
    if t == 0:
        total = 1
    elif isinstance(P, EdgePolytope):
        blocks = P.component_blocks
        total = 0
        for budget in _budgets(blocks, 2 * t):
            term = 1
            for i, u in enumerate(budget):
                term *= _block_count(P, i, u)
                if term == 0:
                    break
            total += term
    else:
        total = _generic_count(P, t)
    P.counts[t] = total
    logger.debug(f"L({t}) = {total}")
    return total


def delta_polynomial(P: AnyPolytope) -> DeltaPolynomial:
    """δ 多項式（由 L(0..d) 的交錯和求得）"""
    d = P.intrinsic_dim
    counts = [count_lattice_points(P, t) for t in range(d + 1)]
    return DeltaPolynomial.from_counts(d, counts)


# ============================================================
# 內點與餘次數
# ============================================================

def _interior_candidates(P: AnyPolytope, r: int) -> Iterator[Tuple[int, ...]]:
    n = P.ambient_dim
    if isinstance(P, EdgePolytope):
        covered = P.covered
        for values in _compositions(2 * r, len(covered), 1, r):
            point = [0] * n
            for c, v in zip(covered, values):
                point[c] = v
            balanced = all(
                sum(point[c] for c in b.bipartition[0]) == sum(point[c] for c in b.bipartition[1])
                for b in P.component_blocks if b.is_bipartite
            )
            if balanced:
                yield tuple(point)
    else:
        highs = [r * max(g[j] for g in P.generators) for j in range(n)]
        yield from product(*(range(1, h + 1) for h in highs))


def interior_point(P: AnyPolytope, r: int) -> Optional[Tuple[int, ...]]:
    """rP 的第一個相對內部格點（依候選字典序）；沒有則 None"""
    for x in _interior_candidates(P, r):
        if relint_contains(P, r, x):
            return x
    return None


def codegree_by_interior(P: AnyPolytope) -> int:
    """
    codeg(P) = min{r ≥ 1 : relint(rP) ∩ Z^N ≠ ∅}

    Raises:
        InternalConsistencyError: r ≤ d+1 都找不到內點
    """
    d = P.intrinsic_dim
    for r in range(1, d + 2):
        if interior_point(P, r) is not None:
            return r
    raise InternalConsistencyError(f"no relative interior lattice point in rP for r <= {d + 1}")


def degree_by_interior(P: AnyPolytope) -> int:
    """deg(P) = d + 1 − codeg(P)"""
    return P.intrinsic_dim + 1 - codegree_by_interior(P)


# ============================================================
# 滿維投影
# ============================================================

def bipartite_relabeling(graph: SimpleGraph) -> dict:
    """讓頂點 1 ∈ U、頂點 N ∈ V 的排列（old → new）"""
    parts = bipartition(graph)
    if parts is None:
        raise NotApplicableError("graph is not bipartite")
    U, V = parts
    mapping = {v: v for v in graph.vertices}
    if graph.n not in V:
        w = max(V)
        mapping[w], mapping[graph.n] = graph.n, w
    return mapping


def full_dimensionalize(P: EdgePolytope, graph: SimpleGraph) -> LatticePolytope:
    """
    投影成滿維多面體

    - 非二部：去掉最後一個座標
    - 二部：先重新編號使 1 ∈ U、N ∈ V，再去掉第一個與最後一個座標

    Returns:
        LatticePolytope: 維度 N−1 或 N−2，且與 P 有相同的 δ 多項式
    """
    if not graph.is_connected():
        raise DisconnectedGraphError(graph.components())
    n = graph.n
    if bipartition(graph) is None:
        generators = tuple(g[:n - 1] for g in P.generators)
        ambient = n - 1
    else:
        mapping = bipartite_relabeling(graph)
        relabeled = graph.relabel(mapping)
        generators = tuple(rho(n, e)[1:n - 1] for e in relabeled.edges)
        ambient = n - 2
    dim = affine_dimension(generators, ambient) if generators else 0
    if dim != ambient or dim != P.intrinsic_dim:
        raise InternalConsistencyError(
            f"projection of {graph.to_literal()} has dimension {dim}, expected {P.intrinsic_dim} in R^{ambient}"
        )
    return LatticePolytope(ambient_dim=ambient, generators=generators, intrinsic_dim=dim)
