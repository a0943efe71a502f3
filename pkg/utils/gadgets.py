"""
常用的具名圖
"""
from typing import Dict, List, Optional, Sequence, Tuple

from models.graph import SimpleGraph, new_graph, normalize_edge


def cycle_graph(k: int) -> SimpleGraph:
    """C_k：邊 {1,2},…,{k−1,k},{1,k}"""
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    return new_graph(k, edges)


def path_graph(k: int) -> SimpleGraph:
    return new_graph(k, [(i, i + 1) for i in range(1, k)])


def complete_graph(n: int) -> SimpleGraph:
    return new_graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    """K_{a,b}，U = 1..a、V = a+1..a+b，邊依 (u, v) 排序"""
    return new_graph(a + b, [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)])


def bowtie() -> SimpleGraph:
    """G₆：兩個三角形共用頂點 3"""
    return new_graph(5, [(1, 3), (2, 3), (1, 2), (3, 4), (3, 5), (4, 5)])


def friendship(k: int = 3) -> SimpleGraph:
    """F_k：k 個三角形共用頂點 1"""
    edges = []
    for i in range(k):
        a, b = 2 * i + 2, 2 * i + 3
        edges.extend([(1, a), (1, b), (a, b)])
    return new_graph(2 * k + 1, edges)


def chorded_cycle(k: int, l: int) -> SimpleGraph:
    """C_{k,ℓ}：2k-循環加上弦 {1,ℓ}"""
    return new_graph(2 * k, list(cycle_graph(2 * k).edges) + [(1, l)])


def disjoint_cycles(*lengths: int) -> SimpleGraph:
    """頂點不相交的循環（依序編號）"""
    edges = []
    offset = 0
    for k in lengths:
        edges.extend((u + offset, v + offset) for u, v in cycle_graph(k).edges)
        offset += k
    return new_graph(offset, edges)


def bridged_triangles() -> SimpleGraph:
    """兩個三角形以長度 2 的路徑相連（7 個頂點）"""
    return new_graph(7, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])


def hexagon_union(identification: Sequence[Optional[int]]) -> Tuple[SimpleGraph, Tuple[int, ...]]:
    """
    C₁ = (1,…,6) 與 C₂ = (v₁,…,v₆) 的聯集

    Args:
        identification: 長度 6；第 i 項為 v_i 對應的 C₁ 頂點，None 表示新頂點

    Returns:
        (聯集圖, C₂ 的頂點序列)
    """
    labels: List[int] = []
    fresh = 7
    for target in identification:
        if target is None:
            labels.append(fresh)
            fresh += 1
        else:
            labels.append(target)
    edges: Dict[Tuple[int, int], None] = {}
    for u, v in cycle_graph(6).edges:
        edges[normalize_edge(u, v)] = None
    for i in range(6):
        edges[normalize_edge(labels[i], labels[(i + 1) % 6])] = None
    return new_graph(fresh - 1, list(edges)), tuple(labels)
