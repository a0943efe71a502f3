"""
連通圖語料庫：頂點延伸生成 + 標準形去重
"""
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, List, Sequence, Tuple
import logging

from config import ENUMERATION_MAX_N
from models.errors import ResourceGuardError
from models.graph import GraphCorpus, SimpleGraph

logger = logging.getLogger(__name__)


def _refined_classes(graph: SimpleGraph) -> List[List[int]]:
    """
    顏色細化（初始顏色 = 度數），回傳依顏色排序的頂點類別

    顏色以「排序後的簽章排名」重新編號，與頂點標號無關。
    """
    colors = {v: graph.degree(v) for v in graph.vertices}
    while True:
        signatures = {
            v: (colors[v], tuple(sorted(colors[w] for w in graph.adjacency[v])))
            for v in graph.vertices
        }
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        refined = {v: ranking[signatures[v]] for v in graph.vertices}
        if len(set(refined.values())) == len(set(colors.values())):
            colors = refined
            break
        colors = refined
    classes: Dict[int, List[int]] = {}
    for v in graph.vertices:
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def _adjacency_code(graph: SimpleGraph, order: Sequence[int]) -> int:
    """上三角鄰接位元（第一對為最高位）"""
    code = 0
    n = len(order)
    for i in range(n):
        nbrs = graph.adjacency[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (order[j] in nbrs)
    return code


def canonical_form(graph: SimpleGraph) -> Tuple[int, Tuple[int, ...]]:
    """
    標準形：在保持細化類別順序的排列中取最小的鄰接碼

    Returns:
        (code, order)：order[i] 為新標號 i+1 對應的原頂點
    """
    classes = _refined_classes(graph)
    best_code = None
    best_order: Tuple[int, ...] = ()
    for parts in product(*(permutations(c) for c in classes)):
        order = tuple(v for part in parts for v in part)
        code = _adjacency_code(graph, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return best_code, best_order


def canonical_graph(graph: SimpleGraph) -> Tuple[int, SimpleGraph]:
    """標準代表元（頂點依標準順序重新編號、邊依字典序排列）"""
    code, order = canonical_form(graph)
    new_label = {old: i + 1 for i, old in enumerate(order)}
    edges = sorted(tuple(sorted((new_label[u], new_label[v]))) for u, v in graph.edges)
    return code, SimpleGraph(graph.n, tuple(edges))


def is_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    return canonical_form(a)[0] == canonical_form(b)[0]


@lru_cache(maxsize=None)
def _level(n: int) -> Tuple[Tuple[int, SimpleGraph], ...]:
    """n 個頂點的連通圖代表元，依 (邊數, 標準碼) 排序"""
    if n == 1:
        return ((0, SimpleGraph(1, ())),)
    reps: Dict[int, SimpleGraph] = {}
    for _, base in _level(n - 1):
        for size in range(1, n):
            for nbrs in combinations(range(1, n), size):
                edges = base.edges + tuple((u, n) for u in nbrs)
                code, rep = canonical_graph(SimpleGraph(n, edges))
                reps.setdefault(code, rep)
    ordered = sorted(reps.items(), key=lambda item: (item[1].num_edges, item[0]))
    logger.debug(f"{len(ordered)} connected graphs on {n} vertices")
    return tuple(ordered)


def enumerate_connected_graphs(max_n: int) -> GraphCorpus:
    """
    所有頂點數 ≤ max_n 的連通圖同構類代表元

    從 n−1 個頂點的代表元加上一個新頂點（連到非空鄰居子集合）生成；
    每個連通圖都有一個非割點，所以不會遺漏。

    Args:
        max_n: 頂點數上限（1 ≤ max_n ≤ 8）

    Returns:
        GraphCorpus: 依 (n, m, 標準碼) 排序

    Raises:
        ResourceGuardError: max_n 超出範圍
    """
    if not isinstance(max_n, int) or not 1 <= max_n <= ENUMERATION_MAX_N:
        raise ResourceGuardError(
            f"max_n must be between 1 and {ENUMERATION_MAX_N}, got {max_n!r}",
            limit=ENUMERATION_MAX_N
        )
    graphs = tuple(g for n in range(1, max_n + 1) for _, g in _level(n))
    logger.info(f"Corpus with max_n={max_n}: {len(graphs)} connected graphs")
    return GraphCorpus(max_n=max_n, graphs=graphs)
