"""
圖的結構偵測：循環枚舉、二部性、奇循環、特殊子圖
"""
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from models.errors import DisconnectedGraphError, NotApplicableError
from models.graph import Cycle, SimpleGraph, normalize_edge
from models.schemas import EvenCycleRecord, SpecialSubgraph, StructureReport, SubgraphTag

logger = logging.getLogger(__name__)

LONG_EVEN_CYCLE = 8


def enumerate_cycles(graph: SimpleGraph, cap: Optional[int] = None) -> List[Cycle]:
    """
    枚舉所有長度 ≤ cap 的簡單循環（預設 cap = n）

    以最小頂點為起點、第二個頂點小於最後一個頂點，
    每個循環恰好出現一次。

    Returns:
        List[Cycle]: 依（長度, 頂點序列）排序
    """
    cap = graph.n if cap is None else cap
    found: List[Cycle] = []
    adjacency = {v: sorted(ws) for v, ws in graph.adjacency.items()}

    for start in graph.vertices:
        path = [start]
        on_path = {start}

        def extend():
            last = path[-1]
            for w in adjacency[last]:
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    found.append(Cycle(tuple(path)))
                if w <= start or w in on_path or len(path) >= cap:
                    continue
                path.append(w)
                on_path.add(w)
                extend()
                path.pop()
                on_path.discard(w)

        extend()

    found.sort(key=lambda c: (c.length, c.vertices))
    return found


def has_chord(graph: SimpleGraph, cycle: Cycle) -> bool:
    """循環上兩個不相鄰頂點之間是否有邊"""
    cycle_edges = cycle.edge_set()
    for u, v in combinations(cycle.vertices, 2):
        if graph.has_edge(u, v) and normalize_edge(u, v) not in cycle_edges:
            return True
    return False


def bipartition(graph: SimpleGraph) -> Optional[Tuple[List[int], List[int]]]:
    """二部劃分 (U, V)，頂點 1 所在的一側為 U；非二部圖回傳 None"""
    g = graph.to_networkx()
    if not nx.is_bipartite(g):
        return None
    coloring = nx.bipartite.color(g)
    side_of_one = coloring[1]
    U = sorted(v for v, c in coloring.items() if c == side_of_one)
    V = sorted(v for v, c in coloring.items() if c != side_of_one)
    return U, V


def triangles(graph: SimpleGraph) -> List[Tuple[int, int, int]]:
    result = []
    for u, v in graph.edges:
        for w in sorted(graph.adjacency[u] & graph.adjacency[v]):
            if w > v:
                result.append((u, v, w))
    return sorted(result)


def classify_structure(graph: SimpleGraph, cap: Optional[int] = None) -> StructureReport:
    """
    結構摘要：連通性、二部劃分或奇循環證據、三角形數、4-循環、長偶循環

    Args:
        graph: 簡單圖
        cap: 循環長度上限（預設 n）

    Returns:
        StructureReport
    """
    cap = graph.n if cap is None else cap
    cycles = enumerate_cycles(graph, cap)
    odd = next((c for c in cycles if c.is_odd), None)
    parts = bipartition(graph)

    # 二部 ⟺ 無奇循環（cap = n 時循環列表完整）
    if cap >= graph.n and (parts is None) != (odd is not None):
        logger.error(f"bipartition and odd cycle search disagree on {graph.to_literal()}")

    long_even = [
        EvenCycleRecord(vertices=list(c.vertices), length=c.length, has_chord=has_chord(graph, c))
        for c in cycles
        if not c.is_odd and c.length >= LONG_EVEN_CYCLE
    ]

    return StructureReport(
        connected=graph.is_connected(),
        components=graph.components(),
        bipartite=parts is not None,
        bipartition=[parts[0], parts[1]] if parts else None,
        odd_cycle_witness=list(odd.vertices) if odd else None,
        triangle_count=len(triangles(graph)),
        has_4_cycle=any(c.length == 4 for c in cycles),
        long_even_cycles=long_even,
        cycles=[list(c.vertices) for c in cycles],
        cycle_cap=cap
    )


def has_four_cycle(graph: SimpleGraph) -> bool:
    """兩個頂點有 ≥ 2 個共同鄰居"""
    for u, v in combinations(graph.vertices, 2):
        if len(graph.adjacency[u] & graph.adjacency[v]) >= 2:
            return True
    return False


def odd_cycles(graph: SimpleGraph) -> List[Cycle]:
    return [c for c in enumerate_cycles(graph) if c.is_odd]


def disjoint_odd_cycle_pair(graph: SimpleGraph) -> Optional[Tuple[Cycle, Cycle]]:
    """第一組頂點不相交的奇循環（依長度與頂點序）；沒有則回傳 None"""
    cycles = odd_cycles(graph)
    for a, b in combinations(cycles, 2):
        if not (a.vertex_set() & b.vertex_set()):
            return a, b
    return None


def odd_cycles_pairwise_intersect(graph: SimpleGraph) -> bool:
    return disjoint_odd_cycle_pair(graph) is None


def _bowtie_pairs(tris: Sequence[Tuple[int, int, int]]) -> List[Tuple[int, Tuple[int, int, int], Tuple[int, int, int]]]:
    pairs = []
    for a, b in combinations(tris, 2):
        common = set(a) & set(b)
        if len(common) == 1:
            pairs.append((common.pop(), a, b))
    return pairs


def _triangle_edges(*tris: Tuple[int, int, int]) -> List[List[int]]:
    edges = set()
    for t in tris:
        for u, v in combinations(t, 2):
            edges.add(normalize_edge(u, v))
    return [list(e) for e in sorted(edges)]


def chorded_even_cycles(graph: SimpleGraph, k: int, l: int,
                        cycles: Optional[Iterable[Cycle]] = None) -> List[Tuple[Tuple[int, ...], Tuple[int, int]]]:
    """
    C_{k,ℓ} 出現位置：2k-循環 v_1..v_{2k} 與弦 {v_1, v_ℓ}

    Returns:
        List[(依標記順序的頂點, 弦)]
    """
    if k < 2 or not 3 <= l <= k + 1:
        raise NotApplicableError(f"C_{{k,l}} needs k >= 2 and 3 <= l <= k+1, got k={k}, l={l}")
    length = 2 * k
    hop = l - 1
    cycles = enumerate_cycles(graph, length) if cycles is None else cycles
    found = []
    for c in cycles:
        if c.length != length:
            continue
        seen = set()
        for i in range(length):
            for step in (1, -1):
                j = (i + step * hop) % length
                chord = normalize_edge(c.vertices[i], c.vertices[j])
                if chord in seen or not graph.has_edge(*chord):
                    continue
                seen.add(chord)
                labeled = tuple(c.vertices[(i + step * s) % length] for s in range(length))
                found.append((labeled, chord))
    return found


def find_special_subgraphs(graph: SimpleGraph,
                           kl_pairs: Optional[Sequence[Tuple[int, int]]] = None) -> List[SpecialSubgraph]:
    """
    找出 G₆、F₃ 與 C_{k,ℓ} 子圖

    Args:
        graph: 簡單圖
        kl_pairs: 要搜尋的 (k, ℓ)；預設為 k ≥ 4、2k ≤ n 的所有 3 ≤ ℓ ≤ k+1

    Returns:
        List[SpecialSubgraph]: 依 G6、F3、C_KL 的順序
    """
    tris = triangles(graph)
    found: List[SpecialSubgraph] = []

    # 1. 蝴蝶結：兩個三角形恰好共用一個頂點
    for center, a, b in _bowtie_pairs(tris):
        found.append(SpecialSubgraph(
            tag=SubgraphTag.G6,
            vertices=sorted(set(a) | set(b)),
            edges=_triangle_edges(a, b)
        ))

    # 2. 友誼圖：三個三角形兩兩只共用同一個中心
    for a, b, c in combinations(tris, 3):
        common = set(a) & set(b) & set(c)
        if len(common) != 1:
            continue
        if len(set(a) | set(b) | set(c)) != 7:
            continue
        found.append(SpecialSubgraph(
            tag=SubgraphTag.F3,
            vertices=sorted(set(a) | set(b) | set(c)),
            edges=_triangle_edges(a, b, c)
        ))

    # 3. 帶弦偶循環
    if kl_pairs is None:
        kl_pairs = [(k, l) for k in range(4, graph.n // 2 + 1) for l in range(3, k + 2)]
    if kl_pairs:
        cycles = enumerate_cycles(graph, max(2 * k for k, _ in kl_pairs))
        for k, l in kl_pairs:
            for labeled, chord in chorded_even_cycles(graph, k, l, cycles):
                edges = Cycle(labeled).edges() + [chord]
                found.append(SpecialSubgraph(
                    tag=SubgraphTag.C_KL,
                    vertices=list(labeled),
                    edges=[list(e) for e in edges],
                    k=k,
                    l=l
                ))
    return found


def odd_unicyclic_spanning_subgraph(graph: SimpleGraph) -> SimpleGraph:
    """
    生成樹加上一條封閉奇循環的邊

    Returns:
        SimpleGraph: N 條邊、唯一循環為奇循環（邊依原順序）

    Raises:
        DisconnectedGraphError: 非連通
        NotApplicableError: 二部圖
    """
    if not graph.is_connected():
        raise DisconnectedGraphError(graph.components())

    # BFS 樹：非樹邊 {u,v} 封閉奇循環 ⟺ depth[u] ≡ depth[v] (mod 2)
    g = graph.to_networkx()
    depth = nx.single_source_shortest_path_length(g, 1)
    tree = {normalize_edge(u, v) for u, v in nx.bfs_edges(g, 1, sort_neighbors=sorted)}
    closing = next(
        (e for e in graph.edges if e not in tree and depth[e[0]] % 2 == depth[e[1]] % 2),
        None
    )
    if closing is None:
        raise NotApplicableError(f"graph {graph.to_literal()} is bipartite")
    chosen = [i for i, e in enumerate(graph.edges) if e in tree or e == closing]
    return graph.edge_subgraph(chosen)
