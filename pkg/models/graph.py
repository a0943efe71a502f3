"""
圖的資料模型：SimpleGraph、Cycle、GraphCorpus
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from models.errors import GraphValidationError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """有限簡單圖，頂點 1..n，邊的順序即變數順序 x_1..x_m"""
    n: int
    edges: Tuple[Edge, ...]
    adjacency: Dict[int, FrozenSet[int]] = field(init=False, repr=False, compare=False)
    edge_index: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphValidationError(f"vertex count must be a positive integer, got {self.n!r}")

        normalized: List[Edge] = []
        index: Dict[Edge, int] = {}
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphValidationError(f"vertex out of range in edge {{{u},{v}}}", edge=(u, v))
            if u == v:
                raise GraphValidationError(f"loop {{{u},{v}}}", edge=(u, v))
            e = normalize_edge(u, v)
            if e in index:
                raise GraphValidationError(f"duplicate edge {{{u},{v}}}", edge=(u, v))
            index[e] = len(normalized)
            normalized.append(e)

        neighbors: Dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for u, v in normalized:
            neighbors[u].add(v)
            neighbors[v].add(u)

        object.__setattr__(self, 'edges', tuple(normalized))
        object.__setattr__(self, 'edge_index', index)
        object.__setattr__(self, 'adjacency', {v: frozenset(s) for v, s in neighbors.items()})

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edge_index

    def index_of(self, u: int, v: int) -> int:
        """0-based variable index of edge {u,v}"""
        return self.edge_index[normalize_edge(u, v)]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def components(self) -> List[List[int]]:
        """連通分量（含孤立點），依最小頂點排序"""
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def edge_subgraph(self, indices: Iterable[int]) -> 'SimpleGraph':
        """保留頂點集合，只取部分邊（依原順序）"""
        chosen = sorted(set(indices))
        return SimpleGraph(self.n, tuple(self.edges[i] for i in chosen))

    def compact(self) -> Tuple['SimpleGraph', Dict[int, int]]:
        """移除孤立點並重新編號；回傳 (新圖, 舊頂點→新頂點)"""
        used = sorted({v for e in self.edges for v in e})
        mapping = {old: new for new, old in enumerate(used, start=1)}
        relabeled = tuple((mapping[u], mapping[v]) for u, v in self.edges)
        return SimpleGraph(max(len(used), 1), relabeled), mapping

    def relabel(self, mapping: Dict[int, int]) -> 'SimpleGraph':
        """依 mapping 重新編號頂點（必須是 1..n 的排列），邊順序不變"""
        return SimpleGraph(self.n, tuple((mapping[u], mapping[v]) for u, v in self.edges))

    def degree_sequence(self) -> List[int]:
        return sorted((self.degree(v) for v in self.vertices), reverse=True)

    def to_literal(self) -> str:
        """inline 格式 "N;u-v,u-v,..." """
        return f"{self.n};" + ",".join(f"{u}-{v}" for u, v in self.edges)


def new_graph(n: int, edge_list: Sequence[Sequence[int]]) -> SimpleGraph:
    """
    建立並驗證簡單圖

    Args:
        n: 頂點數
        edge_list: 邊列表（順序保留為變數順序）

    Returns:
        SimpleGraph

    Raises:
        GraphValidationError: 自環、重複邊、頂點超出範圍、空邊列表
    """
    pairs = []
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphValidationError(f"edge must have two endpoints, got {tuple(pair)!r}")
        pairs.append((int(pair[0]), int(pair[1])))
    if not pairs:
        raise GraphValidationError("edge list is empty")
    return SimpleGraph(n, tuple(pairs))


@dataclass(frozen=True)
class Cycle:
    """簡單循環（頂點的循環序列，頂點不重複）"""
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    def edges(self) -> List[Edge]:
        k = self.length
        return [normalize_edge(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges())

    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    def is_valid_in(self, graph: SimpleGraph) -> bool:
        if len(set(self.vertices)) != self.length or self.length < 3:
            return False
        return all(graph.has_edge(u, v) for u, v in self.edges())


@dataclass(frozen=True)
class GraphCorpus:
    """連通圖同構類的代表元（順序固定）"""
    max_n: int
    graphs: Tuple[SimpleGraph, ...]

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[SimpleGraph]:
        return iter(self.graphs)

    def counts_by_n(self) -> Dict[int, int]:
        counts = Counter(g.n for g in self.graphs)
        return {n: counts.get(n, 0) for n in range(1, self.max_n + 1)}
