"""
偶閉路徑：枚舉、f_Γ 二項式、Lemma 型檢查（walk 生成、三次生成元形狀）
"""
from typing import Dict, List, Optional, Set, Tuple
import logging

import networkx as nx

from models.algebra import Binomial, EvenClosedWalk, Monomial
from models.errors import InternalConsistencyError, NotApplicableError
from models.graph import SimpleGraph
from services.toric_service import ToricService
from utils.matrix_rank import rank

logger = logging.getLogger(__name__)

WalkKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _canonical(edges: Tuple[int, ...], trail: Tuple[int, ...]) -> WalkKey:
    """旋轉與反轉中字典序最小的 (邊序列, 頂點序列)"""
    L = len(edges)
    body = trail[:-1]
    best = None
    for seq, verts in ((edges, body), (edges[::-1], (body[0],) + body[:0:-1])):
        for r in range(L):
            rotated = seq[r:] + seq[:r]
            vs = verts[r:] + verts[:r]
            key = (rotated, vs + (vs[0],))
            if best is None or key < best:
                best = key
    return best


def even_closed_walks(graph: SimpleGraph, max_half_length: int) -> List[EvenClosedWalk]:
    """
    所有長度 ≤ 2·max_half_length 的偶閉路徑，旋轉、反轉視為相同

    以序列中最小的邊作為起點做 DFS，再取標準形去重。

    Returns:
        List[EvenClosedWalk]: 依（長度, 邊序列）排序
    """
    if max_half_length < 2:
        raise NotApplicableError(f"max_half_length must be at least 2, got {max_half_length}")
    limit = 2 * max_half_length
    g = graph.to_networkx()
    distance = dict(nx.all_pairs_shortest_path_length(g))
    incident = {
        v: sorted((graph.index_of(v, w), w) for w in graph.adjacency[v]) for v in graph.vertices
    }
    found: Set[WalkKey] = set()

    for s, (a, b) in enumerate(graph.edges):
        for start, nxt in ((a, b), (b, a)):
            edges = [s]
            trail = [start, nxt]

            def extend():
                here = trail[-1]
                steps = len(edges)
                if here == start and steps % 2 == 0:
                    found.add(_canonical(tuple(edges), tuple(trail)))
                if steps == limit:
                    return
                for idx, w in incident[here]:
                    if idx < s:
                        continue
                    if distance[w].get(start, limit + 1) > limit - steps - 1:
                        continue
                    edges.append(idx)
                    trail.append(w)
                    extend()
                    edges.pop()
                    trail.pop()

            extend()

    walks = [EvenClosedWalk(edge_indices=e, trail=t) for e, t in found]
    walks.sort(key=lambda w: (len(w.edge_indices), w.edge_indices, w.trail))
    logger.debug(f"{len(walks)} even closed walks up to length {limit}")
    return walks


def walk_binomial(walk: EvenClosedWalk, num_edges: int) -> Optional[Binomial]:
    """
    f_Γ = Π x_{奇數位置} − Π x_{偶數位置}

    Returns:
        Optional[Binomial]: 兩項相同時回傳 None（零）
    """
    plus = Monomial.from_indices(num_edges, walk.edge_indices[0::2])
    minus = Monomial.from_indices(num_edges, walk.edge_indices[1::2])
    if plus == minus:
        return None
    return Binomial(plus, minus)


def walk_binomials(graph: SimpleGraph, max_half_length: int) -> Dict[int, Set[Binomial]]:
    """
    各半長度的非零 f_Γ（正規化符號後去重）

    以 (目前頂點, 奇位置單項式, 偶位置單項式) 為狀態做 BFS，
    路徑只經過 ≥ 起點的頂點（每條閉路徑可旋轉到其最小頂點，只差正負號）。
    """
    n = graph.num_edges
    result: Dict[int, Set[Binomial]] = {h: set() for h in range(1, max_half_length + 1)}
    for start in graph.vertices:
        zero = (0,) * n
        frontier = {(start, zero, zero)}
        for step in range(1, 2 * max_half_length + 1):
            nxt = set()
            for here, odd, even in frontier:
                for w in graph.adjacency[here]:
                    if w < start:
                        continue
                    k = graph.index_of(here, w)
                    if step % 2:
                        exps = list(odd)
                        exps[k] += 1
                        nxt.add((w, tuple(exps), even))
                    else:
                        exps = list(even)
                        exps[k] += 1
                        nxt.add((w, odd, tuple(exps)))
            frontier = nxt
            if step % 2 == 0:
                for here, odd, even in frontier:
                    if here == start and odd != even:
                        result[step // 2].add(Binomial(Monomial(odd), Monomial(even)).normalized())
    return result


def verify_walk_generation(graph: SimpleGraph, q_max: int, toric: Optional[ToricService] = None) -> bool:
    """
    對每個 q ≤ q_max，{u·f_Γ : Γ 半長度 ≤ q} 的展成等於 (I_G)_q（逐纖維比較秩）
    """
    if q_max < 2:
        raise NotApplicableError(f"q_max must be at least 2, got {q_max}")
    toric = toric or ToricService(graph)
    binomials = walk_binomials(graph, q_max)
    for q in range(2, q_max + 1):
        fibers = toric.fibers(q)
        rows: Dict[Tuple[int, ...], List[List[int]]] = {}
        positions = {image: {m: i for i, m in enumerate(members)} for image, members in fibers.items() if len(members) > 1}
        for h in range(1, q + 1):
            lower = toric.fibers(q - h)
            for f in binomials[h]:
                f_image = toric.image_of(f.plus.exponents)
                for key, multipliers in lower.items():
                    target = tuple(a + b for a, b in zip(key, f_image))
                    if target not in positions:
                        continue
                    pos = positions[target]
                    for u in multipliers:
                        row = [0] * len(pos)
                        row[pos[tuple(a + b for a, b in zip(u, f.plus.exponents))]] = 1
                        row[pos[tuple(a + b for a, b in zip(u, f.minus.exponents))]] = -1
                        rows.setdefault(target, []).append(row)
        for image, members in fibers.items():
            if len(members) < 2:
                continue
            spanned = rank(rows.get(image, [])) if rows.get(image) else 0
            if spanned != len(members) - 1:
                logger.warning(f"walk binomials span {spanned} of {len(members) - 1} in fiber {image}, degree {q}")
                return False
    return True


def _tag(walk: EvenClosedWalk) -> Optional[str]:
    """C6：六個相異頂點；G6：重複一個頂點，兩次出現相隔 3（兩個三角形）"""
    body = walk.trail[:-1]
    distinct = len(set(body))
    if distinct == 6:
        return "C6"
    if distinct == 5:
        repeated = next(v for v in body if body.count(v) == 2)
        i = body.index(repeated)
        if body[(i + 3) % 6] == repeated:
            return "G6"
    return None


def classify_degree3_walks(graph: SimpleGraph, toric: Optional[ToricService] = None) -> List[Tuple[EvenClosedWalk, str]]:
    """
    長度 6 且 f_Γ 不在 (m·I_G)_3 的偶閉路徑，依二項式分組後標記為 C6 或 G6

    Raises:
        InternalConsistencyError: 某組二項式沒有可標記的路徑
    """
    toric = toric or ToricService(graph)
    n = graph.num_edges
    groups: Dict[Binomial, List[EvenClosedWalk]] = {}
    for walk in even_closed_walks(graph, 3):
        if walk.half_length != 3:
            continue
        f = walk_binomial(walk, n)
        if f is None:
            continue
        groups.setdefault(f.normalized(), []).append(walk)

    fibers = toric.fibers(3)
    result = []
    for f in sorted(groups, key=lambda b: (b.plus.exponents, b.minus.exponents), reverse=True):
        image = toric.image_of(f.plus.exponents)
        members = fibers[image]
        position = {m: i for i, m in enumerate(members)}
        base = []
        for a, b in toric.multiple_pairs(image, 3, members):
            row = [0] * len(members)
            row[a], row[b] = 1, -1
            base.append(row)
        candidate = [0] * len(members)
        candidate[position[f.plus.exponents]] = 1
        candidate[position[f.minus.exponents]] = -1
        before = rank(base) if base else 0
        if rank(base + [candidate]) == before:
            continue

        tagged = None
        for walk in groups[f]:
            tag = _tag(walk)
            if tag:
                tagged = (walk, tag)
                break
        if tagged is None:
            raise InternalConsistencyError(f"degree-3 walk binomial {f} of {graph.to_literal()} is neither C6 nor G6")
        result.append(tagged)
    return result

