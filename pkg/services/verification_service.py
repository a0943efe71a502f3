"""
Lemma 驗證：在小圖語料庫或明確構造的圖上檢查各個次數與生成元命題
"""
from itertools import combinations, permutations
from time import perf_counter
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from config import CORPUS_MAX_N, DEFAULT_JMAX, DEFAULT_MAX_N, DEFAULT_QMAX
from models.errors import NotApplicableError, ResourceGuardError
from models.graph import SimpleGraph
from models.schemas import Counterexample, LemmaId, VerificationResult
from services.corpus_service import enumerate_connected_graphs
from services.graph_service import (
    disjoint_odd_cycle_pair, enumerate_cycles, has_chord, has_four_cycle, odd_cycles_pairwise_intersect, triangles
)
from services.polytope_service import (
    degree_by_interior, delta_polynomial, edge_polytope, edge_subpolytope, relint_contains
)
from services.sweep_service import SweepService
from services.toric_service import ToricService, diophantine_check, linearity_verdict
from utils.edge_list_parser import format_edge_list
from utils.gadgets import chorded_cycle, cycle_graph, friendship, hexagon_union

logger = logging.getLogger(__name__)

# 六邊形聯集的圖例：v_1 = 1，其餘未列出的 v_i 為新頂點
HEXAGON_FIGURES: Dict[str, Tuple[Optional[int], ...]] = {
    "(v2,v3)=(2,4)": (1, 2, 4, None, None, None),
    "(v2,v3)=(3,2)": (1, 3, 2, None, None, None),
    "(v2,v4)=(2,5)": (1, 2, None, 5, None, None),
    "(v2,v4)=(3,4)": (1, 3, None, 4, None, None),
    "(v2,v3,v4)=(2,3,4)": (1, 2, 3, 4, None, None),
    "(v2,v3,v4)=(2,3,5)": (1, 2, 3, 5, None, None),
    "(v2,v3,v4)=(2,4,5)": (1, 2, 4, 5, None, None),
    "(v2,v3,v4,v5)=(2,4,5,6)": (1, 2, 4, 5, 6, None),
    "(v2,v3,v4,v5)=(3,4,5,6)": (1, 3, 4, 5, 6, None),
    "(v2,v3,v5,v6)=(3,2,5,6)": (1, 3, 2, None, 5, 6),
}


def _counterexample(graph: SimpleGraph, lemma_id: LemmaId, detail: Dict[str, Any]) -> Counterexample:
    return Counterexample(
        graph=graph.to_literal(),
        edge_list=format_edge_list(graph, comment=f"{lemma_id.value} counterexample"),
        detail=detail
    )


# ============================================================
# 逐圖檢查（模組層級，可被 ProcessPoolExecutor pickle）
# ============================================================

def check_disjoint_odd_cycles(graph: SimpleGraph) -> Optional[Dict[str, Any]]:
    """
    兩個不相交奇循環 ⇒ deg(P_G) ≥ 3，並檢查 (1,…,1) ∈ int((k+ℓ+1)Q)

    Returns:
        None 表示不適用；否則為 {'ok', 'degree', 'witness_interior', 'cycles'}
    """
    if graph.num_edges == 0:
        return None
    pair = disjoint_odd_cycle_pair(graph)
    if pair is None:
        return None
    a, b = pair
    indices = sorted({graph.index_of(u, v) for u, v in a.edges() + b.edges()})
    Q = edge_subpolytope(graph, indices)
    witness = [0] * graph.n
    for v in a.vertices + b.vertices:
        witness[v - 1] = 1
    t = (a.length + b.length) // 2
    interior = relint_contains(Q, t, witness)
    degree = degree_by_interior(edge_polytope(graph))
    return {
        'ok': degree >= 3 and interior,
        'degree': degree,
        'witness_interior': interior,
        'cycles': [list(a.vertices), list(b.vertices)]
    }


def check_low_degree_intersection(graph: SimpleGraph) -> Optional[Dict[str, Any]]:
    """deg(P_G) ≤ 2 ⇒ 任兩個奇循環有共同頂點"""
    if graph.num_edges == 0:
        return None
    degree = degree_by_interior(edge_polytope(graph))
    intersect = odd_cycles_pairwise_intersect(graph)
    return {'ok': degree > 2 or intersect, 'degree': degree, 'pairwise_intersect': intersect}


def check_three_triangles(graph: SimpleGraph) -> Optional[Dict[str, Any]]:
    """≥ 3 個三角形且沒有 4-循環 ⇒ deg(P_G) ≥ 3"""
    count = len(triangles(graph))
    if count < 3 or has_four_cycle(graph):
        return None
    degree = degree_by_interior(edge_polytope(graph))
    return {'ok': degree >= 3, 'degree': degree, 'triangles': count}


class LinearityScreen:
    """
    截斷 q-線性 ⇒ 恰好一個極小生成元

    先看低次的 μ_j：任何 j < q 有生成元就不可能是 q-線性，直接跳過。
    """

    def __init__(self, q: int, q_max: int, j_max: int):
        self.q = q
        self.q_max = max(q_max, q + 1)
        self.j_max = max(j_max, q + 2, self.q_max + 1)

    def __call__(self, graph: SimpleGraph) -> Optional[Dict[str, Any]]:
        if graph.num_edges == 0:
            # 零理想：不是 q-線性，前提不成立
            return {'ok': True, 'screened_out': False, 'linear': False, 'total_generators': 0, 'mu': {}, 'beta2': {}}
        toric = ToricService(graph)
        for j in range(2, self.q):
            if toric.mu(j):
                return {'ok': True, 'screened_out': True}
        table = toric.truncated_betti(self.q_max, self.j_max)
        linear = linearity_verdict(table, self.q)
        total = sum(table.mu.values())
        return {
            'ok': not linear or total == 1,
            'screened_out': False,
            'linear': linear,
            'total_generators': total,
            'mu': {str(q): v for q, v in table.mu.items() if v},
            'beta2': {str(j): v for j, v in table.beta2.items() if v},
        }


# ============================================================
# 六邊形聯集
# ============================================================

def hexagon_identifications() -> List[Tuple[Optional[int], ...]]:
    """C₂ 的頂點 v_1..v_6 對應到 C₁ 頂點（單射）或新頂點（None）的所有方式"""
    result = []
    for k in range(7):
        for positions in combinations(range(6), k):
            for targets in permutations(range(1, 7), k):
                ident: List[Optional[int]] = [None] * 6
                for p, t in zip(positions, targets):
                    ident[p] = t
                result.append(tuple(ident))
    return result


def hexagon_union_classes() -> List[Tuple[SimpleGraph, Tuple[Optional[int], ...], int]]:
    """
    六邊形聯集的同構類（排除 C₂ = C₁）

    Returns:
        List[(代表圖, 第一個產生它的對應, 共用頂點數)]
    """
    c1 = frozenset(cycle_graph(6).edges)
    buckets: Dict[str, List[Tuple[SimpleGraph, nx.Graph, Tuple[Optional[int], ...], int]]] = {}
    order: List[Tuple[str, int]] = []
    for ident in hexagon_identifications():
        graph, _ = hexagon_union(ident)
        if frozenset(graph.edges) == c1:
            continue
        g = graph.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(g)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, other) for _, other, _, _ in bucket):
            continue
        shared = sum(1 for v in ident if v is not None)
        bucket.append((graph, g, ident, shared))
        order.append((key, len(bucket) - 1))
    return [(buckets[k][i][0], buckets[k][i][2], buckets[k][i][3]) for k, i in order]


def _long_even_cycles(graph: SimpleGraph) -> List[Dict[str, Any]]:
    return [
        {'vertices': list(c.vertices), 'length': c.length, 'has_chord': has_chord(graph, c)}
        for c in enumerate_cycles(graph) if c.length >= 8 and not c.is_odd
    ]


def check_hexagon_union(graph: SimpleGraph) -> Dict[str, Any]:
    """
    聯集 H 有 4-循環、長度 ≥ 8 且帶弦的偶循環，或 deg(P_H) ≥ 3

    沒有弦的長偶循環只列在 long_even_cycles，不算逃脫條件。
    """
    if has_four_cycle(graph):
        return {'ok': True, 'escape': '4-cycle'}
    long_even = _long_even_cycles(graph)
    if any(c['has_chord'] for c in long_even):
        return {'ok': True, 'escape': 'chorded even cycle >= 8', 'long_even_cycles': long_even}
    degree = degree_by_interior(edge_polytope(graph))
    return {
        'ok': degree >= 3,
        'escape': 'degree' if degree >= 3 else None,
        'degree': degree,
        'long_even_cycles': long_even
    }


# ============================================================
# 驗證服務
# ============================================================

class VerificationService:
    """各 lemma 的驗證器"""

    def __init__(
        self,
        max_n: int = DEFAULT_MAX_N,
        q_max: int = DEFAULT_QMAX,
        j_max: int = DEFAULT_JMAX,
        slow: bool = False,
        include_q5: bool = False,
        k: Optional[int] = None,
        l: Optional[int] = None,
        sweep: Optional[SweepService] = None
    ):
        self.max_n = max_n
        self.q_max = q_max
        self.j_max = j_max
        self.slow = slow
        self.include_q5 = include_q5
        self.k = k
        self.l = l
        self.sweep = sweep or SweepService()

    def run(self, lemma_id: LemmaId) -> VerificationResult:
        """
        執行驗證

        Args:
            lemma_id: 要驗證的 lemma

        Returns:
            VerificationResult: 反例依語料庫順序排列

        Raises:
            ResourceGuardError: 語料庫大小超出上限
            NotApplicableError: 參數不合法
        """
        handlers = {
            LemmaId.L41: self._verify_l41,
            LemmaId.L42: self._verify_l42,
            LemmaId.L43: self._verify_l43,
            LemmaId.L44: self._verify_l44,
            LemmaId.L45: self._verify_l45,
            LemmaId.THM: self._verify_theorem,
            LemmaId.CONJ: self._verify_conjecture,
        }
        lemma_id = LemmaId(lemma_id)
        logger.info(f"Verifying {lemma_id.value}")
        started = perf_counter()
        result = handlers[lemma_id]()
        result.wall_time = perf_counter() - started
        logger.info(
            f"{lemma_id.value}: {result.instances_checked} instances, "
            f"{len(result.counterexamples)} counterexamples in {result.wall_time:.2f}s"
        )
        return result

    # ------------------------------------------------------------
    # 語料庫
    # ------------------------------------------------------------

    def _corpus(self) -> List[SimpleGraph]:
        if not 1 <= self.max_n <= CORPUS_MAX_N:
            raise ResourceGuardError(
                f"verifiers allow 1 <= max_n <= {CORPUS_MAX_N}, got {self.max_n}", limit=CORPUS_MAX_N
            )
        return list(enumerate_connected_graphs(self.max_n))

    def _screen(self, lemma_id: LemmaId, check, asserted: bool = True,
                params: Optional[Dict[str, Any]] = None) -> Tuple[VerificationResult, List[Optional[dict]]]:
        """在語料庫上套用 check；None 表示不在命題的前提內"""
        graphs = self._corpus()
        findings = self.sweep.map(check, graphs)
        counterexamples = []
        applicable = 0
        degrees: Dict[int, int] = {}
        for graph, finding in zip(graphs, findings):
            if finding is None:
                continue
            applicable += 1
            if 'degree' in finding:
                degrees[finding['degree']] = degrees.get(finding['degree'], 0) + 1
            if not finding['ok']:
                counterexamples.append(_counterexample(graph, lemma_id, finding))
        details: Dict[str, Any] = {
            'corpus_size': len(graphs),
            'hypothesis_holds': applicable,
        }
        if degrees:
            details['degree_histogram'] = {str(d): c for d, c in sorted(degrees.items())}
        return VerificationResult(
            lemma_id=lemma_id,
            params={'max_n': self.max_n, **(params or {})},
            instances_checked=applicable,
            counterexamples=counterexamples,
            asserted=asserted,
            details=details
        ), findings

    def _verify_l41(self) -> VerificationResult:
        result, _ = self._screen(LemmaId.L41, check_disjoint_odd_cycles)
        return result

    def _verify_l42(self) -> VerificationResult:
        result, findings = self._screen(LemmaId.L42, check_low_degree_intersection)
        result.details['pairwise_intersecting'] = sum(1 for f in findings if f and f['pairwise_intersect'])
        return result

    def _verify_l43(self) -> VerificationResult:
        result, _ = self._screen(LemmaId.L43, check_three_triangles)

        # 友誼圖 F₃ 本身
        gadget = friendship(3)
        degree = degree_by_interior(edge_polytope(gadget))
        result.details['friendship_degree'] = degree
        ok = degree == 3
        if self.slow:
            delta = delta_polynomial(edge_polytope(gadget))
            result.details['friendship_delta'] = list(delta.coefficients)
            ok = ok and delta.degree == 3
        if not ok:
            result.counterexamples.append(_counterexample(gadget, LemmaId.L43, {'degree': degree, 'expected': 3}))
        result.instances_checked += 1
        return result

    def _verify_l44(self) -> VerificationResult:
        """
        C_{k,ℓ}：dim = 2k−1（ℓ 奇）/ 2k−2（ℓ 偶），deg = k−1，
        且 (e_1+…+e_2k) + (e_1+e_ℓ) ∈ int((k+1)P)

        ℓ 偶時 (1,…,1) ∈ int(kP)，所以 codeg = k，次數同樣是 k−1。
        """
        if self.k is not None:
            if self.k < 4:
                raise NotApplicableError(f"k must be at least 4, got {self.k}")
            ls = [self.l] if self.l is not None else list(range(3, self.k + 2))
            cases = [(self.k, l) for l in ls]
        else:
            ks = [4, 5] if self.slow else [4]
            cases = [(k, l) for k in ks for l in range(3, k + 2)]
        for k, l in cases:
            if not 3 <= l <= k + 1:
                raise NotApplicableError(f"l must satisfy 3 <= l <= k+1, got k={k}, l={l}")

        counterexamples = []
        table = []
        for k, l in cases:
            graph = chorded_cycle(k, l)
            P = edge_polytope(graph)
            expected_dim = 2 * k - 1 if l % 2 else 2 * k - 2
            # ℓ 偶數也是 k−1（不是 k−2）：C_{2k} ⊂ C_{k,ℓ} 的次數已經是 k−1，且 (1,…,1) ∈ int(kP)
            expected_degree = k - 1
            degree = degree_by_interior(P)
            witness = [1] * (2 * k)
            witness[0] += 1
            witness[l - 1] += 1
            interior = relint_contains(P, k + 1, witness)
            row: Dict[str, Any] = {
                'k': k, 'l': l,
                'dim': P.intrinsic_dim, 'expected_dim': expected_dim,
                'degree': degree, 'expected_degree': expected_degree,
                'witness_interior': interior,
            }
            ok = P.intrinsic_dim == expected_dim and degree == expected_degree and interior
            if self.slow and k == 4:
                delta = delta_polynomial(P)
                row['delta'] = list(delta.coefficients)
                ok = ok and delta.degree == expected_degree
            table.append(row)
            if not ok:
                counterexamples.append(_counterexample(graph, LemmaId.L44, row))

        return VerificationResult(
            lemma_id=LemmaId.L44,
            params={'k': self.k, 'l': self.l, 'slow': self.slow},
            instances_checked=len(cases),
            counterexamples=counterexamples,
            details={'cases': table}
        )

    def _verify_l45(self) -> VerificationResult:
        """
        兩個六邊形 C₁、C₂ 的所有頂點對應：
        不相交時 deg(Q) = 4；恰共用一個頂點時 deg(P_H) = 4；
        其餘每個聯集都有 4-循環、長度 ≥ 8 的偶循環或 deg(P_H) ≥ 3
        """
        counterexamples = []
        details: Dict[str, Any] = {}

        # 1. 不相交（卷積計數）
        disjoint, _ = hexagon_union((None,) * 6)
        Q = edge_subpolytope(disjoint, range(disjoint.num_edges))
        delta_q = delta_polynomial(Q)
        details['disjoint'] = {'dim': Q.intrinsic_dim, 'delta': list(delta_q.coefficients), 'degree': delta_q.degree}
        if delta_q.degree != 4:
            counterexamples.append(_counterexample(disjoint, LemmaId.L45, details['disjoint']))

        # 2. 共用一個頂點
        shared, _ = hexagon_union((1, None, None, None, None, None))
        P_h = edge_polytope(shared)
        degree_h = degree_by_interior(P_h)
        details['one_shared_vertex'] = {'dim': P_h.intrinsic_dim, 'degree': degree_h}
        ok = degree_h == 4
        if self.slow:
            delta_h = delta_polynomial(P_h)
            details['one_shared_vertex']['delta'] = list(delta_h.coefficients)
            ok = ok and delta_h.degree == 4
        if not ok:
            counterexamples.append(_counterexample(shared, LemmaId.L45, details['one_shared_vertex']))

        # 3. 所有對應的同構類
        classes = hexagon_union_classes()
        escapes: Dict[str, int] = {}
        checked = 2
        for graph, ident, count in classes:
            if count == 0:
                continue
            checked += 1
            finding = check_hexagon_union(graph)
            escapes[str(finding['escape'])] = escapes.get(str(finding['escape']), 0) + 1
            if not finding['ok']:
                counterexamples.append(_counterexample(graph, LemmaId.L45, {
                    **finding, 'identification': list(ident), 'shared_vertices': count
                }))

        # 4. 圖例中的聯集都在枚舉結果裡，且 deg(P_H) ≥ 3
        figures = {}
        reps = [(g.to_networkx(), g) for g, _, count in classes if count]
        for caption, ident in HEXAGON_FIGURES.items():
            graph, _ = hexagon_union(ident)
            g = graph.to_networkx()
            found = any(nx.is_isomorphic(g, other) for other, _ in reps)
            degree = degree_by_interior(edge_polytope(graph))
            figures[caption] = {'enumerated': found, 'degree': degree}
            if not found or degree < 3:
                counterexamples.append(_counterexample(graph, LemmaId.L45, {'figure': caption, **figures[caption]}))

        details['classes'] = len(classes)
        details['escapes'] = escapes
        details['figures'] = figures
        return VerificationResult(
            lemma_id=LemmaId.L45,
            params={'slow': self.slow},
            instances_checked=checked,
            counterexamples=counterexamples,
            details=details
        )

    # ------------------------------------------------------------
    # 線性解析 ⇒ hypersurface
    # ------------------------------------------------------------

    def _verify_theorem(self) -> VerificationResult:
        """3-線性（截斷）⇒ hypersurface，並確認 c(c+1)(c+2)/6 = 2 無正整數解"""
        screen = LinearityScreen(3, self.q_max, self.j_max)
        result, findings = self._screen(LemmaId.THM, screen, params={'qmax': screen.q_max, 'jmax': screen.j_max})
        result.details['linear_graphs'] = self._linear_graphs(findings)
        diophantine = diophantine_check()
        result.details['diophantine_ok'] = diophantine
        if not diophantine:
            result.counterexamples.append(Counterexample(
                graph='-', edge_list='', detail={'diophantine': 'c(c+1)(c+2)/6 = 2 has a solution'}
            ))
        return result

    def _verify_conjecture(self) -> VerificationResult:
        """q = 4（可加 q = 5）的同一篩選；只回報，不斷言"""
        degrees = [4, 5] if self.include_q5 else [4]
        counterexamples = []
        checked = 0
        details: Dict[str, Any] = {}
        for q in degrees:
            screen = LinearityScreen(q, self.q_max, self.j_max)
            partial, findings = self._screen(LemmaId.CONJ, screen, asserted=False)
            checked += partial.instances_checked
            for ce in partial.counterexamples:
                ce.detail['q'] = q
            counterexamples.extend(partial.counterexamples)
            details[f"q={q}"] = {
                'screened': partial.instances_checked,
                'counterexamples': len(partial.counterexamples),
                'linear_graphs': self._linear_graphs(findings)
            }
        return VerificationResult(
            lemma_id=LemmaId.CONJ,
            params={'max_n': self.max_n, 'qmax': self.q_max, 'jmax': self.j_max, 'include_q5': self.include_q5},
            instances_checked=checked,
            counterexamples=counterexamples,
            asserted=False,
            details=details
        )

    def _linear_graphs(self, findings: Sequence[Optional[dict]]) -> List[str]:
        graphs = self._corpus()
        return [g.to_literal() for g, f in zip(graphs, findings) if f and f.get('linear')]


def verify(lemma_id: LemmaId, **params) -> VerificationResult:
    return VerificationService(**params).run(lemma_id)
