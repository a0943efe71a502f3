"""
分析報告：結構、多面體、toric ideal 與 lemma 旗標
"""
import logging

from config import APP_VERSION, DEFAULT_JMAX, DEFAULT_QMAX, SCHEMA_VERSION
from models.errors import DisconnectedGraphError, InternalConsistencyError, NotApplicableError
from models.graph import SimpleGraph
from models.schemas import (
    AnalysisReport, GraphSummary, IdealReport, LemmaFlags, PolytopeReport, ReportMeta
)
from services.graph_service import classify_structure, disjoint_odd_cycle_pair, find_special_subgraphs
from services.polytope_service import codegree_by_interior, delta_polynomial, edge_polytope
from services.toric_service import ToricService

logger = logging.getLogger(__name__)


class ReportService:
    """單一圖的完整分析"""

    def __init__(self, q_max: int = DEFAULT_QMAX, j_max: int = DEFAULT_JMAX):
        if q_max < 2:
            raise NotApplicableError(f"qmax must be at least 2, got {q_max}")
        if j_max < q_max + 1:
            raise NotApplicableError(f"jmax must be at least qmax + 1, got qmax={q_max}, jmax={j_max}")
        self.q_max = q_max
        self.j_max = j_max

    def analyze(self, graph: SimpleGraph) -> AnalysisReport:
        """
        產生 AnalysisReport

        Args:
            graph: 連通簡單圖

        Returns:
            AnalysisReport: 相同輸入與界限下輸出完全相同

        Raises:
            DisconnectedGraphError: 非連通圖
        """
        if not graph.is_connected():
            raise DisconnectedGraphError(graph.components())
        logger.info(f"Analyzing {graph.to_literal()} (qmax={self.q_max}, jmax={self.j_max})")

        # 1. 結構
        structure = classify_structure(graph)

        # 2. 多面體（δ 與內點兩條路徑互相核對）
        polytope = edge_polytope(graph)
        delta = delta_polynomial(polytope)
        codegree = codegree_by_interior(polytope)
        if codegree != delta.codegree:
            raise InternalConsistencyError(
                f"codegree by interior search is {codegree}, delta polynomial gives {delta.codegree}"
            )

        # 3. toric ideal
        toric = ToricService(graph)
        table = toric.truncated_betti(self.q_max, self.j_max)
        summary = toric.ideal_summary(table, polytope_degree=delta.degree)

        # 4. lemma 旗標
        pair = disjoint_odd_cycle_pair(graph)

        return AnalysisReport(
            graph=GraphSummary(
                n=graph.n,
                m=graph.num_edges,
                edges=[list(e) for e in graph.edges],
                literal=graph.to_literal(),
                degree_sequence=graph.degree_sequence(),
                connected=structure.connected,
                bipartite=structure.bipartite
            ),
            polytope=PolytopeReport(
                ambient_dim=polytope.ambient_dim,
                dim=polytope.intrinsic_dim,
                delta=list(delta.coefficients),
                degree=delta.degree,
                codegree=delta.codegree,
                codegree_by_interior=codegree,
                ehrhart_counts=list(delta.ehrhart_counts),
                sanity_violations=delta.sanity_violations()
            ),
            ideal=IdealReport(
                betti=table,
                summary=summary,
                generators=toric.generator_records(self.q_max)
            ),
            flags=LemmaFlags(
                has_4_cycle=structure.has_4_cycle,
                triangle_count=structure.triangle_count,
                disjoint_odd_cycles=[list(pair[0].vertices), list(pair[1].vertices)] if pair else None,
                odd_cycles_pairwise_intersect=pair is None,
                long_even_cycles=structure.long_even_cycles,
                special_subgraphs=find_special_subgraphs(graph)
            ),
            meta=ReportMeta(
                schema_version=SCHEMA_VERSION,
                version=APP_VERSION,
                q_max=self.q_max,
                j_max=self.j_max,
                truncated=table.truncated
            )
        )
