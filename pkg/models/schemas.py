"""
Pydantic schemas for reports, verifier results and API requests (JSON schema v1)
"""
from pydantic import BaseModel, Field, model_validator
from datetime import datetime
from typing import Any, Dict, List, Optional
from enum import Enum

from config import DEFAULT_JMAX, DEFAULT_MAX_N, DEFAULT_QMAX


class LemmaId(str, Enum):
    L41 = "L41"
    L42 = "L42"
    L43 = "L43"
    L44 = "L44"
    L45 = "L45"
    THM = "THM"
    CONJ = "CONJ"


class SubgraphTag(str, Enum):
    G6 = "G6"
    F3 = "F3"
    C_KL = "C_KL"


class CorpusView(str, Enum):
    ALL = "all"
    POLYTOPE = "polytope"
    IDEAL = "ideal"


# ============================================================
# Graph Schemas
# ============================================================

class EvenCycleRecord(BaseModel):
    """長度 ≥ 8 的偶循環與其弦"""
    vertices: List[int]
    length: int
    has_chord: bool


class StructureReport(BaseModel):
    """圖的結構摘要"""
    connected: bool
    components: List[List[int]]
    bipartite: bool
    bipartition: Optional[List[List[int]]] = None
    odd_cycle_witness: Optional[List[int]] = None
    triangle_count: int
    has_4_cycle: bool
    long_even_cycles: List[EvenCycleRecord] = Field(default_factory=list)
    cycles: List[List[int]] = Field(default_factory=list)
    cycle_cap: int


class SpecialSubgraph(BaseModel):
    """特殊子圖（G₆ 蝴蝶結、F₃ 友誼圖、C_{k,ℓ} 帶弦偶循環）"""
    tag: SubgraphTag
    vertices: List[int]
    edges: List[List[int]]
    k: Optional[int] = None
    l: Optional[int] = None


# ============================================================
# Polytope / Ideal Schemas
# ============================================================

class BettiTable(BaseModel):
    """截斷的 Betti 表：μ_q（極小生成元個數）與 β_{2,j}"""
    mu: Dict[int, int]
    beta2: Dict[int, int]
    q_max: int
    j_max: int
    truncated: bool = True


class GeneratorRecord(BaseModel):
    """極小生成元（纖維差二項式）"""
    degree: int
    binomial: str
    fiber: List[int]


class EisenbudGotoCheck(BaseModel):
    q: int
    expected: int
    observed: int
    matches: bool


class IdealSummary(BaseModel):
    """環維度、餘維度、生成元次數與線性判定"""
    ring_dim: int
    codim: int
    generator_degrees: List[int]
    total_generators: int
    hypersurface: bool
    linearity: Dict[int, bool]
    eisenbud_goto: List[EisenbudGotoCheck]
    diophantine_ok: bool
    regularity_lower_bound: Optional[int] = None
    hypersurface_regularity: Optional[int] = None
    regularity_consistent: Optional[bool] = None
    truncated: bool = True


class GraphSummary(BaseModel):
    n: int
    m: int
    edges: List[List[int]]
    literal: str
    degree_sequence: List[int]
    connected: bool
    bipartite: bool


class PolytopeReport(BaseModel):
    ambient_dim: int
    dim: int
    delta: List[int]
    degree: int
    codegree: int
    codegree_by_interior: int
    ehrhart_counts: List[int]
    sanity_violations: List[str] = Field(default_factory=list)


class IdealReport(BaseModel):
    betti: BettiTable
    summary: IdealSummary
    generators: List[GeneratorRecord]


class LemmaFlags(BaseModel):
    has_4_cycle: bool
    triangle_count: int
    disjoint_odd_cycles: Optional[List[List[int]]] = None
    odd_cycles_pairwise_intersect: bool
    long_even_cycles: List[EvenCycleRecord] = Field(default_factory=list)
    special_subgraphs: List[SpecialSubgraph] = Field(default_factory=list)


class ReportMeta(BaseModel):
    schema_version: str
    version: str
    q_max: int
    j_max: int
    truncated: bool


class AnalysisReport(BaseModel):
    """單一圖的完整分析報告（頂層鍵 graph/polytope/ideal/flags/meta）"""
    graph: GraphSummary
    polytope: PolytopeReport
    ideal: IdealReport
    flags: LemmaFlags
    meta: ReportMeta


# ============================================================
# Verification / Corpus Schemas
# ============================================================

class Counterexample(BaseModel):
    """反例（graph 為 inline 格式，edge_list 為可重跑的邊列表文字）"""
    graph: str
    edge_list: str
    detail: Dict[str, Any] = Field(default_factory=dict)


class VerificationResult(BaseModel):
    lemma_id: LemmaId
    params: Dict[str, Any] = Field(default_factory=dict)
    instances_checked: int
    counterexamples: List[Counterexample] = Field(default_factory=list)
    asserted: bool = True
    wall_time: float = 0.0
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.asserted or not self.counterexamples


class CorpusRecord(BaseModel):
    index: int
    n: int
    m: int
    graph: str
    bipartite: bool
    has_4_cycle: bool
    dim: Optional[int] = None
    delta: Optional[List[int]] = None
    degree: Optional[int] = None
    mu: Optional[Dict[int, int]] = None
    codim: Optional[int] = None
    hypersurface: Optional[bool] = None


class CorpusSummary(BaseModel):
    max_n: int
    which: CorpusView
    total: int
    counts_by_n: Dict[int, int]
    four_cycle_count: int
    hypersurface_count: Optional[int] = None
    degree_histogram: Dict[int, int] = Field(default_factory=dict)
    records: List[CorpusRecord] = Field(default_factory=list)


class MonotonicityPair(BaseModel):
    """子圖對：deg(P_sub) ≤ deg(P_graph)"""
    graph: str
    subgraph: str
    graph_degree: int
    subgraph_degree: int


class MonotonicityReport(BaseModel):
    max_n: int
    seed: int
    pairs_checked: int
    violations: List[MonotonicityPair] = Field(default_factory=list)


# ============================================================
# API Request / Response Schemas
# ============================================================

class AnalyzeRequest(BaseModel):
    """分析請求：graph 為 inline 字串，或給 n 與 edges"""
    graph: Optional[str] = Field(default=None, description='inline literal "N;u-v,u-v,..."')
    n: Optional[int] = Field(default=None, ge=1)
    edges: Optional[List[List[int]]] = None
    qmax: int = Field(default=DEFAULT_QMAX, ge=2)
    jmax: int = Field(default=DEFAULT_JMAX, ge=3)

    @model_validator(mode='after')
    def check_graph_source(self):
        if self.graph is None and (self.n is None or self.edges is None):
            raise ValueError("either graph or both n and edges are required")
        return self

    class Config:
        json_schema_extra = {
            "example": {
                "graph": "5;1-3,1-4,1-5,2-3,2-4,2-5",
                "qmax": 6,
                "jmax": 8
            }
        }


class VerifyRequest(BaseModel):
    max_n: int = Field(default=DEFAULT_MAX_N, ge=1)
    k: Optional[int] = None
    l: Optional[int] = None
    qmax: int = Field(default=DEFAULT_QMAX, ge=2)
    jmax: int = Field(default=DEFAULT_JMAX, ge=3)
    slow: bool = False
    include_q5: bool = False


class RunResponse(BaseModel):
    """已儲存的驗證紀錄"""
    id: int
    lemma_id: str
    params: Dict[str, Any]
    instances_checked: int
    counterexample_count: int
    asserted: bool
    wall_time: float
    created_at: datetime

    class Config:
        from_attributes = True
