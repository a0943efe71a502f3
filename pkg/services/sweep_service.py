"""
語料庫掃描：可平行計算，輸出依語料庫順序
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar
import logging

import numpy as np

from config import CORPUS_MAX_N, DEFAULT_QMAX, get_thread_count
from models.errors import ResourceGuardError
from models.graph import SimpleGraph
from models.schemas import CorpusRecord, CorpusSummary, CorpusView, MonotonicityPair, MonotonicityReport
from services.corpus_service import enumerate_connected_graphs
from services.graph_service import has_four_cycle, bipartition
from services.polytope_service import degree_by_interior, delta_polynomial, edge_polytope
from services.toric_service import ToricService

logger = logging.getLogger(__name__)

T = TypeVar('T')


class SweepService:
    """在語料庫上套用純函式（worker 數上限為 EDGERING_THREADS）"""

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers if workers is not None else get_thread_count()

    def map(self, fn: Callable[[SimpleGraph], T], graphs: Sequence[SimpleGraph]) -> List[T]:
        """
        依輸入順序回傳 fn(graph)

        fn 必須是模組層級函式（ProcessPoolExecutor 需要 pickle）。
        """
        graphs = list(graphs)
        if self.workers <= 1 or len(graphs) <= 1:
            return [fn(g) for g in graphs]
        with ProcessPoolExecutor(max_workers=min(self.workers, len(graphs))) as executor:
            return list(executor.map(fn, graphs, chunksize=max(1, len(graphs) // (4 * self.workers))))

    def corpus_summary(self, max_n: int, which: CorpusView = CorpusView.ALL,
                       q_max: int = DEFAULT_QMAX) -> CorpusSummary:
        """
        逐圖一列的摘要與總計（4-循環數、hypersurface 數、次數分佈）

        Raises:
            ResourceGuardError: max_n 超過 CORPUS_MAX_N
        """
        if not 1 <= max_n <= CORPUS_MAX_N:
            raise ResourceGuardError(f"corpus sweeps allow 1 <= max_n <= {CORPUS_MAX_N}, got {max_n}",
                                     limit=CORPUS_MAX_N)
        corpus = enumerate_connected_graphs(max_n)
        graphs = list(corpus)

        polytope_rows = self.map(polytope_record, graphs) if which != CorpusView.IDEAL else [None] * len(graphs)
        if which != CorpusView.POLYTOPE:
            ideal_rows = self.map(_IdealRecord(q_max), graphs)
        else:
            ideal_rows = [None] * len(graphs)

        records = []
        for index, (g, poly, ideal) in enumerate(zip(graphs, polytope_rows, ideal_rows), start=1):
            record = CorpusRecord(
                index=index,
                n=g.n,
                m=g.num_edges,
                graph=g.to_literal(),
                bipartite=bipartition(g) is not None,
                has_4_cycle=has_four_cycle(g)
            )
            if poly:
                record.dim, record.delta, record.degree = poly
            if ideal:
                record.mu, record.codim, record.hypersurface = ideal
            records.append(record)

        histogram: dict = {}
        for r in records:
            if r.degree is not None:
                histogram[r.degree] = histogram.get(r.degree, 0) + 1
        hypersurfaces = None
        if which != CorpusView.POLYTOPE:
            hypersurfaces = sum(1 for r in records if r.hypersurface)

        logger.info(f"Corpus sweep max_n={max_n} ({which.value}): {len(records)} graphs")
        return CorpusSummary(
            max_n=max_n,
            which=which,
            total=len(records),
            counts_by_n=corpus.counts_by_n(),
            four_cycle_count=sum(1 for r in records if r.has_4_cycle),
            hypersurface_count=hypersurfaces,
            degree_histogram=dict(sorted(histogram.items())),
            records=records
        )


def polytope_record(graph: SimpleGraph):
    """(dim, δ, degree)；沒有邊的圖回傳 None"""
    if graph.num_edges == 0:
        return None
    delta = delta_polynomial(edge_polytope(graph))
    return delta.dim, list(delta.coefficients), delta.degree


class _IdealRecord:
    """(μ map, codim, hypersurface)；可被 pickle 的 callable"""

    def __init__(self, q_max: int):
        self.q_max = q_max

    def __call__(self, graph: SimpleGraph):
        if graph.num_edges == 0:
            return None
        toric = ToricService(graph)
        mu = {q: toric.mu(q) for q in range(2, self.q_max + 1)}
        codim = graph.num_edges - toric.ring_dim()
        return mu, codim, sum(mu.values()) == 1


def sample_subgraph_pairs(graphs: Sequence[SimpleGraph], pairs: int, seed: int) -> List[Tuple[SimpleGraph, SimpleGraph]]:
    """
    隨機抽取 (G, G′)：G′ 是 G 的連通真子圖（去掉孤立點後重新編號）

    同一個 seed 得到相同的抽樣。
    """
    rng = np.random.default_rng(seed)
    hosts = [g for g in graphs if g.num_edges >= 2]
    if not hosts:
        return []
    sampled = []
    attempts = 0
    while len(sampled) < pairs and attempts < 50 * pairs:
        attempts += 1
        host = hosts[int(rng.integers(len(hosts)))]
        size = int(rng.integers(1, host.num_edges))
        chosen = sorted(int(i) for i in rng.choice(host.num_edges, size=size, replace=False))
        sub, _ = host.edge_subgraph(chosen).compact()
        if sub.is_connected():
            sampled.append((host, sub))
    if len(sampled) < pairs:
        logger.warning(f"Only {len(sampled)} of {pairs} connected subgraph pairs sampled")
    return sampled


def _degree(graph: SimpleGraph) -> int:
    return degree_by_interior(edge_polytope(graph))


def monotonicity_sample(max_n: int, pairs: int = 200, seed: int = 0,
                        sweep: Optional[SweepService] = None) -> MonotonicityReport:
    """
    deg(P_{G′}) ≤ deg(P_G) 在隨機子圖對上的檢查

    Raises:
        ResourceGuardError: max_n 超過 CORPUS_MAX_N
    """
    if not 1 <= max_n <= CORPUS_MAX_N:
        raise ResourceGuardError(f"monotonicity sampling allows 1 <= max_n <= {CORPUS_MAX_N}, got {max_n}",
                                 limit=CORPUS_MAX_N)
    sweep = sweep or SweepService()
    sampled = sample_subgraph_pairs(list(enumerate_connected_graphs(max_n)), pairs, seed)
    hosts = sweep.map(_degree, [g for g, _ in sampled])
    subs = sweep.map(_degree, [s for _, s in sampled])
    violations = [
        MonotonicityPair(graph=g.to_literal(), subgraph=s.to_literal(), graph_degree=dg, subgraph_degree=ds)
        for (g, s), dg, ds in zip(sampled, hosts, subs)
        if ds > dg
    ]
    logger.info(f"Monotonicity: {len(sampled)} pairs, {len(violations)} violations (seed={seed})")
    return MonotonicityReport(max_n=max_n, seed=seed, pairs_checked=len(sampled), violations=violations)
