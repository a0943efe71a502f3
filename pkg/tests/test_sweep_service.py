"""Corpus sweeps and subgraph monotonicity sampling."""
import pytest

from models.errors import ResourceGuardError
from models.graph import SimpleGraph
from models.schemas import CorpusView
from services.sweep_service import SweepService, monotonicity_sample, polytope_record, sample_subgraph_pairs
from utils.gadgets import cycle_graph


@pytest.fixture
def sweep():
    return SweepService(workers=1)


def _edges(graph):
    return graph.num_edges


def test_map_keeps_order(sweep, corpus5):
    assert sweep.map(_edges, corpus5) == [g.num_edges for g in corpus5]


def test_polytope_view(sweep):
    summary = sweep.corpus_summary(4, CorpusView.POLYTOPE)
    assert summary.total == 10
    assert summary.counts_by_n == {1: 1, 2: 1, 3: 2, 4: 6}
    assert summary.four_cycle_count == 3
    assert summary.hypersurface_count is None
    assert sum(summary.degree_histogram.values()) == 9
    assert [r.index for r in summary.records] == list(range(1, 11))
    assert summary.records[0].degree is None


def test_ideal_view(sweep):
    summary = sweep.corpus_summary(4, CorpusView.IDEAL, q_max=4)
    # C4 與 C4 加一條弦
    assert summary.hypersurface_count == 2
    assert summary.degree_histogram == {}
    square = next(r for r in summary.records if r.n == 4 and r.m == 4 and r.has_4_cycle)
    assert square.mu == {2: 1, 3: 0, 4: 0}
    assert square.codim == 1


def test_polytope_record():
    assert polytope_record(cycle_graph(4)) == (2, [1, 1, 0], 1)


@pytest.mark.parametrize("max_n", [0, 8])
def test_guard(sweep, max_n):
    with pytest.raises(ResourceGuardError) as info:
        sweep.corpus_summary(max_n)
    assert info.value.limit == 7


def test_sampling_is_seeded(corpus5):
    first = sample_subgraph_pairs(corpus5, 20, seed=3)
    again = sample_subgraph_pairs(corpus5, 20, seed=3)
    assert [(g.to_literal(), s.to_literal()) for g, s in first] == [(g.to_literal(), s.to_literal()) for g, s in again]
    for host, sub in first:
        assert sub.is_connected()
        assert sub.num_edges < host.num_edges


def test_sampling_without_hosts():
    assert sample_subgraph_pairs([SimpleGraph(2, ((1, 2),))], 5, seed=0) == []


def test_monotonicity(sweep):
    report = monotonicity_sample(5, pairs=25, seed=1, sweep=sweep)
    assert report.pairs_checked == 25
    assert report.violations == []


def test_monotonicity_guard():
    with pytest.raises(ResourceGuardError):
        monotonicity_sample(9)
