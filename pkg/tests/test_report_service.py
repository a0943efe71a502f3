"""Single-graph analysis report."""
import json

import pytest

from models.errors import DisconnectedGraphError, NotApplicableError
from models.schemas import SubgraphTag
from services.report_service import ReportService
from utils.gadgets import bowtie, complete_bipartite, disjoint_cycles
from utils.table_builder import TableBuilder


@pytest.fixture(scope="module")
def k23_report():
    return ReportService(q_max=3, j_max=4).analyze(complete_bipartite(2, 3))


@pytest.fixture(scope="module")
def bowtie_report():
    return ReportService(q_max=4, j_max=5).analyze(bowtie())


def test_k23_polytope(k23_report):
    assert k23_report.polytope.dim == 3
    assert k23_report.polytope.delta == [1, 2, 0, 0]
    assert k23_report.polytope.degree == 1
    assert k23_report.polytope.codegree == k23_report.polytope.codegree_by_interior == 3


def test_k23_ideal(k23_report):
    assert k23_report.ideal.betti.mu == {2: 3, 3: 0}
    assert k23_report.ideal.betti.beta2[3] == 2
    assert k23_report.ideal.summary.codim == 2
    assert len(k23_report.ideal.generators) == 3
    assert all(g.degree == 2 for g in k23_report.ideal.generators)


def test_k23_flags(k23_report):
    assert k23_report.graph.bipartite
    assert k23_report.flags.has_4_cycle
    assert k23_report.flags.disjoint_odd_cycles is None
    assert k23_report.flags.odd_cycles_pairwise_intersect


def test_bowtie_report(bowtie_report):
    assert bowtie_report.polytope.degree == 2
    assert bowtie_report.ideal.summary.hypersurface
    assert bowtie_report.ideal.summary.linearity[3]
    assert bowtie_report.flags.triangle_count == 2
    assert [s.tag for s in bowtie_report.flags.special_subgraphs] == [SubgraphTag.G6]
    assert bowtie_report.meta.schema_version == "1"
    assert bowtie_report.meta.truncated


def test_json_shape(bowtie_report):
    payload = json.loads(bowtie_report.model_dump_json())
    assert set(payload) == {"graph", "polytope", "ideal", "flags", "meta"}
    assert payload["graph"]["literal"] == "5;1-3,2-3,1-2,3-4,3-5,4-5"


def test_report_is_deterministic(bowtie_report):
    again = ReportService(q_max=4, j_max=5).analyze(bowtie())
    assert again.model_dump_json() == bowtie_report.model_dump_json()


def test_table_rendering(bowtie_report):
    text = TableBuilder.analysis(bowtie_report)
    assert "5;1-3,2-3,1-2,3-4,3-5,4-5" in text


def test_disconnected_input():
    with pytest.raises(DisconnectedGraphError):
        ReportService(q_max=3, j_max=4).analyze(disjoint_cycles(3, 3))


@pytest.mark.parametrize("q_max, j_max", [(1, 4), (4, 4)])
def test_bounds(q_max, j_max):
    with pytest.raises(NotApplicableError):
        ReportService(q_max=q_max, j_max=j_max)
