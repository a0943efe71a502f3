"""Properties checked over every connected graph with at most six vertices."""
import pytest

from models.schemas import LemmaId
from services.graph_service import has_four_cycle
from services.polytope_service import delta_polynomial, edge_polytope, full_dimensionalize
from services.sweep_service import SweepService, monotonicity_sample
from services.toric_service import ToricService
from services.verification_service import VerificationService
from services.walk_service import classify_degree3_walks, verify_walk_generation

pytestmark = pytest.mark.slow


def _with_edges(corpus):
    return [g for g in corpus if g.num_edges]


def test_corpus_size(corpus6):
    assert len(_with_edges(corpus6)) == 142


def test_walks_generate_the_ideal(corpus6):
    for g in _with_edges(corpus6):
        assert verify_walk_generation(g, 4), g.to_literal()


def test_cubic_walks_are_hexagons_or_bowties(corpus6):
    for g in _with_edges(corpus6):
        tags = {tag for _, tag in classify_degree3_walks(g)}
        assert tags <= {"C6", "G6"}, g.to_literal()


def test_quadrics_iff_four_cycle(corpus6):
    for g in _with_edges(corpus6):
        assert (ToricService(g).mu(2) > 0) == has_four_cycle(g), g.to_literal()


def test_projection_keeps_delta(corpus6):
    for g in _with_edges(corpus6):
        P = edge_polytope(g)
        Q = full_dimensionalize(P, g)
        assert delta_polynomial(Q).coefficients == delta_polynomial(P).coefficients, g.to_literal()


def test_hypersurface_generator_bounds_degree(corpus6):
    hypersurfaces = 0
    for g in _with_edges(corpus6):
        counts = {q: count for q, (count, _) in ToricService(g).minimal_generators(6).items()}
        if sum(counts.values()) != 1:
            continue
        hypersurfaces += 1
        q = next(q for q, count in counts.items() if count)
        assert q - 1 >= delta_polynomial(edge_polytope(g)).degree, g.to_literal()
    assert hypersurfaces > 0


def test_subgraph_degree_monotonicity():
    report = monotonicity_sample(6, pairs=200, seed=0, sweep=SweepService(workers=1))
    assert report.pairs_checked == 200
    assert report.violations == []


def test_theorem_on_six_vertices():
    result = VerificationService(max_n=6, sweep=SweepService(workers=1)).run(LemmaId.THM)
    assert result.passed
    assert result.counterexamples == []
    assert result.instances_checked == 143
    assert result.details['diophantine_ok']
