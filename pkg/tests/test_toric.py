"""Toric ideals: fibers, minimal generators, truncated Betti numbers, summaries."""
import pytest

from models.algebra import Binomial, Monomial
from models.errors import DimensionMismatchError, NotApplicableError
from models.schemas import BettiTable
from services.graph_service import has_four_cycle
from services.toric_service import (
    ToricService, diophantine_check, graded_ideal_dim, ideal_summary, linearity_verdict,
    minimal_generators, pi_image, truncated_betti
)
from utils.gadgets import bowtie, complete_bipartite, complete_graph, cycle_graph


class TestFibers:
    def test_pi_image(self, k23):
        image, degree = pi_image(k23, Monomial.from_indices(6, [0, 4]))
        assert image == (1, 1, 1, 1, 0)
        assert degree == 2

    def test_pi_image_dimension(self, k23):
        with pytest.raises(DimensionMismatchError):
            pi_image(k23, Monomial.one(3))

    @pytest.mark.parametrize("graph, q, expected", [
        (cycle_graph(4), 2, 1),
        (bowtie(), 2, 0),
        (cycle_graph(3), 3, 0),
        (complete_bipartite(2, 3), 2, 3),
    ])
    def test_graded_ideal_dim(self, graph, q, expected):
        assert graded_ideal_dim(graph, q) == expected

    def test_fibers_sorted_descending(self, square):
        members = ToricService(square).fibers(2)[(1, 1, 1, 1)]
        assert members == [(1, 0, 1, 0), (0, 1, 0, 1)]

    def test_graded_dim_needs_positive_degree(self, square):
        with pytest.raises(NotApplicableError):
            ToricService(square).graded_ideal_dim(0)


class TestGenerators:
    def test_k23_quadrics(self, k23):
        gens = minimal_generators(k23, 3)
        assert gens[2][0] == 3
        assert gens[3][0] == 0
        assert {str(b) for b in gens[2][1]} == {"x1*x5 - x2*x4", "x1*x6 - x3*x4", "x2*x6 - x3*x5"}

    def test_bowtie_single_cubic(self, g6):
        gens = minimal_generators(g6, 4)
        assert [gens[q][0] for q in (2, 3, 4)] == [0, 1, 0]
        assert str(gens[3][1][0]) == "x1*x2*x6 - x3*x4*x5"

    def test_hexagon_single_cubic(self, hexagon):
        gens = minimal_generators(hexagon, 4)
        assert [gens[q][0] for q in (2, 3, 4)] == [0, 1, 0]
        assert str(gens[3][1][0]) == "x1*x3*x5 - x2*x4*x6"

    def test_q_max_guard(self, square):
        with pytest.raises(NotApplicableError):
            minimal_generators(square, 1)

    def test_binomial_in_ideal(self, k23):
        service = ToricService(k23)
        assert service.binomial_in_ideal(Binomial(Monomial.from_indices(6, [0, 4]), Monomial.from_indices(6, [1, 3])))
        assert not service.binomial_in_ideal(Binomial(Monomial.from_indices(6, [0, 1]), Monomial.from_indices(6, [3, 4])))

    def test_quadrics_iff_four_cycle(self, corpus5):
        for g in corpus5:
            if g.num_edges:
                assert (ToricService(g).mu(2) > 0) == has_four_cycle(g), g.to_literal()

    def test_generators_lie_in_ideal(self, corpus5):
        for g in corpus5:
            if not g.num_edges:
                continue
            service = ToricService(g)
            for q, (_, gens) in service.minimal_generators(4).items():
                for b in gens:
                    assert b.degree == q
                    assert service.binomial_in_ideal(b)


class TestBetti:
    def test_k23_syzygies(self, k23):
        table = truncated_betti(k23, 3, 4)
        assert table.mu == {2: 3, 3: 0}
        assert table.beta2 == {3: 2, 4: 0}
        assert table.truncated

    def test_hypersurface_has_no_syzygies(self, g6):
        table = truncated_betti(g6, 4, 5)
        assert table.mu == {2: 0, 3: 1, 4: 0}
        assert all(v == 0 for v in table.beta2.values())

    def test_complete_graph_k4(self):
        # K4：三個完美配對落在同一個纖維，給出兩個二次生成元
        table = truncated_betti(complete_graph(4), 3, 4)
        assert table.mu[2] == 2
        assert table.mu[3] == 0

    def test_bounds(self, k23):
        with pytest.raises(NotApplicableError):
            truncated_betti(k23, 3, 3)


class TestLinearity:
    def test_k23_is_two_linear(self, k23):
        table = truncated_betti(k23, 3, 4)
        assert linearity_verdict(table, 2)

    def test_bowtie_is_three_linear(self, g6):
        table = truncated_betti(g6, 4, 5)
        assert linearity_verdict(table, 3)
        assert not linearity_verdict(table, 2)

    def test_zero_ideal_is_not_linear(self, triangle):
        table = truncated_betti(triangle, 4, 5)
        assert not linearity_verdict(table, 3)

    def test_table_too_small(self):
        table = BettiTable(mu={2: 1, 3: 0}, beta2={3: 0}, q_max=3, j_max=3)
        with pytest.raises(NotApplicableError):
            linearity_verdict(table, 2)

    def test_higher_generator_breaks_linearity(self):
        table = BettiTable(mu={2: 3, 3: 1}, beta2={3: 2, 4: 0}, q_max=3, j_max=4)
        assert not linearity_verdict(table, 2)


class TestSummary:
    def test_k23(self, k23):
        summary = ideal_summary(k23, 3, 4, polytope_degree=1)
        assert summary.ring_dim == 4
        assert summary.codim == 2
        assert summary.generator_degrees == [2, 2, 2]
        assert not summary.hypersurface
        assert summary.linearity == {2: True}
        check = next(c for c in summary.eisenbud_goto if c.q == 2)
        assert check.expected == 3 and check.observed == 3 and check.matches

    def test_bowtie(self, g6):
        summary = ideal_summary(g6, 4, 5, polytope_degree=2)
        assert summary.codim == 1
        assert summary.hypersurface
        assert summary.hypersurface_regularity == 2
        assert summary.regularity_consistent
        assert summary.linearity[3]

    def test_hexagon_codim(self, hexagon):
        service = ToricService(hexagon)
        assert service.ring_dim() == 5
        assert hexagon.num_edges - service.ring_dim() == 1

    def test_diophantine(self):
        assert diophantine_check()
        assert diophantine_check(bound=10)
