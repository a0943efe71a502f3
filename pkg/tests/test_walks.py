"""Even closed walks and their binomials."""
import pytest

from models.algebra import Binomial, EvenClosedWalk, Monomial
from models.errors import NotApplicableError
from services.toric_service import ToricService
from services.walk_service import (
    classify_degree3_walks, even_closed_walks, verify_walk_generation, walk_binomial, walk_binomials
)
from utils.gadgets import bowtie, complete_bipartite, complete_graph, cycle_graph, friendship


def test_square_walk_binomials(square):
    walks = even_closed_walks(square, 2)
    binomials = {f.normalized() for f in (walk_binomial(w, 4) for w in walks) if f is not None}
    expected = Binomial(Monomial((1, 0, 1, 0)), Monomial((0, 1, 0, 1)))
    assert binomials == {expected}


def test_walks_are_closed_and_even(g6):
    for walk in even_closed_walks(g6, 3):
        assert len(walk.edge_indices) % 2 == 0
        assert walk.trail[0] == walk.trail[-1]
        for k, idx in enumerate(walk.edge_indices):
            assert g6.index_of(walk.trail[k], walk.trail[k + 1]) == idx


def test_walks_up_to_rotation_are_unique(hexagon):
    walks = even_closed_walks(hexagon, 3)
    six = [w for w in walks if w.half_length == 3 and len(set(w.trail)) == 6]
    # 六邊形只有一個長度 6 的簡單閉路徑
    assert len(six) == 1


def test_degenerate_walk_binomial_is_zero(square):
    walk = EvenClosedWalk(edge_indices=(0, 0), trail=(1, 2, 1))
    assert walk_binomial(walk, 4) is None


def test_walk_validation():
    with pytest.raises(ValueError):
        EvenClosedWalk(edge_indices=(0, 1, 2), trail=(1, 2, 3, 1))
    with pytest.raises(ValueError):
        EvenClosedWalk(edge_indices=(0, 1), trail=(1, 2, 3))


def test_half_length_guard(square):
    with pytest.raises(NotApplicableError):
        even_closed_walks(square, 1)


def test_walk_binomials_by_half_length(square):
    table = walk_binomials(square, 3)
    assert table[1] == set()
    assert len(table[2]) == 1


@pytest.mark.parametrize("graph", [
    cycle_graph(4), cycle_graph(6), bowtie(), complete_bipartite(2, 3), complete_graph(4),
])
def test_walks_generate_the_ideal(graph):
    assert verify_walk_generation(graph, 3)


def test_walk_generation_guard(square):
    with pytest.raises(NotApplicableError):
        verify_walk_generation(square, 1)


@pytest.mark.parametrize("graph, tag", [(bowtie(), "G6"), (cycle_graph(6), "C6")])
def test_degree3_generators_are_classified(graph, tag):
    tagged = classify_degree3_walks(graph)
    assert [t for _, t in tagged] == [tag]
    walk, _ = tagged[0]
    assert ToricService(graph).binomial_in_ideal(walk_binomial(walk, graph.num_edges))


def test_quadric_generated_ideal_has_no_cubic_walks(k23):
    assert classify_degree3_walks(k23) == []


def test_friendship_cubics_are_bowties():
    tags = {t for _, t in classify_degree3_walks(friendship(3))}
    assert tags == {"G6"}
