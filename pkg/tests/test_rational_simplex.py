"""Exact LP feasibility and max-min coordinate."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from models.errors import DimensionMismatchError
from utils.rational_simplex import RationalMatrix, lp_feasible, lp_max_min_coordinate

# C3 的 ρ 矩陣（邊 {1,2}, {2,3}, {1,3}）加上總和列
TRIANGLE = [[1, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]]


def test_triangle_point_is_feasible():
    outcome = lp_feasible(TRIANGLE, [1, 1, 2, 2])
    assert outcome.is_feasible
    assert RationalMatrix.from_rows(TRIANGLE).apply(outcome.witness) == (1, 1, 2, 2)
    assert all(v >= 0 for v in outcome.witness)


def test_triangle_point_outside():
    outcome = lp_feasible(TRIANGLE, [3, 1, 0, 2])
    assert outcome.status == 'infeasible'
    assert not outcome.is_feasible


def test_max_min_strictly_interior():
    outcome = lp_max_min_coordinate(TRIANGLE, [2, 2, 2, 3])
    assert outcome.status == 'optimal'
    assert outcome.objective == 1
    assert outcome.witness == (1, 1, 1)


def test_max_min_on_boundary():
    outcome = lp_max_min_coordinate(TRIANGLE, [1, 1, 2, 2])
    assert outcome.status == 'optimal'
    assert outcome.objective == 0


def test_max_min_infeasible():
    # λ₂ 必須為負
    outcome = lp_max_min_coordinate(TRIANGLE, [3, 1, 0, 2])
    assert outcome.status == 'infeasible'
    assert not outcome.is_feasible
    assert outcome.witness == ()
    assert outcome.objective == lp_feasible(TRIANGLE, [3, 1, 0, 2]).objective
    assert outcome.objective > 0


def test_max_min_inconsistent_system():
    assert lp_max_min_coordinate([[1, 1], [2, 2]], [1, 3]).status == 'infeasible'


def test_fractional_witness():
    outcome = lp_feasible([[2, 0], [0, 3]], [1, 1])
    assert outcome.witness == (Fraction(1, 2), Fraction(1, 3))


def test_redundant_rows():
    outcome = lp_feasible([[1, 1], [2, 2], [1, 1]], [1, 2, 1])
    assert outcome.is_feasible
    assert sum(outcome.witness) == 1


def test_inconsistent_redundant_rows():
    assert lp_feasible([[1, 1], [2, 2]], [1, 3]).status == 'infeasible'


def test_negative_rhs():
    outcome = lp_feasible([[-1, 0], [0, 1]], [-2, 1])
    assert outcome.witness == (2, 1)


def test_zero_rhs():
    outcome = lp_feasible([[1, 1]], [0])
    assert outcome.is_feasible
    assert outcome.witness == (0, 0)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        lp_feasible([[1, 1]], [1, 2])
    with pytest.raises(DimensionMismatchError):
        RationalMatrix.from_rows([[1, 2], [3]])


small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def feasible_systems(draw):
    """由非負 x 產生 b = Ax，必定可行"""
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = draw(st.integers(min_value=1, max_value=5))
    A = [[draw(small_ints) for _ in range(cols)] for _ in range(rows)]
    x = [draw(st.integers(min_value=0, max_value=4)) for _ in range(cols)]
    b = [sum(a * v for a, v in zip(row, x)) for row in A]
    return A, b


@given(feasible_systems())
@settings(max_examples=80, deadline=None)
def test_witness_satisfies_constraints_exactly(system):
    A, b = system
    outcome = lp_feasible(A, b)
    assert outcome.is_feasible
    assert list(RationalMatrix.from_rows(A).apply(outcome.witness)) == b
    assert all(v >= 0 for v in outcome.witness)


@given(feasible_systems())
@settings(max_examples=60, deadline=None)
def test_max_min_witness_attains_objective(system):
    A, b = system
    outcome = lp_max_min_coordinate(A, b)
    if outcome.status == 'optimal':
        assert min(outcome.witness) == outcome.objective
        assert list(RationalMatrix.from_rows(A).apply(outcome.witness)) == b
        assert outcome.objective >= 0
    else:
        # 有界的可行系統只可能 optimal；unbounded 代表存在正方向
        assert outcome.status == 'unbounded'


@st.composite
def arbitrary_systems(draw):
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = draw(st.integers(min_value=1, max_value=5))
    A = [[draw(small_ints) for _ in range(cols)] for _ in range(rows)]
    b = [draw(st.integers(min_value=-6, max_value=6)) for _ in range(rows)]
    return A, b


@given(arbitrary_systems())
@settings(max_examples=80, deadline=None)
def test_max_min_agrees_with_feasibility(system):
    A, b = system
    outcome = lp_max_min_coordinate(A, b)
    assert (outcome.status == 'infeasible') == (lp_feasible(A, b).status == 'infeasible')
    if outcome.status == 'optimal':
        assert outcome.objective >= 0
