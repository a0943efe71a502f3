"""Exact and modular rank, exact nullspace."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
import hypothesis.strategies as st

from services.polytope_service import rho
from utils.gadgets import bowtie
from utils.matrix_rank import MODULAR_PRIMES, is_prime, nullspace, rank, rank_exact, rank_mod_p


def test_primes():
    assert all(is_prime(p) for p in MODULAR_PRIMES)
    assert not is_prime(1)
    assert is_prime(2)
    assert not is_prime(91)


def test_identity_and_zero():
    identity = [[int(i == j) for j in range(5)] for i in range(5)]
    assert rank(identity) == 5
    assert rank_exact(identity) == 5
    assert rank([[0, 0, 0], [0, 0, 0]]) == 0


def test_fractions():
    assert rank_exact([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_bowtie_incidence_with_ones_row():
    g = bowtie()
    points = [rho(g.n, e) for e in g.edges]
    rows = [[p[i] for p in points] for i in range(g.n)] + [[1] * g.num_edges]
    assert rank(rows) == 5
    assert rank(rows, mode='exact') == 5


def test_modular_rank_detects_small_prime_collapse():
    # det = 7，模 7 時秩掉到 1
    M = [[1, 2], [3, 13]]
    assert rank_mod_p(M, 7) == 1
    assert rank(M) == 2


matrices = st.integers(min_value=1, max_value=6).flatmap(
    lambda rows: st.integers(min_value=1, max_value=7).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-1, max_value=1), min_size=cols, max_size=cols),
            min_size=rows, max_size=rows
        )
    )
)


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_modular_agrees_with_exact(M):
    assert rank(M) == rank_exact(M)
    assert rank_exact(M) == np.linalg.matrix_rank(np.array(M, dtype=float))


large_matrices = st.integers(min_value=1, max_value=30).flatmap(
    lambda rows: st.integers(min_value=1, max_value=30).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-1, max_value=1), min_size=cols, max_size=cols),
            min_size=rows, max_size=rows
        )
    )
)


@pytest.mark.slow
@given(large_matrices)
@settings(max_examples=1000, deadline=None,
          suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
def test_modular_agrees_with_exact_up_to_30(M):
    assert rank(M, mode='modular') == rank_exact(M)


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_nullspace_dimension_and_kernel(M):
    ncols = len(M[0])
    basis = nullspace(M, ncols)
    assert len(basis) == ncols - rank_exact(M)
    for v in basis:
        for row in M:
            assert sum(a * x for a, x in zip(row, v)) == 0


def test_nullspace_of_empty_matrix():
    basis = nullspace([], 3)
    assert len(basis) == 3
