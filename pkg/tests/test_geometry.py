from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arrangement_cw.geometry import (
    EQ, GE, GT, Arrangement, ArrangementError, Constraint, DimensionError, Hyperplane,
    InfeasibleError, as_fraction, feasible, matrix_rank, row_reduce, sample_point,
    side_of, solve_affine, solve_constraints,
)
from arrangement_cw.generators import random_arrangement
from arrangement_cw.faces import enumerate_chambers
from arrangement_cw.lattice import poincare_polynomial
from arrangement_cw.catalog import generic_triangle, two_lines


def test_side_of_basic():
    h = Hyperplane((1, 1), -1)
    assert side_of(h, (0, 0)) == -1
    assert side_of(h, (1, 0)) == 0
    assert side_of(h, (2, 1)) == 1


def test_side_of_example_line():
    first = two_lines()[1]
    assert side_of(first, (0, 1)) == 1


def test_side_of_dimension_mismatch():
    with pytest.raises(DimensionError):
        side_of(Hyperplane((1, 1), 0), (1, 2, 3))


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_zero_normal_rejected():
    with pytest.raises(ArrangementError):
        Hyperplane((0, 0), 1)


def test_duplicates_rejected_projectively():
    with pytest.raises(ArrangementError, match="duplicates"):
        Arrangement.from_rows(2, [[1, 2, 3], [-2, -4, -6]])


def test_ids_renumbered():
    arr = Arrangement(2, (Hyperplane((1, 0), 0, 7), Hyperplane((0, 1), 0, 3)))
    assert [h.id for h in arr] == [1, 2]
    assert arr[2].normal == (0, 1)


def test_row_width_checked():
    with pytest.raises(DimensionError):
        Arrangement.from_rows(2, [[1, 0]])


def test_feasible_half_line():
    arr = Arrangement.from_rows(1, [[1, 0]])
    assert feasible(arr, (1,))
    assert sample_point(arr, (1,)) == (1,)


def test_feasible_contradiction():
    arr = Arrangement.from_rows(1, [[1, 0], [1, -1]])
    assert not feasible(arr, (-1, 1))
    with pytest.raises(InfeasibleError):
        sample_point(arr, (-1, 1))


def test_midpoint_rule():
    arr = Arrangement.from_rows(1, [[1, 0], [1, -1]])
    assert sample_point(arr, (1, -1)) == (Fraction(1, 2),)


def test_generic_triangle_has_seven_chambers():
    arr, _ = generic_triangle()
    signs = [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    assert sum(feasible(arr, s) for s in signs) == 7


def test_equality_constraints():
    # x + y = 1, x > y
    cs = [Constraint((1, 1), -1, EQ), Constraint((1, -1), 0, GT)]
    p = solve_constraints(cs, 2)
    assert p[0] + p[1] == 1 and p[0] > p[1]


def test_non_strict_bounds_can_touch():
    cs = [Constraint((1,), 0, GE), Constraint((-1,), 0, GE)]
    assert solve_constraints(cs, 1) == (0,)
    cs[0] = Constraint((1,), 0, GT)
    assert solve_constraints(cs, 1) is None


def test_constant_constraint():
    assert solve_constraints([Constraint((0, 0), -1, GT)], 2) is None
    assert solve_constraints([Constraint((0, 0), 1, GT)], 2) is not None


def test_linear_algebra():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    red, piv = row_reduce([[0, 2], [1, 1]])
    assert piv == [0, 1]
    x, kernel = solve_affine([[1, 1, 0]], [2], 3)
    assert x[0] + x[1] == 2 and len(kernel) == 2
    assert solve_affine([[1, 0], [1, 0]], [0, 1], 2) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 5))
def test_sample_point_round_trip(seed, dim, n):
    arr = random_arrangement(seed, dim, n)
    for sv, p in enumerate_chambers(arr).items():
        assert arr.sign_vector(sample_point(arr, sv)) == sv
        assert arr.sign_vector(p) == sv


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 5))
def test_relaxing_a_sign_is_monotone(seed, dim, n):
    arr = random_arrangement(seed, dim, n)
    for sv in enumerate_chambers(arr):
        for i in range(n):
            relaxed = sv[:i] + (None,) + sv[i + 1:]
            assert feasible(arr, relaxed)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 5))
def test_chamber_count_matches_poincare(seed, dim, n):
    arr = random_arrangement(seed, dim, n)
    assert len(enumerate_chambers(arr)) == poincare_polynomial(arr)(1)
