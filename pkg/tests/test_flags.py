import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arrangement_cw.catalog import generic_triangle, scalene_pencil, scalene_triangle
from arrangement_cw.flags import (
    NonGenericFlagError, OrientedFlag, build_flag, is_generic, partition, section_point, sign_of,
)
from arrangement_cw.generators import random_arrangement
from arrangement_cw.geometry import ArrangementError
from arrangement_cw.lattice import beta, poincare_polynomial


def test_generic_triangle_partition():
    arr, flag = generic_triangle()
    part = partition(arr, flag)
    assert part.sizes() == [1, 3, 3]
    assert part.levels[0] == [arr.sign_vector((90, 15))]


def test_scalene_partition_order_and_signs():
    arr, flag = scalene_triangle()
    part = partition(arr, flag)
    assert part.levels[1] == [(-1, -1, -1), (1, 1, -1), (1, 1, 1)]
    assert [sign_of(arr, flag, C) for C in part.levels[1]] == [-1, 1, 1]
    assert all(sign_of(arr, flag, C) == 1 for C in part.levels[2])
    assert sign_of(arr, flag, part.levels[0][0]) == 1


def test_coordinates_round_trip():
    flag = OrientedFlag((1, 2), ((2, 1), (1, 1)))
    x = (Fraction(3, 7), Fraction(-5, 2))
    assert flag.from_flag_coords(flag.to_flag_coords(x)) == x


def test_dependent_basis_rejected():
    with pytest.raises(ArrangementError):
        OrientedFlag((0, 0), ((1, 2), (2, 4)))


def test_non_generic_flag_detected():
    arr, _ = scalene_triangle()
    # a line through the vertex of H1 and H3 makes F^1 meet a point flat
    bad = OrientedFlag((Fraction(23170, 107), Fraction(9520, 107)), ((1, 0), (0, 1)))
    assert not is_generic(arr, bad)
    with pytest.raises(NonGenericFlagError):
        partition(arr, bad)
    parallel = OrientedFlag((0, 0), ((28, 17), (0, 1)))
    assert not is_generic(arr, parallel)


def test_build_flag_is_deterministic_and_seeded():
    arr = scalene_pencil()
    assert build_flag(arr, seed=3) == build_flag(arr, seed=3)
    assert build_flag(arr, seed=3) != build_flag(arr, seed=4)


def test_level_hyperplane_contains_the_flag():
    flag = OrientedFlag((1, 2, 3), ((1, 0, 1), (0, 1, 1), (1, 1, 0)))
    h = flag.level_hyperplane(2)
    for t in [(0, 0), (1, 0), (0, 1), (5, -2)]:
        assert h(flag.from_flag_coords(t)) == 0
    assert h(flag.from_flag_coords((0, 0, 1))) != 0
    with pytest.raises(ValueError):
        flag.level_hyperplane(1)


def test_sign_of_requires_the_right_level():
    arr, flag = scalene_triangle()
    part = partition(arr, flag)
    C = part.levels[2][0]
    with pytest.raises(ValueError):
        sign_of(arr, flag, C, 1)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 5), st.integers(0, 50))
def test_level_sizes_are_betti_numbers(seed, dim, n, flag_seed):
    arr = random_arrangement(seed, dim, n)
    flag = build_flag(arr, seed=flag_seed)
    part = partition(arr, flag)
    pi = poincare_polynomial(arr)
    assert part.sizes() == [pi[k] for k in range(dim + 1)]
    assert part.sizes()[dim] == beta(arr.with_hyperplane(flag.level_hyperplane(dim - 1)))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 3), st.integers(1, 5))
def test_first_meeting_level(seed, dim, n):
    arr = random_arrangement(seed, dim, n)
    flag = build_flag(arr)
    part = partition(arr, flag)
    for k, chambers in part.levels.items():
        for C in chambers:
            assert section_point(arr, flag, C, k) is not None
            if k:
                assert section_point(arr, flag, C, k - 1) is None
