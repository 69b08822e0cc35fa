import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arrangement_cw.catalog import coordinate_planes, scalene_pencil, scalene_triangle, two_lines
from arrangement_cw.chain import (
    build_complex, evaluate_matrix, generic_homology_dims, homology_dims, matmul, probe_weights,
    rank_bareiss, resonance_test, symbolic_generic_homology, symbolic_rank, verify_d2,
)
from arrangement_cw.flags import build_flag
from arrangement_cw.geometry import matrix_rank
from arrangement_cw.laurent import LaurentPoly, ZeroWeightError
from arrangement_cw.lattice import poincare_polynomial
from arrangement_cw.local_system import RankOneSystem

from helpers import essential_random

entries = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(entries, min_size=c, max_size=c),
                                                     min_size=1, max_size=5)))
def test_bareiss_rank_matches_row_reduction(rows):
    assert rank_bareiss(rows) == matrix_rank(rows)


def test_probe_weights_are_primes():
    assert probe_weights(5) == (2, 3, 5, 7, 11)


def test_scalene_homology():
    arr, flag = scalene_triangle()
    cx = build_complex(arr, flag)
    assert verify_d2(cx)
    assert homology_dims(cx, (1, 1, 1)) == (1, 3, 3)
    assert homology_dims(cx, (2, 3, 5)) == (0, 0, 1)
    assert homology_dims(cx, (1, -1, 1)) == (1, 3, 3)
    assert symbolic_generic_homology(cx) == (0, 0, 1)
    assert generic_homology_dims(cx) == (0, 0, 1)


def test_weight_validation():
    arr, flag = scalene_triangle()
    cx = build_complex(arr, flag)
    with pytest.raises(ZeroWeightError):
        homology_dims(cx, (0, 1, 1))
    with pytest.raises(ValueError):
        homology_dims(cx, (1, 1))
    with pytest.raises(ValueError):
        build_complex(arr, flag, system=RankOneSystem(2))


def test_column_lookup():
    arr, flag = scalene_triangle()
    cx = build_complex(arr, flag)
    (C0,) = cx.levels[0]
    assert cx.column(C0) == {}
    assert set(cx.column((-1, -1, 1))) == set(cx.levels[1])


def test_two_crossing_lines():
    arr = two_lines()
    cx = build_complex(arr, build_flag(arr))
    assert verify_d2(cx)
    # the complement is C* x C*; homology survives only when both monodromies q_i^2 are 1
    assert homology_dims(cx, (2, 3)) == (0, 0, 0)
    assert homology_dims(cx, (-1, 1)) == (1, 2, 1)
    assert homology_dims(cx, (1, 5)) == (0, 0, 0)


def test_boolean_arrangement_in_three_dimensions():
    arr = coordinate_planes(3)
    cx = build_complex(arr, build_flag(arr, seed=5))
    assert verify_d2(cx)
    assert homology_dims(cx, (1, 1, 1)) == (1, 3, 3, 1)
    assert homology_dims(cx, (-1, 1, -1)) == (1, 3, 3, 1)
    assert generic_homology_dims(cx) == (0, 0, 0, 0)
    assert resonance_test(cx, (-1, -1, 1))
    assert not resonance_test(cx, (2, 1, 1))


@pytest.mark.parametrize("seed", range(4))
def test_random_three_dimensional_complexes(seed):
    rng = random.Random(seed)
    arr = essential_random(rng, 3, 4)
    cx = build_complex(arr, build_flag(arr, seed=seed))
    assert verify_d2(cx)
    pi = poincare_polynomial(arr)
    assert homology_dims(cx, (1,) * 4) == tuple(pi[k] for k in range(4))
    assert symbolic_generic_homology(cx) == (0, 0, 0, pi.beta)


def test_pencil_symbolic_rank_drops_on_the_resonance_surface():
    arr = scalene_pencil()
    cx = build_complex(arr, build_flag(arr))
    assert symbolic_generic_homology(cx) == (0, 0, 0)
    half = Fraction(1, 2)
    assert homology_dims(cx, (2, half, 1)) == (0, 1, 1)


def test_symbolic_rank_guard():
    n = 1
    big = [[LaurentPoly.one(n)] * 9 for _ in range(9)]
    with pytest.raises(ValueError):
        symbolic_rank(big, n)
    assert symbolic_rank([[LaurentPoly.zero(n)]], n) == 0


def test_matmul_and_evaluate():
    q = LaurentPoly.variable(1, 1)
    A = [[q, q.inverse()]]
    B = [[q.inverse()], [q]]
    (row,) = matmul(A, B, 1)
    assert row[0] == 2
    assert evaluate_matrix(A, (2,)) == [[2, Fraction(1, 2)]]
