from itertools import product

from hypothesis import given, settings, strategies as st

from arrangement_cw.catalog import coordinate_planes, generic_triangle, scalene_pencil
from arrangement_cw.faces import (
    adjacent, bounded_chambers, compose, distance, enumerate_chambers, enumerate_faces,
    face_leq, is_bounded, separating_set,
)
from arrangement_cw.generators import random_arrangement
from arrangement_cw.geometry import Arrangement, feasible
from arrangement_cw.lattice import poincare_polynomial


def test_generic_triangle_faces():
    arr, _ = generic_triangle()
    poset = enumerate_faces(arr)
    assert poset.counts() == [3, 9, 7]
    assert len(poset.chambers) == 7
    assert bounded_chambers(arr) == [(-1, -1, 1)]


def test_face_points_realize_sign_vectors():
    arr, _ = generic_triangle()
    for face in enumerate_faces(arr).faces:
        assert arr.sign_vector(face.point) == face.signs
        # lines in general position: codimension equals the number of zeros
        assert face.codim == len(face.zeros)


def test_brute_force_face_enumeration():
    arr = scalene_pencil()
    expected = {sv for sv in product((-1, 0, 1), repeat=3) if feasible(arr, sv)}
    assert {f.signs for f in enumerate_faces(arr).faces} == expected


def test_order_and_composition():
    assert face_leq((0, 1), (1, 1))
    assert not face_leq((1, 1), (0, 1))
    assert compose((0, 1, 0), (1, -1, -1)) == (1, 1, -1)


def test_closure_relation_on_poset():
    arr, _ = generic_triangle()
    poset = enumerate_faces(arr)
    vertex = poset.of_codim(2)[0]
    above = poset.chambers_above(vertex.signs)
    assert len(above) == 4
    assert all(poset.leq(vertex.signs, C) for C in above)


def test_separation_and_adjacency():
    arr, _ = generic_triangle()
    chambers = list(enumerate_chambers(arr))
    for C in chambers:
        for D in chambers:
            sep = separating_set(C, D)
            assert distance(C, D) == len(sep)
            wall = adjacent(arr, C, D)
            if len(sep) == 1 and wall is not None:
                (i,) = sep
                assert wall[i - 1] == 0
            if len(sep) != 1:
                assert wall is None


def test_boundedness():
    assert bounded_chambers(coordinate_planes(2)) == []
    box = Arrangement.from_rows(2, [[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1]])
    assert bounded_chambers(box) == [(1, -1, 1, -1)]
    # a non-essential arrangement has only unbounded chambers
    strips = Arrangement.from_rows(2, [[1, 0, 0], [1, 0, -1]])
    assert not any(is_bounded(strips, C) for C in enumerate_chambers(strips))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 5))
def test_bounded_count_is_beta(seed, dim, n):
    arr = random_arrangement(seed, dim, n)
    assert len(bounded_chambers(arr)) == poincare_polynomial(arr).beta


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 5))
def test_compact_support_euler_characteristic(seed, dim, n):
    """Open faces decompose R^dim, whose compactly supported Euler characteristic is (-1)^dim."""
    counts = enumerate_faces(random_arrangement(seed, dim, n)).counts()
    assert sum((-1) ** d * c for d, c in enumerate(counts)) == (-1) ** dim
