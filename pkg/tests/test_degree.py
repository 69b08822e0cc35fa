import random
from fractions import Fraction

import pytest

from arrangement_cw.catalog import coordinate_planes, generic_triangle, scalene_triangle
from arrangement_cw.chain import build_complex
from arrangement_cw.degree import (
    BOX, LEVEL_ONE_DEGREE, DegreeError, UnsupportedDimensionError, clip_radius, clipped_face,
    degree, degree2, degree3_exact, degree3_winding, degree_table, directing_vector,
    level_geometry, vertex_bound, winding_number,
)
from arrangement_cw.flags import build_flag, partition
from arrangement_cw.generators import random_arrangement

from helpers import essential_random


def test_scalene_degree_table():
    arr, flag = scalene_triangle()
    part = partition(arr, flag)
    table = degree_table(arr, flag, part, 2)
    expected = {
        (-1, -1, 1): (-1, 1, -1),
        (-1, 1, -1): (-1, -1, 0),
        (-1, 1, 1): (-1, 0, -1),
    }
    for C, row in expected.items():
        assert tuple(table[(C, Cp)] for Cp in part.levels[1]) == row


def test_level_one_convention():
    arr, flag = scalene_triangle()
    part = partition(arr, flag)
    (C0,) = part.levels[0]
    assert all(degree(arr, flag, C, C0, 1) == LEVEL_ONE_DEGREE for C in part.levels[1])


def test_clip_radius_encloses_vertices():
    arr, flag = scalene_triangle()
    R = clip_radius(arr, flag)
    assert R == 2 * (vertex_bound(arr, flag, 2) + 1)
    sect = flag.section(arr, 1)
    for h in sect:
        assert abs(-h.offset / h.normal[0]) < R


def test_clipped_interval_and_incidences():
    arr, flag = scalene_triangle()
    geom = level_geometry(arr, flag, 2)
    R = geom.clip_radius
    part = partition(arr, flag)
    first, middle = part.levels[1][0], part.levels[1][1]
    face = clipped_face(geom.sect, first, R)
    assert face.vertices[0] == (-R,) and BOX in face.incidences[0]
    inner = clipped_face(geom.sect, middle, R)
    assert all(BOX not in inc and len(inc) == 1 for inc in inner.incidences)


def test_clipped_polygon_is_counterclockwise():
    arr = coordinate_planes(3)
    flag = build_flag(arr, seed=2)
    geom = level_geometry(arr, flag, 3)
    part = partition(arr, flag)
    for Cp in part.levels[2]:
        face = clipped_face(geom.sect, Cp, geom.clip_radius)
        v = face.vertices
        area2 = sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1]
                    for i in range(len(v)))
        assert area2 > 0


def test_winding_number():
    square = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
    assert winding_number(square) == 1
    assert winding_number(square[::-1]) == -1
    assert winding_number([(p[0] + 5, p[1]) for p in square]) == 0
    with pytest.raises(DegreeError):
        winding_number([(0, 0), (1, 0), (0, 1)])


def test_bad_point_and_radius_rejected():
    arr, flag = scalene_triangle()
    part = partition(arr, flag)
    C, Cp = part.levels[2][0], part.levels[1][0]
    other = part.points[part.levels[2][1]]
    with pytest.raises(ValueError, match="not in chamber"):
        degree2(arr, flag, C, Cp, p=other)
    with pytest.raises(ValueError, match="not admissible"):
        degree2(arr, flag, C, Cp, radius=1)


def test_directing_vector_checks_sides():
    arr, flag = scalene_triangle()
    geom = level_geometry(arr, flag, 2)
    part = partition(arr, flag)
    C = part.levels[2][0]
    p = part.points[C]
    h = geom.sect[1]
    x = (-h.offset / h.normal[0],)
    U = directing_vector(geom.sect, p, x)
    assert (h.normal[0] * U[0] > 0) == (h(p) > 0)
    # on the clipping box the vector must point inward
    p = (Fraction(5), Fraction(1))
    assert directing_vector(geom.sect, p, (Fraction(-3),), {BOX}, radius=3) == (8,)
    with pytest.raises(DegreeError, match="inward"):
        directing_vector(geom.sect, p, (Fraction(3),), {BOX}, radius=3)


def test_unsupported_dimension():
    arr = coordinate_planes(4)
    flag = build_flag(arr)
    with pytest.raises(UnsupportedDimensionError):
        build_complex(arr, flag)
    part = partition(arr, flag)
    with pytest.raises(UnsupportedDimensionError):
        degree(arr, flag, part.levels[4][0], part.levels[3][0], 4)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_exact_and_numeric_winding_agree(seed):
    rng = random.Random(seed)
    arr = essential_random(rng, 3, 4)
    flag = build_flag(arr, seed=seed)
    part = partition(arr, flag)
    geom = level_geometry(arr, flag, 3)
    for C in part.levels[3]:
        for Cp in part.levels[2]:
            exact = degree3_exact(arr, flag, C, Cp, geom=geom)
            numeric, residue = degree3_winding(arr, flag, C, Cp, return_residue=True, geom=geom)
            assert numeric == exact and residue < 1e-6


def test_degrees_are_small_integers():
    arr = random_arrangement(11, 2, 6)
    flag = build_flag(arr)
    part = partition(arr, flag)
    assert set(degree_table(arr, flag, part, 2).values()) <= {-1, 0, 1}
