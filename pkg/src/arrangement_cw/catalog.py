"""Small named arrangements with hand-checked invariants.

Each function returns ``(arrangement, flag)``; the flag is generic and its
chamber partition is documented next to the coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from .flags import OrientedFlag
from .geometry import Arrangement

Pair = Tuple[Arrangement, OrientedFlag]


def generic_triangle() -> Pair:
    """Three lines in general position bounding one triangle.

    ``x = y``, ``x + y = 200``, ``x = 50``; the triangle is ``(-, -, +)``.
    The flag's base point ``(100, 75)`` lies in ``(+, -, +)``, which is
    therefore ch0; the partition sizes are 1, 3, 3.
    """
    arr = Arrangement.from_rows(2, [[1, -1, 0], [1, 1, -200], [1, 0, -50]])
    return arr, OrientedFlag((100, 75), ((4, 1), (0, 1)))


def scalene_triangle() -> Pair:
    """Three generic lines with the axis-aligned flag at ``(140, 20)``.

    ch0 = ``(+,-,-)``; ch1 = ``(-,-,-), (+,+,-), (+,+,+)`` in order along
    ``+x``; ch2 = ``(-,+,+), (-,+,-), (-,-,+)``.
    """
    arr = Arrangement.from_rows(2, [[17, -28, -1190], [4, 1, -800], [2, 3, -700]])
    return arr, OrientedFlag((140, 20), ((1, 0), (0, 1)))


def scalene_pencil() -> Arrangement:
    """:func:`scalene_triangle` with the second line moved through the other two's meet.

    The three lines become concurrent at ``(23170/107, 9520/107)``.
    """
    return Arrangement.from_rows(
        2, [[17, -28, -1190], [4, 1, Fraction(-102200, 107)], [2, 3, -700]])


def two_lines() -> Arrangement:
    """``y = x + 1/2`` and ``y = -x + 1/2``."""
    return Arrangement.from_rows(2, [[-1, 1, Fraction(-1, 2)], [1, 1, Fraction(-1, 2)]])


def coordinate_planes(dim: int = 3) -> Arrangement:
    """The Boolean arrangement ``x_i = 0``."""
    return Arrangement.from_rows(dim, [[int(i == j) for j in range(dim)] + [0]
                                       for i in range(dim)])
