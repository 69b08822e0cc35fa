"""Seeded random arrangements for experiments and property tests."""

from __future__ import annotations

import random
from typing import Union

from .geometry import Arrangement, Hyperplane, as_point


def random_arrangement(rng: Union[random.Random, int], dim: int, n: int,
                       bound: int = 6) -> Arrangement:
    """``n`` distinct hyperplanes with integer coefficients in ``[-bound, bound]``."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    hs, seen = [], set()
    while len(hs) < n:
        row = as_point(rng.randint(-bound, bound) for _ in range(dim + 1))
        if not any(row[:dim]):
            continue
        h = Hyperplane(row[:dim], row[dim], len(hs) + 1)
        if h.key() in seen:
            continue
        seen.add(h.key())
        hs.append(h)
    return Arrangement(dim, tuple(hs))
