"""Shared builders for the test-suite."""

import random
from fractions import Fraction

from arrangement_cw.geometry import GE, Constraint, solve_constraints, sign_constraints
from arrangement_cw.generators import random_arrangement


def essential_random(rng, dim, n, bound=6):
    while True:
        arr = random_arrangement(rng, dim, n, bound)
        if arr.is_essential():
            return arr


def random_suite(seed, count, dims=(1, 2, 3), max_n=8, min_n=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.choice(dims)
        out.append(random_arrangement(rng, d, rng.randint(min_n, max_n)))
    return out


def other_interior_points(sect, C, p, delta=Fraction(1, 4)):
    """Points of the section chamber ``C`` different from ``p``, one per axis direction."""
    out = []
    k = sect.dim
    base = sign_constraints(sect, C)
    for j in range(k):
        for s in (1, -1):
            coeffs = tuple(Fraction(s if i == j else 0) for i in range(k))
            extra = Constraint(coeffs, -s * p[j] - delta, GE)
            q = solve_constraints(base + [extra], k)
            if q is not None:
                out.append(q)
                break
    return out
