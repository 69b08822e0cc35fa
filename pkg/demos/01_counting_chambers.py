"""Counting chambers two ways.

The intersection lattice predicts how many chambers a real arrangement has
(its Poincare polynomial at t = 1) and how many of them are bounded (the
beta invariant).  Here we compute both sides for a few arrangements and
then watch deletion-restriction rebuild the polynomial one hyperplane at a
time.
"""

from arrangement_cw import (
    bounded_chambers, build_lattice, deletion_restriction, enumerate_chambers, poincare,
    poincare_polynomial,
)
from arrangement_cw.catalog import coordinate_planes, generic_triangle, scalene_pencil
from arrangement_cw.generators import random_arrangement


def report(name, arr):
    lat = build_lattice(arr)
    pi = poincare(lat)
    chambers = enumerate_chambers(arr)
    bounded = bounded_chambers(arr, list(chambers))
    print(f"{name}: pi(A,t) = {pi}")
    print(f"  flats by rank       {lat.rank_counts()}")
    print(f"  chambers            {len(chambers)}  (pi(A,1) = {pi(1)})")
    print(f"  bounded chambers    {len(bounded)}  (beta = {pi.beta})")


report("three generic lines", generic_triangle()[0])
report("three concurrent lines", scalene_pencil())
report("coordinate planes in R^3", coordinate_planes(3))
report("seven random planes", random_arrangement(2024, 3, 7))

print()
print("Deleting and restricting each line of the generic triangle:")
arr = generic_triangle()[0]
pi = poincare_polynomial(arr)
for h in arr:
    deleted, restricted = deletion_restriction(arr, h.id)
    a, b = poincare_polynomial(deleted), poincare_polynomial(restricted)
    print(f"  H{h.id}: ({a}) + t({b}) = {a + b.shift(1)}   matches: {a + b.shift(1) == pi}")
