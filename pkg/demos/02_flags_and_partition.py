"""A generic flag sorts the chambers into levels.

``F^0`` is a point, ``F^1`` a line through it, and so on.  Each chamber is
assigned to the first ``F^k`` it meets.  The level sizes are the Betti
numbers of the complexified complement, whatever generic flag we choose.
"""

from arrangement_cw import beta, build_flag, partition, poincare_polynomial, sign_of
from arrangement_cw.catalog import generic_triangle, scalene_triangle
from arrangement_cw.formats import format_signs
from arrangement_cw.generators import random_arrangement


def show(arr, flag, title):
    part = partition(arr, flag)
    print(f"{title}: level sizes {part.sizes()}, Betti numbers "
          f"{list(poincare_polynomial(arr).coeffs)}")
    for k, chambers in part.levels.items():
        marks = ", ".join(f"{format_signs(C)}({sign_of(arr, flag, C, k):+d})" for C in chambers)
        print(f"  ch{k}: {marks}")


show(*generic_triangle(), "generic triangle")
show(*scalene_triangle(), "scalene triangle")

print()
print("The same random arrangement under five seeded flags:")
arr = random_arrangement(7, 2, 5)
for seed in range(5):
    flag = build_flag(arr, seed=seed)
    part = partition(arr, flag)
    top = beta(arr.with_hyperplane(flag.level_hyperplane(arr.dim - 1)))
    print(f"  seed {seed}: sizes {part.sizes()}, top level {part.sizes()[-1]} "
          f"= beta(A + F^1) = {top}")
