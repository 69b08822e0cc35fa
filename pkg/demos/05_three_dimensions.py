"""Degrees as winding numbers in dimension three.

For planes the degree of a pair ``(C, C')`` is the winding number of a
directing vector field around a clipped polygon.  The exact computation
uses a piecewise-affine field.  The numerical one blends the field
smoothly and integrates its turning.  They agree, and the resulting
complex squares to zero.
"""

import random
import time

from arrangement_cw import (
    build_complex, build_flag, generic_homology_dims, homology_dims, partition,
    poincare_polynomial, verify_d2,
)
from arrangement_cw.degree import degree3_exact, degree3_winding, level_geometry
from arrangement_cw.generators import random_arrangement

rng = random.Random(3)
arr = random_arrangement(rng, 3, 5)
while not arr.is_essential():
    arr = random_arrangement(rng, 3, 5)
flag = build_flag(arr, seed=1)
part = partition(arr, flag)
print("planes:", [tuple(str(c) for c in row) for row in arr.rows()])
print("level sizes:", part.sizes(), " Betti:", list(poincare_polynomial(arr).coeffs))

geom = level_geometry(arr, flag, 3)
worst = 0.0
start = time.perf_counter()
agree = True
for C in part.levels[3]:
    for Cp in part.levels[2]:
        exact = degree3_exact(arr, flag, C, Cp, geom=geom)
        numeric, residue = degree3_winding(arr, flag, C, Cp, return_residue=True, geom=geom)
        agree &= exact == numeric
        worst = max(worst, residue)
print(f"exact and numeric degrees agree on {len(part.levels[3]) * len(part.levels[2])} pairs: "
      f"{agree} (largest residue {worst:.1e}, {time.perf_counter() - start:.2f} s)")

cx = build_complex(arr, flag)
print("d o d = 0:", verify_d2(cx))
print("trivial weights:", homology_dims(cx, (1,) * len(arr)))
print(f"prime weights:   {generic_homology_dims(cx)}  (beta = {poincare_polynomial(arr).beta})")
