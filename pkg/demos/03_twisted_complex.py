"""The twisted boundary maps of three lines, and where they degenerate.

Every chamber in ch_k becomes a k-cell.  Its boundary is a combination of
(k-1)-cells with coefficients ``-sign(C) deg(C, C') (q_S - q_S^-1)`` in the
Laurent ring.  Homology of the rank-one local system jumps exactly on the
resonance locus.
"""

from fractions import Fraction

from arrangement_cw import (
    build_complex, build_flag, generic_homology_dims, homology_dims, resonance_test,
    symbolic_generic_homology, verify_d2,
)
from arrangement_cw.catalog import scalene_pencil, scalene_triangle
from arrangement_cw.formats import format_signs

arr, flag = scalene_triangle()
cx = build_complex(arr, flag)
for k in (2, 1):
    print(f"d{k}:")
    for C in cx.levels[k]:
        terms = " + ".join(f"({e})[{format_signs(Cp)}]" for Cp, e in cx.column(C).items())
        print(f"  d[{format_signs(C)}] = {terms}")
print("d o d = 0:", verify_d2(cx))
print("generic homology (over Q(q)):", symbolic_generic_homology(cx))
for q in [(1, 1, 1), (-1, 1, 1), (2, 1, 1), (2, 3, 5)]:
    print(f"  q = {q}: h = {homology_dims(cx, q)}  resonant: {resonance_test(cx, q)}")

print()
print("Three concurrent lines resonate along q1 q2 q3 = +-1:")
pencil = scalene_pencil()
cx = build_complex(pencil, build_flag(pencil))
print("generic homology:", generic_homology_dims(cx))
half = Fraction(1, 2)
for q in [(2, half, 1), (2, half, -1), (3, 2, Fraction(1, 6)), (2, 2, 2), (3, half, 1)]:
    product = q[0] * q[1] * q[2]
    shown = "(" + ", ".join(str(x) for x in q) + ")"
    print(f"  q = {shown}: q1 q2 q3 = {product}, h = {homology_dims(cx, q)}")
