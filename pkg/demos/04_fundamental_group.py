"""Reading a presentation of pi_1 off the degree map.

For a line arrangement the chambers of ch_1, ordered along the flag line,
give generators.  Every chamber of ch_2 contributes one relator whose
exponents are its degrees against those generators.
"""

from arrangement_cw import abelianize, build_flag, presentation
from arrangement_cw.catalog import generic_triangle, scalene_pencil, scalene_triangle
from arrangement_cw.formats import format_signs
from arrangement_cw.generators import random_arrangement
from arrangement_cw.pi1 import is_commutator, word_to_string

cases = [("scalene triangle", *scalene_triangle()), ("generic triangle", *generic_triangle())]
pencil = scalene_pencil()
cases.append(("concurrent lines", pencil, build_flag(pencil)))
wide = random_arrangement(99, 2, 5)
cases.append(("five random lines", wide, build_flag(wide)))

for name, arr, flag in cases:
    pres = presentation(arr, flag)
    rank, torsion = abelianize(pres)
    print(f"{name}: {pres.ngens} generators, abelianization Z^{rank}"
          + (f" + torsion {torsion}" if torsion else ""))
    for C, w in zip(pres.chambers, pres.relations):
        pair = is_commutator(w)
        note = f"  [commutator of gamma{pair[0]}, gamma{pair[1]}]" if pair else ""
        print(f"  R({format_signs(C)}) = {word_to_string(w)}{note}")
