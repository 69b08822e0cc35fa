"""Fundamental group presentations for line arrangements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from .degree import degree_table
from .flags import OrientedFlag, partition
from .geometry import Arrangement, SignVector

Word = Tuple[Tuple[int, int], ...]


@dataclass
class Presentation:
    """Generators ``gamma_1..gamma_n`` (chambers of ch_1 along ``+v_1``) and one relator per ch_2 chamber."""

    ngens: int
    relations: List[Word]
    chambers: List[SignVector]
    exponents: List[Tuple[int, ...]]

    def __str__(self):
        gens = ", ".join(f"gamma{i}" for i in range(1, self.ngens + 1))
        rels = ", ".join(word_to_string(w) for w in self.relations)
        return f"< {gens} | {rels} >"


def word_to_string(word: Word) -> str:
    if not word:
        return "1"
    return "*".join(f"gamma{g}" if e == 1 else f"gamma{g}^{e}" for g, e in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1":
        return ()
    out = []
    for tok in text.split("*"):
        name, _, exp = tok.partition("^")
        if not name.startswith("gamma"):
            raise ValueError(f"bad generator {tok!r}")
        out.append((int(name[5:]), int(exp) if exp else 1))
    return tuple(out)


def free_reduce(word: Sequence[Tuple[int, int]]) -> Word:
    stack: List[Tuple[int, int]] = []
    for g, e in word:
        if stack and stack[-1][0] == g:
            total = stack[-1][1] + e
            stack.pop()
            if total:
                stack.append((g, total))
        else:
            stack.append((g, e))
    return tuple(stack)


def relator(exponents: Sequence[int]) -> Word:
    """``g_1^{e_1} ... g_n^{e_n} g_1^{-e_1} ... g_n^{-e_n}`` with zero powers dropped."""
    head = [(i, e) for i, e in enumerate(exponents, start=1) if e]
    return tuple(head + [(i, -e) for i, e in head])


def presentation(arr: Arrangement, flag: OrientedFlag, part=None) -> Presentation:
    if arr.dim != 2:
        raise ValueError("presentations are only produced for line arrangements (dim 2)")
    part = part or partition(arr, flag)
    gens = part.levels[1]
    degs = degree_table(arr, flag, part, 2)
    rels, exps = [], []
    for C in part.levels[2]:
        e = tuple(degs[(C, Ci)] for Ci in gens)
        exps.append(e)
        rels.append(relator(e))
    return Presentation(len(gens), rels, list(part.levels[2]), exps)


def exponent_sum_matrix(pres: Presentation) -> List[List[int]]:
    rows = []
    for w in pres.relations:
        row = [0] * pres.ngens
        for g, e in w:
            row[g - 1] += e
        rows.append(row)
    return rows


def smith_normal_form(M: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix."""
    if not M or not M[0]:
        return []
    factors = invariant_factors(Matrix(M), domain=ZZ)
    return [abs(int(d)) for d in factors if d != 0]


def abelianize(pres: Presentation) -> Tuple[int, List[int]]:
    """``(free rank, torsion coefficients)`` of the abelianized group."""
    M = exponent_sum_matrix(pres)
    factors = smith_normal_form(M) if M else []
    rank = pres.ngens - len(factors)
    return rank, [d for d in factors if d > 1]


def is_commutator(word: Word) -> Optional[Tuple[int, int]]:
    """If ``word`` is ``a^e b^f a^-e b^-f`` with single letters, return the generators."""
    if len(word) != 4:
        return None
    (a, e), (b, f), (c, g), (d, h) = word
    if a == c and b == d and a != b and e == -g and f == -h and abs(e) == abs(f) == 1:
        return a, b
    return None
