"""The twisted minimal chain complex and its local-system homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .degree import UnsupportedDimensionError, degree, level_geometry
from .flags import ChamberPartition, OrientedFlag, partition, sign_of
from .geometry import Arrangement, SignVector
from .laurent import LaurentPoly, ZeroWeightError
from .local_system import RankOneSystem, skein

Matrix = List[List[LaurentPoly]]


@dataclass
class TwistedComplex:
    """Graded module with basis ``[sigma_C]``, ``C`` in ch_k, and Laurent boundary matrices.

    ``boundaries[k]`` has one row per chamber of ch_{k-1} and one column per
    chamber of ch_k, both in the order of ``levels``.
    """

    arrangement: Arrangement
    flag: OrientedFlag
    levels: Dict[int, List[SignVector]]
    boundaries: Dict[int, Matrix]
    degrees: Dict[int, Dict[Tuple[SignVector, SignVector], int]] = field(default_factory=dict)
    signs: Dict[SignVector, int] = field(default_factory=dict)

    @property
    def top(self) -> int:
        return self.arrangement.dim

    @property
    def nvars(self) -> int:
        return len(self.arrangement)

    def rank(self, k: int) -> int:
        return len(self.levels.get(k, []))

    def column(self, C: SignVector) -> Dict[SignVector, LaurentPoly]:
        """Nonzero entries of the boundary of ``[sigma_C]``."""
        k = next(j for j, cs in self.levels.items() if C in cs)
        if k == 0:
            return {}
        j = self.levels[k].index(C)
        return {Cp: self.boundaries[k][i][j] for i, Cp in enumerate(self.levels[k - 1])
                if self.boundaries[k][i][j]}


def build_complex(arr: Arrangement, flag: OrientedFlag, system: RankOneSystem = None,
                  part: ChamberPartition = None, method: str = "exact") -> TwistedComplex:
    """Entry ``(C', C)`` of the boundary is ``-sign(C) deg(C, C') (q_S - q_S^-1)``.

    The matrices are always symbolic in q1..qn; ``system`` only validates
    that a concrete weight vector fits the arrangement.
    """
    if arr.dim > 3:
        raise UnsupportedDimensionError("the degree map is only available for dim <= 3")
    if system is not None and system.n != len(arr):
        raise ValueError("local system has the wrong number of weights")
    part = part or partition(arr, flag)
    n = len(arr)
    levels = {k: list(part.levels[k]) for k in range(arr.dim + 1)}
    signs = {C: sign_of(arr, flag, C, k) for k, cs in levels.items() for C in cs}
    boundaries: Dict[int, Matrix] = {}
    degrees: Dict[int, Dict] = {}
    for k in range(1, arr.dim + 1):
        degs = {}
        geom = level_geometry(arr, flag, k) if k >= 2 else None
        mat = [[LaurentPoly.zero(n) for _ in levels[k]] for _ in levels[k - 1]]
        for j, C in enumerate(levels[k]):
            for i, Cp in enumerate(levels[k - 1]):
                d = degree(arr, flag, C, Cp, k, method=method, geom=geom)
                degs[(C, Cp)] = d
                if d:
                    mat[i][j] = skein(C, Cp) * (-signs[C] * d)
        boundaries[k] = mat
        degrees[k] = degs
    return TwistedComplex(arr, flag, levels, boundaries, degrees, signs)


def matmul(A: Matrix, B: Matrix, nvars: int) -> Matrix:
    if not A or not B:
        return []
    inner = len(B)
    return [[sum((A[i][t] * B[t][j] for t in range(inner)), LaurentPoly.zero(nvars))
             for j in range(len(B[0]))] for i in range(len(A))]


def verify_d2(cx: TwistedComplex) -> bool:
    """``d_{k-1} d_k = 0`` identically in the Laurent ring."""
    for k in range(2, cx.top + 1):
        prod = matmul(cx.boundaries[k - 1], cx.boundaries[k], cx.nvars)
        if any(e for row in prod for e in row):
            return False
    return True


def evaluate_matrix(M: Matrix, values: Sequence) -> List[List[Fraction]]:
    return [[e.evaluate(values) for e in row] for row in M]


def rank_bareiss(M: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on a row-scaled integer copy."""
    rows = []
    for r in M:
        r = [Fraction(x) for x in r]
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in r])
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    prev = 1
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for i in range(rank + 1, m):
            rows[i] = [(p * rows[i][j] - rows[i][c] * rows[rank][j]) // prev for j in range(n)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _check_weights(cx: TwistedComplex, values) -> Tuple[Fraction, ...]:
    values = tuple(Fraction(v) for v in values)
    if len(values) != cx.nvars:
        raise ValueError(f"expected {cx.nvars} weights, got {len(values)}")
    if any(v == 0 for v in values):
        raise ZeroWeightError("weights must be nonzero")
    return values


def boundary_ranks(cx: TwistedComplex, values) -> Dict[int, int]:
    values = _check_weights(cx, values)
    return {k: rank_bareiss(evaluate_matrix(cx.boundaries[k], values))
            for k in range(1, cx.top + 1)}


def homology_dims(cx: TwistedComplex, values) -> Tuple[int, ...]:
    ranks = boundary_ranks(cx, values)
    return tuple(cx.rank(k) - ranks.get(k, 0) - ranks.get(k + 1, 0)
                 for k in range(cx.top + 1))


def probe_weights(n: int) -> Tuple[int, ...]:
    """The first ``n`` primes: the deterministic generic probe."""
    primes: List[int] = []
    c = 2
    while len(primes) < n:
        if all(c % p for p in primes):
            primes.append(c)
        c += 1
    return tuple(primes)


def generic_homology_dims(cx: TwistedComplex) -> Tuple[int, ...]:
    return homology_dims(cx, probe_weights(cx.nvars))


def resonance_test(cx: TwistedComplex, values, generic: Sequence[int] = None) -> bool:
    """True iff the homology below the top degree differs from its generic value.

    For planar arrangements this is exactly ``H_1 != 0`` relative to the
    generic ``H_1``; in higher dimension every degree below the top counts.
    """
    h = homology_dims(cx, values)
    g = generic if generic is not None else generic_homology_dims(cx)
    degrees = [1] if cx.top == 2 else range(cx.top)
    return any(h[k] != g[k] for k in degrees)


def to_sympy(M: Matrix, nvars: int):
    import sympy as sp

    qs = sp.symbols(f"q1:{nvars + 1}")
    return sp.Matrix([[sum((c * sp.Mul(*[q ** a for q, a in zip(qs, e)])
                            for e, c in entry.terms.items()), sp.Integer(0))
                       for entry in row] for row in M])


def symbolic_rank(M: Matrix, nvars: int, max_size: int = 8) -> int:
    """Rank over the fraction field Q(q1..qn); only for matrices up to ``max_size``."""
    if not M or not M[0]:
        return 0
    if len(M) > max_size or len(M[0]) > max_size:
        raise ValueError(f"symbolic rank limited to {max_size}x{max_size} matrices")
    from sympy.polys.matrices import DomainMatrix

    sm = to_sympy(M, nvars)
    if all(x == 0 for x in sm):
        return 0
    return DomainMatrix.from_Matrix(sm).to_field().rank()


def symbolic_generic_homology(cx: TwistedComplex) -> Tuple[int, ...]:
    ranks = {k: symbolic_rank(cx.boundaries[k], cx.nvars) for k in range(1, cx.top + 1)}
    return tuple(cx.rank(k) - ranks.get(k, 0) - ranks.get(k + 1, 0)
                 for k in range(cx.top + 1))
