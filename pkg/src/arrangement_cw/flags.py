"""Oriented generic flags and the partition of chambers into levels.

A flag is stored as a basepoint ``F^0`` and an ordered basis ``v_1..v_l``;
``F^k = F^0 + span(v_1..v_k)`` is oriented by ``(v_1, ..., v_k)``.  Most
computations happen in *flag coordinates* ``t`` with ``x = F^0 + sum t_i v_i``,
where ``F^k`` is simply ``t_{k+1} = ... = t_l = 0``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Dict, List, Optional, Sequence, Tuple

from .faces import enumerate_chambers
from .geometry import (
    Arrangement,
    ArrangementError,
    Constraint,
    Hyperplane,
    Point,
    SignVector,
    as_point,
    dot,
    invert,
    mat_vec,
    matrix_rank,
    solve_affine,
    solve_constraints,
)
from .lattice import Lattice, build_lattice


class NonGenericFlagError(ArrangementError):
    pass


@dataclass(frozen=True)
class OrientedFlag:
    basepoint: Point
    basis: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "basepoint", as_point(self.basepoint))
        object.__setattr__(self, "basis", tuple(as_point(v) for v in self.basis))
        ell = len(self.basepoint)
        if len(self.basis) != ell or any(len(v) != ell for v in self.basis):
            raise ArrangementError("flag basis must be a square system matching the basepoint")
        if matrix_rank(self.basis) != ell:
            raise ArrangementError("flag basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basepoint)

    def to_flag_coords(self, x: Sequence[Fraction]) -> Point:
        # columns of B are the v_k, so t = B^-1 (x - F^0)
        cols = [[self.basis[k][i] for k in range(self.dim)] for i in range(self.dim)]
        inv = invert(cols)
        return mat_vec(inv, [a - b for a, b in zip(as_point(x), self.basepoint)])

    def from_flag_coords(self, t: Sequence[Fraction]) -> Point:
        t = as_point(t)
        return tuple(self.basepoint[i] + sum((t[k] * self.basis[k][i] for k in range(len(t))),
                                             Fraction(0))
                     for i in range(self.dim))

    def hyperplane_coeffs(self, h: Hyperplane) -> Tuple[Point, Fraction]:
        """Equation of ``h`` in flag coordinates."""
        return tuple(dot(h.normal, v) for v in self.basis), h(self.basepoint)

    def section(self, arr: Arrangement, k: int) -> Arrangement:
        """``A & F^k`` as an arrangement in R^k (flag coordinates)."""
        hs = []
        for h in arr:
            normal, offset = self.hyperplane_coeffs(h)
            hs.append(Hyperplane(normal[:k], offset))
        return Arrangement(k, tuple(hs))

    def level_hyperplane(self, k: int) -> Hyperplane:
        """``F^k`` for ``k = dim - 1`` as a hyperplane of V."""
        if k != self.dim - 1:
            raise ValueError("only the codimension-one member of the flag is a hyperplane")
        cols = [[self.basis[j][i] for j in range(self.dim)] for i in range(self.dim)]
        row = invert(cols)[-1]
        return Hyperplane(row, -dot(row, self.basepoint))


def _section_constraints(arr: Arrangement, flag: OrientedFlag, sv: SignVector, k: int):
    out = []
    for h, s in zip(arr, sv):
        normal, offset = flag.hyperplane_coeffs(h)
        out.append(Constraint(tuple(s * a for a in normal[:k]), s * offset))
    return out


def section_point(arr: Arrangement, flag: OrientedFlag, C: SignVector, k: int) -> Optional[Point]:
    """A point of ``C & F^k`` in flag coordinates of ``F^k``, or None."""
    return solve_constraints(_section_constraints(arr, flag, C, k), k)


def is_generic(arr: Arrangement, flag: OrientedFlag, lattice: Lattice = None) -> bool:
    """Check ``dim(F^k & X) = k - r(X)`` (empty when negative) for every flat and k."""
    if flag.dim != arr.dim:
        return False
    lattice = lattice or build_lattice(arr)
    coeffs = {h.id: flag.hyperplane_coeffs(h) for h in arr}
    for X in lattice.flats:
        for k in range(arr.dim + 1):
            rows = [coeffs[i][0][:k] for i in sorted(X.ids)]
            rhs = [-coeffs[i][1] for i in sorted(X.ids)]
            sol = solve_affine(rows, rhs, k)
            if k < X.rank:
                if sol is not None:
                    return False
            elif sol is None or len(sol[1]) != k - X.rank:
                return False
    return True


def build_flag(arr: Arrangement, seed: int = 0, max_attempts: int = 10_000) -> OrientedFlag:
    """Deterministic generic flag for ``arr``.

    Candidates are drawn from a PRNG seeded with ``seed`` over an integer box
    that grows with every rejected attempt.  Genericity is Zariski-open, so
    the loop terminates quickly in practice.
    """
    rng = random.Random(seed)
    lattice = build_lattice(arr)
    ell = arr.dim
    for attempt in count():
        if attempt >= max_attempts:
            raise NonGenericFlagError("no generic flag found")
        bound = 2 ** (2 + attempt // 8)
        basepoint = [Fraction(rng.randint(-4 * bound, 4 * bound), 2) for _ in range(ell)]
        basis = [[rng.randint(-bound, bound) for _ in range(ell)] for _ in range(ell)]
        if matrix_rank(basis) != ell:
            continue
        flag = OrientedFlag(basepoint, basis)
        if is_generic(arr, flag, lattice):
            return flag
    raise AssertionError("unreachable")


@dataclass
class ChamberPartition:
    """``levels[k]`` lists the chambers first met by ``F^k``.

    Level 1 is ordered along ``+v_1``; other levels by sign vector.
    ``points[C]`` is a point of ``C & F^k`` in flag coordinates of its level.
    """

    levels: Dict[int, List[SignVector]]
    points: Dict[SignVector, Point]

    def level_of(self, C: SignVector) -> int:
        for k, cs in self.levels.items():
            if C in cs:
                return k
        raise KeyError(C)

    def sizes(self) -> List[int]:
        return [len(self.levels[k]) for k in sorted(self.levels)]


def partition(arr: Arrangement, flag: OrientedFlag, check: bool = True) -> ChamberPartition:
    if check and not is_generic(arr, flag):
        raise NonGenericFlagError("flag is not generic for this arrangement")
    levels: Dict[int, List[SignVector]] = {k: [] for k in range(arr.dim + 1)}
    points: Dict[SignVector, Point] = {}
    for C in enumerate_chambers(arr):
        # C & F^{k-1} = empty is tested directly at every level below
        for k in range(arr.dim + 1):
            p = section_point(arr, flag, C, k)
            if p is not None:
                levels[k].append(C)
                points[C] = p
                break
    if arr.dim >= 1:
        levels[1].sort(key=lambda C: points[C][0])
    return ChamberPartition(levels, points)


def sign_of(arr: Arrangement, flag: OrientedFlag, C: SignVector, k: int = None) -> int:
    """+1 if ``C & F^k`` lies in ``F^{k-1} + R_{>0} v_k``, else -1.  Level 0 gives +1."""
    if k is None:
        k = next(j for j in range(arr.dim + 1) if section_point(arr, flag, C, j) is not None)
    if k == 0:
        return 1
    p = section_point(arr, flag, C, k)
    if p is None:
        raise ValueError(f"chamber {C} does not meet F^{k}")
    if section_point(arr, flag, C, k - 1) is not None:
        raise ValueError(f"chamber {C} already meets F^{k - 1}")
    return 1 if p[k - 1] > 0 else -1
