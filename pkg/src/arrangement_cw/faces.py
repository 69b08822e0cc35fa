"""Faces, chambers, walls and the face-chamber product ``X o C``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence

from .geometry import (
    GE,
    Arrangement,
    Constraint,
    Point,
    SignVector,
    matrix_rank,
    sign,
    sign_constraints,
    solve_constraints,
)


@dataclass(frozen=True)
class Face:
    signs: SignVector
    point: Point
    codim: int

    @property
    def is_chamber(self) -> bool:
        return 0 not in self.signs

    @property
    def zeros(self) -> FrozenSet[int]:
        return frozenset(i for i, s in enumerate(self.signs, start=1) if s == 0)


def face_leq(X: SignVector, Y: SignVector) -> bool:
    """``X <= Y`` in the face poset: X lies in the closure of Y."""
    return all(x == 0 or x == y for x, y in zip(X, Y))


def _extend(arr: Arrangement, choices) -> Dict[SignVector, Point]:
    """Incrementally refine sign vectors hyperplane by hyperplane.

    Only prefixes that are realizable get extended, so the work is bounded by
    the face counts of the partial arrangements instead of 3**n.
    """
    n = len(arr)
    partial: Dict[SignVector, Point] = {(): tuple(Fraction(0) for _ in range(arr.dim))}
    for i in range(n):
        nxt = {}
        h = arr.hyperplanes[i]
        for prefix, q in partial.items():
            here = sign(h(q))
            for s in choices:
                sv = prefix + (s,)
                if s == here:
                    # the parent's witness already lies on the requested side
                    nxt[sv] = q
                    continue
                p = solve_constraints(sign_constraints(arr, sv + (None,) * (n - i - 1)),
                                      arr.dim)
                if p is not None:
                    nxt[sv] = p
        partial = nxt
    return partial


def enumerate_chambers(arr: Arrangement) -> Dict[SignVector, Point]:
    """All chambers with an interior sample point, keyed by sign vector."""
    return dict(sorted(_extend(arr, (1, -1)).items(), reverse=True))


@dataclass
class FacePoset:
    arrangement: Arrangement
    faces: List[Face]

    def __post_init__(self):
        self._by_signs = {f.signs: f for f in self.faces}

    def __contains__(self, sv) -> bool:
        return tuple(sv) in self._by_signs

    def __getitem__(self, sv) -> Face:
        return self._by_signs[tuple(sv)]

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def chambers(self) -> List[Face]:
        return [f for f in self.faces if f.is_chamber]

    def of_codim(self, k: int) -> List[Face]:
        return [f for f in self.faces if f.codim == k]

    def counts(self) -> List[int]:
        """Number of faces of each dimension 0..dim."""
        ell = self.arrangement.dim
        out = [0] * (ell + 1)
        for f in self.faces:
            out[ell - f.codim] += 1
        return out

    @staticmethod
    def leq(X: SignVector, Y: SignVector) -> bool:
        return face_leq(X, Y)

    def chambers_above(self, X: SignVector) -> List[SignVector]:
        return [C.signs for C in self.chambers if face_leq(X, C.signs)]


def enumerate_faces(arr: Arrangement) -> FacePoset:
    found = _extend(arr, (1, 0, -1))
    faces = []
    for sv, p in sorted(found.items(), reverse=True):
        codim = matrix_rank([h.normal for h, s in zip(arr, sv) if s == 0])
        faces.append(Face(sv, p, codim))
    faces.sort(key=lambda f: f.codim)
    return FacePoset(arr, faces)


def separating_set(C: SignVector, D: SignVector) -> FrozenSet[int]:
    return frozenset(i for i, (a, b) in enumerate(zip(C, D), start=1) if a != b)


def distance(C: SignVector, D: SignVector) -> int:
    return len(separating_set(C, D))


def adjacent(arr: Arrangement, C: SignVector, D: SignVector) -> Optional[SignVector]:
    """The common wall of two chambers, or None.

    A single separating hyperplane is not enough: with parallel hyperplanes
    the zeroed sign vector may be unrealizable.
    """
    sep = separating_set(C, D)
    if len(sep) != 1:
        return None
    (i,) = sep
    wall = tuple(0 if j == i else s for j, s in enumerate(C, start=1))
    if solve_constraints(sign_constraints(arr, wall), arr.dim) is None:
        return None
    return wall


def compose(X: SignVector, C: SignVector) -> SignVector:
    return tuple(x if x != 0 else c for x, c in zip(X, C))


def is_bounded(arr: Arrangement, C: SignVector) -> bool:
    """A chamber is bounded iff its recession cone ``{d : s_i n_i . d >= 0}`` is {0}.

    Without full rank the cone contains a line.  With full rank any nonzero
    ``d`` in the cone has some ``s_i n_i . d > 0``, so one feasibility problem
    (the row sum at least 1) decides it.
    """
    rows = [tuple(s * a for a in h.normal) for h, s in zip(arr, C)]
    ell = arr.dim
    if matrix_rank(rows) < ell:
        return False
    total = tuple(sum(col, Fraction(0)) for col in zip(*rows))
    cone = [Constraint(r, 0, GE) for r in rows] + [Constraint(total, -1, GE)]
    return solve_constraints(cone, ell) is None


def bounded_chambers(arr: Arrangement, chambers: Sequence[SignVector] = None) -> List[SignVector]:
    if chambers is None:
        chambers = list(enumerate_chambers(arr))
    return [C for C in chambers if is_bounded(arr, C)]
