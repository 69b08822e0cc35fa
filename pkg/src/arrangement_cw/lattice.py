"""Intersection lattice, Moebius function and Poincare polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .geometry import Arrangement, Hyperplane, Point, dot, solve_affine


@dataclass(frozen=True)
class Flat:
    """A nonempty intersection of hyperplanes.

    ``ids`` is the set of *all* hyperplanes containing the flat, which makes
    it a canonical key: two generating sets give the same flat iff their
    closures agree.
    """

    ids: FrozenSet[int]
    point: Point
    directions: Tuple[Point, ...]
    rank: int

    @property
    def dim(self) -> int:
        return len(self.directions)

    def contains(self, h: Hyperplane) -> bool:
        return h(self.point) == 0 and all(dot(h.normal, d) == 0 for d in self.directions)


def _intersect(flat: Flat, h: Hyperplane):
    """Point and direction basis of ``flat & h``; None if empty."""
    coeffs = [dot(h.normal, d) for d in flat.directions]
    sol = solve_affine([coeffs], [-h(flat.point)], len(coeffs))
    if sol is None:
        return None
    s0, kernel = sol
    dims = len(flat.point)

    def combine(s):
        return tuple(sum((si * d[j] for si, d in zip(s, flat.directions)), Fraction(0))
                     for j in range(dims))

    shift = combine(s0)
    point = tuple(p + t for p, t in zip(flat.point, shift))
    return point, tuple(combine(k) for k in kernel)


def ambient_flat(dim: int) -> Flat:
    basis = tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim))
    return Flat(frozenset(), tuple(Fraction(0) for _ in range(dim)), basis, 0)


@dataclass
class Lattice:
    arrangement: Arrangement
    flats: List[Flat]
    mobius: Dict[FrozenSet[int], int]

    def of_rank(self, r: int) -> List[Flat]:
        return [X for X in self.flats if X.rank == r]

    @staticmethod
    def leq(X: Flat, Y: Flat) -> bool:
        """``X <= Y`` iff ``Y`` is contained in ``X``."""
        return X.ids <= Y.ids

    def flat_of(self, ids) -> Flat:
        ids = frozenset(ids)
        for X in self.flats:
            if X.ids == ids:
                return X
        raise KeyError(sorted(ids))

    def rank_counts(self) -> List[int]:
        top = max(X.rank for X in self.flats)
        return [len(self.of_rank(r)) for r in range(top + 1)]


def build_lattice(arr: Arrangement) -> Lattice:
    bottom = ambient_flat(arr.dim)
    levels = [[bottom]]
    known = {bottom.ids}
    while levels[-1]:
        nxt = []
        for X in levels[-1]:
            for h in arr:
                if h.id in X.ids:
                    continue
                inter = _intersect(X, h)
                if inter is None:
                    continue
                point, dirs = inter
                probe = Flat(frozenset(), point, dirs, 0)
                ids = frozenset(g.id for g in arr if g.id in X.ids or g.id == h.id
                                or probe.contains(g))
                if ids in known:
                    continue
                known.add(ids)
                nxt.append(Flat(ids, point, dirs, arr.dim - len(dirs)))
        levels.append(nxt)
    flats = [X for level in levels for X in sorted(level, key=lambda X: sorted(X.ids))]
    mobius: Dict[FrozenSet[int], int] = {}
    for X in flats:
        if X.rank == 0:
            mobius[X.ids] = 1
        else:
            mobius[X.ids] = -sum(mobius[Y.ids] for Y in flats
                                 if Y.rank < X.rank and Y.ids < X.ids)
    return Lattice(arr, flats, mobius)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in ``t`` stored as ascending coefficients."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) or (0,))

    def __call__(self, t):
        return sum(c * t ** i for i, c in enumerate(self.coeffs))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[i] + other[i] for i in range(n)))

    def shift(self, k: int = 1) -> "Polynomial":
        """Multiply by ``t**k``."""
        return Polynomial((0,) * k + self.coeffs)

    def truncate(self, q: int) -> "Polynomial":
        return Polynomial(self.coeffs[: q + 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def beta(self) -> int:
        return abs(self(-1))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            if mono and c == 1:
                body = mono
            elif mono:
                body = f"{c}{mono}"
            else:
                body = str(c)
            terms.append(body)
        return " + ".join(terms) if terms else "0"


def poincare(lattice: Lattice) -> Polynomial:
    top = max(X.rank for X in lattice.flats)
    coeffs = [0] * (top + 1)
    for X in lattice.flats:
        # mu(X) (-t)^r contributes |mu| since sign(mu) = (-1)^r
        coeffs[X.rank] += lattice.mobius[X.ids] * (-1) ** X.rank
    return Polynomial(tuple(coeffs))


def poincare_polynomial(arr: Arrangement) -> Polynomial:
    return poincare(build_lattice(arr))


def beta(arr: Arrangement) -> int:
    return poincare_polynomial(arr).beta


def restriction_chart(h: Hyperplane):
    """Coordinate eliminated when parametrizing ``h``: largest |normal| entry, lowest index."""
    m = max(abs(a) for a in h.normal)
    return next(j for j, a in enumerate(h.normal) if abs(a) == m)


def restrict_hyperplane(h: Hyperplane, k: Hyperplane):
    """Equation of ``k & h`` in the chart of ``h``; None if disjoint or parallel."""
    j = restriction_chart(h)
    nj = h.normal[j]
    # x_j = -(offset + sum_{i != j} n_i x_i) / n_j
    f = k.normal[j] / nj
    normal = tuple(a - f * b for i, (a, b) in enumerate(zip(k.normal, h.normal)) if i != j)
    offset = k.offset - f * h.offset
    if all(a == 0 for a in normal):
        return None
    return normal, offset


def lift_from_chart(h: Hyperplane, y: Sequence[Fraction]) -> Point:
    """Map chart coordinates of ``h`` back to a point of ``h``."""
    j = restriction_chart(h)
    y = list(y)
    rest = [a for i, a in enumerate(h.normal) if i != j]
    xj = -(h.offset + dot(rest, y)) / h.normal[j]
    return tuple(y[:j] + [xj] + y[j:])


def deletion_restriction(arr: Arrangement, hid: int) -> Tuple[Arrangement, Arrangement]:
    """Return ``(A', A'')``: ``A`` without ``H`` and ``A`` restricted to ``H``."""
    h = arr[hid]
    deleted = arr.without(hid)
    restricted = []
    seen = set()
    for k in deleted:
        eq = restrict_hyperplane(h, k)
        if eq is None:
            continue
        cand = Hyperplane(eq[0], eq[1])
        if cand.key() in seen:
            continue
        seen.add(cand.key())
        restricted.append(cand)
    return deleted, Arrangement(arr.dim - 1, tuple(restricted))
