"""The degree map ``deg(C, C')`` for ``C`` in ch_k and ``C'`` in ch_{k-1}.

All work happens in flag coordinates of ``F^k`` where ``F = F^{k-1}`` is the
coordinate hyperplane ``t_k = 0``.  The clipping region ``D_0`` is the box
``[-R, R]^{k-1}`` inside ``F``; ``P(C')`` is the closure of ``C' & F`` clipped
to that box.

A vector field on ``dP(C')`` directing to ``C`` is obtained from an interior
point ``p`` of ``C``: at a boundary point ``x`` the vector ``p - x`` is
projected to ``F`` along a direction ``(w, 1)`` lying in every hyperplane
through ``x``.  Such a projection never moves a vector across those
hyperplanes, so the result is on ``C``'s side of each of them; on the box
boundary it points inward once ``R`` is large compared with ``p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .geometry import Arrangement, Hyperplane, Point, SignVector, dot, invert, mat_vec, sign
from .flags import OrientedFlag, section_point
from .lattice import build_lattice

BOX = "S0"

# sign convention for the bottom differential, fixed by the printed d_1 of
# the three-line example: every C in ch_1 has degree -1 against C_0
LEVEL_ONE_DEGREE = -1


class UnsupportedDimensionError(NotImplementedError):
    pass


class DegreeError(ValueError):
    pass


def vertex_bound(arr: Arrangement, flag: OrientedFlag, k: int) -> Fraction:
    """Largest sup-norm of a vertex of ``A & F^{k-1}`` (flag coordinates)."""
    if k - 1 <= 0:
        return Fraction(0)
    sect = flag.section(arr, k - 1)
    lat = build_lattice(sect)
    pts = [X.point for X in lat.flats if X.rank == k - 1]
    return max((max(abs(c) for c in p) for p in pts), default=Fraction(0))


def clip_radius(arr: Arrangement, flag: OrientedFlag, k: int = None) -> Fraction:
    """``R = 2 (max |vertex coordinate| + 1)``: every vertex of ``A & F^{k-1}`` is strictly inside."""
    k = arr.dim if k is None else k
    return 2 * (vertex_bound(arr, flag, k) + 1)


def transverse_direction(sect: Arrangement, incidences) -> Point:
    """Minimal-norm ``w`` with ``(w, 1)`` lying in every hyperplane of ``incidences``.

    ``sect`` is an arrangement in R^k; the returned ``w`` has length k-1.
    """
    k = sect.dim
    ids = sorted(i for i in incidences if i != BOX)
    if not ids:
        return tuple(Fraction(0) for _ in range(k - 1))
    rows = [sect[i].normal[: k - 1] for i in ids]
    rhs = [-sect[i].normal[k - 1] for i in ids]
    gram = [[dot(r, s) for s in rows] for r in rows]
    y = mat_vec(invert(gram), rhs)
    return tuple(sum((yi * r[j] for yi, r in zip(y, rows)), Fraction(0)) for j in range(k - 1))


def directing_from_w(p: Point, x: Point, w: Sequence) -> Tuple:
    k = len(p)
    return tuple(p[j] - x[j] - p[k - 1] * w[j] for j in range(k - 1))


def directing_vector(sect: Arrangement, p: Point, x: Point, incidences=None,
                     radius: Fraction = None) -> Point:
    """Tangent vector of ``F`` at ``x`` directing to the chamber containing ``p``.

    ``sect`` is an arrangement in R^k, ``p`` a point of the chamber in R^k and
    ``x`` a boundary point in ``F = {t_k = 0}`` given by its first k-1
    coordinates.  Raises :class:`DegreeError` if the directing conditions fail.
    """
    k = sect.dim
    xf = tuple(x) + (Fraction(0),)
    if incidences is None:
        incidences = {h.id for h in sect if h(xf) == 0}
    U = directing_from_w(p, x, transverse_direction(sect, incidences))
    for i in incidences:
        if i == BOX:
            continue
        h = sect[i]
        if sign(dot(h.normal[: k - 1], U)) != sign(h(p)):
            raise DegreeError(f"vector at {x} is not on the chamber's side of H{i}")
    if radius is not None:
        for j in range(k - 1):
            if abs(x[j]) == radius and not (U[j] * x[j] < 0):
                raise DegreeError(f"vector at {x} is not inward on the clipping box")
    return U


def _w_bound(sect: Arrangement) -> Fraction:
    k = sect.dim
    ws = [transverse_direction(sect, {h.id}) for h in sect]
    if k >= 3:
        lat = build_lattice(Arrangement(k - 1, tuple(
            Hyperplane(h.normal[: k - 1], h.offset) for h in sect)))
        ws += [transverse_direction(sect, X.ids) for X in lat.flats if X.rank == k - 1]
    return max((max(abs(c) for c in w) for w in ws if w), default=Fraction(0))


def inward_radius(sect: Arrangement, p: Point, w_bound: Fraction = None) -> Fraction:
    """A radius beyond which every directing vector built from ``p`` is inward on the box."""
    k = sect.dim
    W = _w_bound(sect) if w_bound is None else w_bound
    pf = max((abs(c) for c in p[: k - 1]), default=Fraction(0))
    return pf + abs(p[k - 1]) * W


@dataclass(frozen=True)
class LevelGeometry:
    """Data shared by every degree computation at one level of the flag."""

    sect: Arrangement
    clip_radius: Fraction
    w_bound: Fraction


def level_geometry(arr: Arrangement, flag: OrientedFlag, k: int) -> LevelGeometry:
    sect = flag.section(arr, k)
    return LevelGeometry(sect, clip_radius(arr, flag, k), _w_bound(sect))


@dataclass
class ClippedFace:
    """``P(C') = closure(C' & F) & [-R, R]^{k-1}``.

    ``vertices`` run counterclockwise for k-1 = 2 and as ``[a, b]`` along
    ``+v_1`` for k-1 = 1.  ``incidences[j]`` holds hyperplane ids through
    vertex j plus ``"S0"`` when the vertex is on the box boundary.
    """

    chamber: SignVector
    radius: Fraction
    vertices: List[Point]
    incidences: List[FrozenSet]


def _incidences(sect: Arrangement, x: Point, radius: Fraction) -> FrozenSet:
    xf = tuple(x) + (Fraction(0),)
    inc = {h.id for h in sect if h(xf) == 0}
    if any(abs(c) == radius for c in x):
        inc.add(BOX)
    return frozenset(inc)


def clipped_face(sect: Arrangement, Cp: SignVector, radius: Fraction) -> ClippedFace:
    k = sect.dim
    R = Fraction(radius)
    halfplanes = [(tuple(s * a for a in h.normal[: k - 1]), s * h.offset)
                  for h, s in zip(sect, Cp)]
    if k == 2:
        lo, hi = -R, R
        for (a,), b in halfplanes:
            t = -b / a
            if a > 0:
                lo = max(lo, t)
            else:
                hi = min(hi, t)
        if not lo < hi:
            raise DegreeError(f"{Cp} does not meet F inside the clipping box")
        verts = [(lo,), (hi,)]
    elif k == 3:
        verts = [(-R, -R), (R, -R), (R, R), (-R, R)]
        for a, b in halfplanes:
            verts = _clip(verts, a, b)
            if not verts:
                raise DegreeError(f"{Cp} does not meet F inside the clipping box")
    else:
        raise UnsupportedDimensionError(f"degree map not implemented for level {k}")
    return ClippedFace(Cp, R, verts, [_incidences(sect, v, R) for v in verts])


def _clip(poly: List[Point], a: Point, b: Fraction) -> List[Point]:
    """Sutherland-Hodgman step against ``a . x + b >= 0`` (exact)."""
    out: List[Point] = []
    n = len(poly)
    for i in range(n):
        cur, nxt = poly[i], poly[(i + 1) % n]
        fc, fn = dot(a, cur) + b, dot(a, nxt) + b
        if fc >= 0:
            out.append(cur)
        if (fc > 0 and fn < 0) or (fc < 0 and fn > 0):
            t = fc / (fc - fn)
            out.append(tuple(c + t * (d - c) for c, d in zip(cur, nxt)))
    dedup: List[Point] = []
    for v in out:
        if not dedup or dedup[-1] != v:
            dedup.append(v)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup if len(dedup) >= 3 else []


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def winding_number(polygon: Sequence[Point]) -> int:
    """Exact winding number of a closed polygon around the origin."""
    wn = 0
    n = len(polygon)
    for i in range(n):
        s, t = polygon[i], polygon[(i + 1) % n]
        if s[0] == 0 and s[1] == 0:
            raise DegreeError("directing field vanishes on the boundary")
        side = _cross((t[0] - s[0], t[1] - s[1]), (-s[0], -s[1]))
        if s[1] <= 0:
            if t[1] > 0 and side > 0:
                wn += 1
        elif t[1] <= 0 and side < 0:
            wn -= 1
    return wn


@dataclass
class _Setup:
    sect: Arrangement
    p: Point
    radius: Fraction
    face: ClippedFace


def _setup(arr, flag, C, Cp, k, p, radius, geom: LevelGeometry = None) -> _Setup:
    if arr.dim < k:
        raise ValueError(f"level {k} exceeds the ambient dimension {arr.dim}")
    geom = geom or level_geometry(arr, flag, k)
    sect = geom.sect
    if p is None:
        p = section_point(arr, flag, C, k)
        if p is None:
            raise ValueError(f"chamber {C} does not meet F^{k}")
    else:
        p = tuple(Fraction(c) for c in p)
        if sect.sign_vector(p) != tuple(C):
            raise ValueError(f"point {p} is not in chamber {C}")
    need = max(geom.clip_radius, inward_radius(sect, p, geom.w_bound) + 1)
    if radius is None:
        radius = need
    elif Fraction(radius) < need:
        raise ValueError(f"radius {radius} is not admissible; need at least {need}")
    return _Setup(sect, p, Fraction(radius), clipped_face(sect, Cp, radius))


def degree2(arr: Arrangement, flag: OrientedFlag, C: SignVector, Cp: SignVector,
            p: Point = None, radius=None, k: int = 2, geom: LevelGeometry = None) -> int:
    """``deg(C, C')`` on the segment ``P(C') = [a, b]``: ``(u(b) - u(a)) / 2``."""
    s = _setup(arr, flag, C, Cp, k, p, radius, geom)
    a, b = s.face.vertices
    ua = sign(directing_vector(s.sect, s.p, a, s.face.incidences[0], s.radius)[0])
    ub = sign(directing_vector(s.sect, s.p, b, s.face.incidences[1], s.radius)[0])
    return (ub - ua) // 2


def _vertex_field(s: _Setup):
    ws = [transverse_direction(s.sect, inc) for inc in s.face.incidences]
    Us = [directing_vector(s.sect, s.p, v, inc, s.radius)
          for v, inc in zip(s.face.vertices, s.face.incidences)]
    return ws, Us


def degree3_exact(arr: Arrangement, flag: OrientedFlag, C: SignVector, Cp: SignVector,
                  p: Point = None, radius=None, k: int = 3, geom: LevelGeometry = None) -> int:
    """Winding number of the piecewise-affine directing field; exact rational arithmetic."""
    s = _setup(arr, flag, C, Cp, k, p, radius, geom)
    _, Us = _vertex_field(s)
    return winding_number(Us)


def _smoothstep(t: float) -> float:
    return t * t * (3 - 2 * t)


def degree3_winding(arr: Arrangement, flag: OrientedFlag, C: SignVector, Cp: SignVector,
                    samples_per_edge: int = 16, p: Point = None, radius=None, k: int = 3,
                    tol: float = 1e-6, max_depth: int = 60,
                    return_residue: bool = False, geom: LevelGeometry = None):
    """Total turning of ``U/|U|`` around ``dP(C')`` divided by ``2 pi``.

    Uses a smooth (non-affine) blend of the transverse directions along each
    edge, so it samples a different directing field from
    :func:`degree3_exact`.  Each edge starts with ``samples_per_edge`` samples;
    any step turning by more than an eighth of a turn is bisected.
    """
    s = _setup(arr, flag, C, Cp, k, p, radius, geom)
    ws, _ = _vertex_field(s)
    verts = [tuple(float(c) for c in v) for v in s.face.vertices]
    wf = [tuple(float(c) for c in w) for w in ws]
    pf = tuple(float(c) for c in s.p)
    m = len(verts)

    def field_at(i: int, t: float):
        v0, v1 = verts[i], verts[(i + 1) % m]
        w0, w1 = wf[i], wf[(i + 1) % m]
        st = _smoothstep(t)
        x = [v0[c] + t * (v1[c] - v0[c]) for c in range(2)]
        w = [w0[c] + st * (w1[c] - w0[c]) for c in range(2)]
        return math.atan2(pf[1] - x[1] - pf[2] * w[1], pf[0] - x[0] - pf[2] * w[0])

    def turn(i: int, t0: float, t1: float, a0: float, a1: float, depth: int) -> float:
        d = (a1 - a0 + math.pi) % (2 * math.pi) - math.pi
        if abs(d) <= math.pi / 4:
            return d
        if depth >= max_depth:
            raise DegreeError("winding number did not converge; field may vanish on the boundary")
        tm = (t0 + t1) / 2
        am = field_at(i, tm)
        return turn(i, t0, tm, a0, am, depth + 1) + turn(i, tm, t1, am, a1, depth + 1)

    total = 0.0
    n = max(1, samples_per_edge)
    for i in range(m):
        ts = [j / n for j in range(n + 1)]
        angles = [field_at(i, t) for t in ts]
        for j in range(n):
            total += turn(i, ts[j], ts[j + 1], angles[j], angles[j + 1], 0)
    turns = total / (2 * math.pi)
    residue = abs(turns - round(turns))
    if residue >= tol:
        raise DegreeError(f"winding total {turns} is not within {tol} of an integer")
    return (round(turns), residue) if return_residue else round(turns)


def degree(arr: Arrangement, flag: OrientedFlag, C: SignVector, Cp: SignVector, k: int,
           p: Point = None, radius=None, method: str = "exact",
           geom: LevelGeometry = None) -> int:
    """``deg(C, C')`` with ``C`` in ch_k and ``C'`` in ch_{k-1}."""
    if k == 1:
        return LEVEL_ONE_DEGREE
    if k == 2:
        return degree2(arr, flag, C, Cp, p=p, radius=radius, geom=geom)
    if k == 3:
        if method == "winding":
            return degree3_winding(arr, flag, C, Cp, p=p, radius=radius, geom=geom)
        return degree3_exact(arr, flag, C, Cp, p=p, radius=radius, geom=geom)
    raise UnsupportedDimensionError(f"degree map not implemented for level {k}")


def degree_table(arr: Arrangement, flag: OrientedFlag, partition, k: int,
                 method: str = "exact") -> Dict[Tuple[SignVector, SignVector], int]:
    geom = level_geometry(arr, flag, k) if k >= 2 else None
    return {(C, Cp): degree(arr, flag, C, Cp, k, method=method, geom=geom)
            for C in partition.levels[k] for Cp in partition.levels[k - 1]}
