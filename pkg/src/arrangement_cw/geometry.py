"""Exact rational geometry for real hyperplane arrangements.

Every coordinate and coefficient is a :class:`fractions.Fraction`; nothing is
ever rounded.  Feasibility of sign-constrained polyhedra is decided by
Fourier--Motzkin elimination with open/closed bookkeeping, so strict
inequalities need no epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

Point = Tuple[Fraction, ...]
SignVector = Tuple[int, ...]

GT, GE, EQ = ">", ">=", "="


class DimensionError(ValueError):
    pass


class InfeasibleError(ValueError):
    pass


class ArrangementError(ValueError):
    pass


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use int, str or Fraction")
    return Fraction(value)


def as_point(values: Iterable) -> Point:
    return tuple(as_fraction(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane ``normal . x + offset = 0``."""

    normal: Point
    offset: Fraction
    id: int = 0

    def __post_init__(self):
        object.__setattr__(self, "normal", as_point(self.normal))
        object.__setattr__(self, "offset", as_fraction(self.offset))
        if all(a == 0 for a in self.normal):
            raise ArrangementError(f"hyperplane {self.id} has a zero normal vector")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def __call__(self, p: Sequence[Fraction]) -> Fraction:
        if len(p) != self.dim:
            raise DimensionError(f"point has dimension {len(p)}, expected {self.dim}")
        return dot(self.normal, p) + self.offset

    def key(self) -> Point:
        """Projective normal form of ``(normal, offset)``; equal keys mean equal hyperplanes."""
        coeffs = self.normal + (self.offset,)
        lead = next(c for c in coeffs if c != 0)
        return tuple(c / lead for c in coeffs)


@dataclass(frozen=True)
class Arrangement:
    """An ordered list of distinct affine hyperplanes in R^dim, ids 1..n."""

    dim: int
    hyperplanes: Tuple[Hyperplane, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.dim < 0:
            raise ArrangementError("dimension must be non-negative")
        hs = []
        seen = {}
        for i, h in enumerate(self.hyperplanes, start=1):
            if h.dim != self.dim:
                raise DimensionError(
                    f"hyperplane {i} lives in R^{h.dim}, arrangement is in R^{self.dim}")
            h = Hyperplane(h.normal, h.offset, i)
            k = h.key()
            if k in seen:
                raise ArrangementError(f"hyperplane {i} duplicates hyperplane {seen[k]}")
            seen[k] = i
            hs.append(h)
        object.__setattr__(self, "hyperplanes", tuple(hs))

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Sequence]) -> "Arrangement":
        """Build from rows ``[a_1, ..., a_dim, b]`` meaning ``a . x + b = 0``."""
        hs = []
        for i, row in enumerate(rows, start=1):
            row = as_point(row)
            if len(row) != dim + 1:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {dim + 1}")
            hs.append(Hyperplane(row[:dim], row[dim], i))
        return cls(dim, tuple(hs))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __getitem__(self, i: int) -> Hyperplane:
        """1-based access, matching hyperplane ids."""
        return self.hyperplanes[i - 1]

    def rows(self):
        return [h.normal + (h.offset,) for h in self.hyperplanes]

    def sign_vector(self, p: Sequence[Fraction]) -> SignVector:
        return tuple(sign(h(p)) for h in self.hyperplanes)

    def without(self, hid: int) -> "Arrangement":
        return Arrangement(self.dim, tuple(h for h in self.hyperplanes if h.id != hid))

    def with_hyperplane(self, h: Hyperplane) -> "Arrangement":
        return Arrangement(self.dim, self.hyperplanes + (h,))

    def rank(self) -> int:
        return matrix_rank([h.normal for h in self.hyperplanes])

    def is_essential(self) -> bool:
        return self.rank() == self.dim


def side_of(h: Hyperplane, p: Sequence) -> int:
    return sign(h(as_point(p)))


# --- exact linear algebra -------------------------------------------------

def row_reduce(rows: Sequence[Sequence[Fraction]]):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(map(as_fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(row_reduce(rows)[1]) if rows else 0


def solve_affine(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int):
    """Solve ``rows @ x = rhs`` exactly.

    Returns ``(particular, kernel_basis)`` or ``None`` when inconsistent.
    """
    if not rows:
        basis = [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
        return tuple(Fraction(0) for _ in range(ncols)), basis
    aug = [list(map(as_fraction, r)) + [as_fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = row_reduce(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return tuple(x), basis


def invert(matrix: Sequence[Sequence[Fraction]]):
    n = len(matrix)
    aug = [list(map(as_fraction, r)) + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(matrix)]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ArrangementError("matrix is singular")
    return [tuple(r[n:]) for r in red]


def mat_vec(matrix, v) -> Point:
    return tuple(dot(r, v) for r in matrix)


# --- Fourier-Motzkin ------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    """``coeffs . x + const  (op)  0`` with op one of '>', '>=', '='."""

    coeffs: Point
    const: Fraction
    op: str = GT

    def __post_init__(self):
        object.__setattr__(self, "coeffs", as_point(self.coeffs))
        object.__setattr__(self, "const", as_fraction(self.const))
        if self.op not in (GT, GE, EQ):
            raise ValueError(f"unknown relation {self.op!r}")

    @classmethod
    def from_hyperplane(cls, h: Hyperplane, s: int) -> "Constraint":
        if s == 0:
            return cls(h.normal, h.offset, EQ)
        return cls(tuple(s * a for a in h.normal), s * h.offset, GT)

    def holds(self, p: Sequence[Fraction]) -> bool:
        v = dot(self.coeffs, p) + self.const
        return v > 0 if self.op == GT else v >= 0 if self.op == GE else v == 0


def sign_constraints(arr: Arrangement, sv: SignVector):
    if len(sv) != len(arr):
        raise DimensionError(f"sign vector has length {len(sv)}, arrangement has {len(arr)}")
    return [Constraint.from_hyperplane(h, s) for h, s in zip(arr.hyperplanes, sv)
            if s is not None]


def _normalize(c: Constraint) -> Optional[Tuple[Point, Fraction, bool]]:
    # scale so the largest |coefficient| is 1; inequality direction is preserved
    m = max((abs(a) for a in c.coeffs), default=0)
    if m == 0:
        return None
    return tuple(a / m for a in c.coeffs), c.const / m, c.op == GT


def _eliminate_equalities(constraints, dim):
    """Substitute away equalities. Returns (inequalities, substitutions) or None."""
    eqs = [c for c in constraints if c.op == EQ]
    ineqs = [c for c in constraints if c.op != EQ]
    subs = []  # (var, coeffs, const): x_var = coeffs . x + const
    while eqs:
        c = eqs.pop()
        j = next((k for k, a in enumerate(c.coeffs) if a != 0), None)
        if j is None:
            if c.const != 0:
                return None
            continue
        a = c.coeffs[j]
        expr = tuple(Fraction(0) if k == j else -b / a for k, b in enumerate(c.coeffs))
        const = -c.const / a
        subs.append((j, expr, const))

        def substitute(d: Constraint) -> Constraint:
            f = d.coeffs[j]
            if f == 0:
                return d
            coeffs = tuple(Fraction(0) if k == j else b + f * e
                           for k, (b, e) in enumerate(zip(d.coeffs, expr)))
            return Constraint(coeffs, d.const + f * const, d.op)

        eqs = [substitute(d) for d in eqs]
        ineqs = [substitute(d) for d in ineqs]
    return ineqs, subs


def _tighten(system, coeffs: Point, const: Fraction, strict: bool) -> None:
    # among parallel constraints coeffs.x + c > 0 only the smallest c matters
    old = system.get(coeffs)
    if old is None or const < old[0] or (const == old[0] and strict and not old[1]):
        system[coeffs] = (const, strict)


def _fm_stages(ineqs, order):
    """Run elimination; returns the list of systems seen, or None if infeasible."""
    system: Dict[Point, Tuple[Fraction, bool]] = {}
    for c in ineqs:
        n = _normalize(c)
        if n is None:
            if not (c.const > 0 if c.op == GT else c.const >= 0):
                return None
            continue
        _tighten(system, *n)
    stages = []
    for var in order:
        stages.append(dict(system))
        pos, neg, rest = [], [], {}
        for coeffs, (const, strict) in system.items():
            a = coeffs[var]
            if a > 0:
                pos.append((coeffs, const, strict))
            elif a < 0:
                neg.append((coeffs, const, strict))
            else:
                rest[coeffs] = (const, strict)
        for pc, pk, ps in pos:
            for nc, nk, ns in neg:
                fp, fn = -nc[var], pc[var]
                coeffs = tuple(fp * a + fn * b for a, b in zip(pc, nc))
                const = fp * pk + fn * nk
                strict = ps or ns
                norm = _normalize(Constraint(coeffs, const, GT if strict else GE))
                if norm is None:
                    if const < 0 or (strict and const == 0):
                        return None
                    continue
                _tighten(rest, *norm)
        system = rest
    stages.append(system)
    return stages


def solve_constraints(constraints: Sequence[Constraint], dim: int) -> Optional[Point]:
    """Return an exact point satisfying every constraint, or ``None``.

    Back-substitution takes the midpoint of the residual interval for each
    variable, ``lower + 1`` / ``upper - 1`` when one side is unbounded, and 0
    when both are.
    """
    for c in constraints:
        if len(c.coeffs) != dim:
            raise DimensionError(f"constraint has {len(c.coeffs)} coefficients, expected {dim}")
    reduced = _eliminate_equalities(list(constraints), dim)
    if reduced is None:
        return None
    ineqs, subs = reduced
    substituted = {j for j, _, _ in subs}
    order = [k for k in range(dim) if k not in substituted]
    stages = _fm_stages(ineqs, order)
    if stages is None:
        return None
    x = [Fraction(0)] * dim
    for var, system in reversed(list(zip(order, stages))):
        lo = hi = None
        lo_strict = hi_strict = False
        for coeffs, (const, strict) in system.items():
            a = coeffs[var]
            if a == 0:
                continue
            rest = const + sum((coeffs[k] * x[k] for k in range(dim) if k != var), Fraction(0))
            bound = -rest / a
            if a > 0:
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
            else:
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
        if lo is not None and hi is not None:
            x[var] = lo if lo == hi else (lo + hi) / 2
        elif lo is not None:
            x[var] = lo + 1
        elif hi is not None:
            x[var] = hi - 1
        else:
            x[var] = Fraction(0)
    for j, expr, const in reversed(subs):
        x[j] = dot(expr, x) + const
    point = tuple(x)
    assert all(c.holds(point) for c in constraints), "Fourier-Motzkin back-substitution failed"
    return point


def feasible(arr: Arrangement, sv: SignVector, extra: Sequence[Constraint] = ()) -> bool:
    """True iff the face cut out by ``sv`` (and ``extra``) is nonempty."""
    return solve_constraints(sign_constraints(arr, sv) + list(extra), arr.dim) is not None


def sample_point(arr: Arrangement, sv: SignVector, extra: Sequence[Constraint] = ()) -> Point:
    p = solve_constraints(sign_constraints(arr, sv) + list(extra), arr.dim)
    if p is None:
        raise InfeasibleError(f"region with sign vector {sv} is empty")
    return p
