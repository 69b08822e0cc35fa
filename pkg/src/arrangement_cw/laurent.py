"""Sparse integer Laurent polynomials in q1..qn."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exponent = Tuple[int, ...]


class ZeroWeightError(ZeroDivisionError):
    pass


class LaurentPoly:
    """Element of Z[q1^+-1, ..., qn^+-1].

    Stored as ``{exponent vector: nonzero coefficient}``.  Instances are
    treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
        self.terms: Dict[Exponent, int] = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars: int, exponent: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exponent): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPoly":
        """``q_i`` with 1-based ``i``."""
        return cls.monomial(nvars, [int(j == i - 1) for j in range(nvars)])

    def _check(self, other: "LaurentPoly"):
        if other.nvars != self.nvars:
            raise ValueError("Laurent polynomials over different variable sets")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self.nvars) * other
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.one(self.nvars) * other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit monomial."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (e, c), = self.terms.items()
        if c not in (1, -1):
            raise ValueError("coefficient is not a unit")
        return LaurentPoly(self.nvars, {tuple(-a for a in e): c})

    def invert_variables(self) -> "LaurentPoly":
        """Substitute ``q_i -> q_i^-1``."""
        return LaurentPoly(self.nvars, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def evaluate(self, values: Sequence) -> Fraction:
        values = [Fraction(v) for v in values]
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        if any(v == 0 for v in values):
            raise ZeroWeightError("weights must be nonzero")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, a in zip(values, e):
                if a:
                    term *= v ** a
            total += term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = [f"q{i}" if a == 1 else f"q{i}^{a}"
                       for i, a in enumerate(e, start=1) if a]
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


_TERM = re.compile(r"^(?:(\d+)\*?)?((?:q\d+(?:\^-?\d+)?\*?)*)$")
_FACTOR = re.compile(r"q(\d+)(?:\^(-?\d+))?")


def parse_laurent(text: str, nvars: int) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)``; also tolerant of missing spaces."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LaurentPoly.zero(nvars)
    out: Dict[Exponent, int] = {}
    # split on +/- that are not part of an exponent
    for piece in re.split(r"(?<!\^)(?=[+-])", s):
        if not piece:
            continue
        sgn, body = (piece[0], piece[1:]) if piece[0] in "+-" else ("+", piece)
        m = _TERM.match(body)
        if not m:
            raise ValueError(f"cannot parse Laurent term {body!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        e = [0] * nvars
        for idx, exp in _FACTOR.findall(m.group(2) or ""):
            i = int(idx) - 1
            if not 0 <= i < nvars:
                raise ValueError(f"variable q{idx} out of range")
            e[i] += int(exp) if exp else 1
        if not m.group(2) and not m.group(1):
            raise ValueError(f"cannot parse Laurent term {body!r}")
        e = tuple(e)
        out[e] = out.get(e, 0) + (-coeff if sgn == "-" else coeff)
    return LaurentPoly(nvars, out)


def laurent_sum(items: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    total = LaurentPoly.zero(nvars)
    for x in items:
        total = total + x
    return total
